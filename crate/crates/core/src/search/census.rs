use std::collections::BTreeSet;

use super::{find_sem, Mode, Outcome, SearchError, SearchLimits};
use crate::graph::{canonical_form, CanonicalForm, Graph};
use crate::labeling::VertexLabeling;

/// Largest order accepted by [`census_equal_order_size`].
pub const MAX_CENSUS_ORDER: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusEntry {
    /// Canonical representative of the isomorphism class.
    pub graph: Graph,
    pub outcome: Outcome<VertexLabeling>,
}

impl CensusEntry {
    pub fn is_sem(&self) -> bool {
        self.outcome.witness().is_some()
    }
}

/// Isomorphism classes of graphs with `p` vertices and `p` edges (loops
/// allowed, counted once), each with its SEM search outcome.
///
/// Classes are grown one edge at a time and deduplicated by canonical form.
/// Entries are sorted by canonical form.
pub fn census_equal_order_size(p: usize, limits: SearchLimits) -> Result<Vec<CensusEntry>, SearchError> {
    if p > MAX_CENSUS_ORDER {
        return Err(SearchError::OrderTooLarge { order: p, bound: MAX_CENSUS_ORDER });
    }
    if p == 0 {
        return Ok(Vec::new());
    }
    let slots: Vec<(usize, usize)> = (1..=p).flat_map(|u| (u..=p).map(move |v| (u, v))).collect();
    let mut level: BTreeSet<CanonicalForm> = BTreeSet::new();
    level.insert(canonical_form(&Graph::empty(p).expect("p >= 1")));
    for _ in 0..p {
        let mut next = BTreeSet::new();
        for form in &level {
            let g = form.to_graph();
            for &(u, v) in &slots {
                if g.has_edge(u, v) {
                    continue;
                }
                let h = Graph::new(p, g.edges().chain([(u, v)])).expect("new edge");
                next.insert(canonical_form(&h));
            }
        }
        level = next;
    }
    level
        .into_iter()
        .map(|form| {
            let graph = form.to_graph();
            let outcome = find_sem(&graph, Mode::First, limits)?.outcome;
            Ok(CensusEntry { graph, outcome })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use itertools::Itertools;

    /// Classes by brute force: all `p`-subsets of slots, keyed by the smallest
    /// sorted edge list over every vertex permutation.
    fn brute_classes(p: usize) -> BTreeSet<Vec<(usize, usize)>> {
        let slots: Vec<(usize, usize)> = (1..=p).flat_map(|u| (u..=p).map(move |v| (u, v))).collect();
        slots
            .into_iter()
            .combinations(p)
            .map(|edges| {
                (1..=p)
                    .permutations(p)
                    .map(|perm| {
                        let mut e: Vec<(usize, usize)> = edges
                            .iter()
                            .map(|&(u, v)| {
                                let (a, b) = (perm[u - 1], perm[v - 1]);
                                (a.min(b), a.max(b))
                            })
                            .collect();
                        e.sort();
                        e
                    })
                    .min()
                    .unwrap()
            })
            .collect()
    }

    #[test]
    fn class_counts_match_brute_force() {
        for p in 1..=4 {
            let census = census_equal_order_size(p, SearchLimits::default()).unwrap();
            assert_eq!(census.len(), brute_classes(p).len(), "p={p}");
            for e in &census {
                assert_eq!(e.graph.order(), p);
                assert_eq!(e.graph.size(), p);
                assert!(!matches!(e.outcome, Outcome::Aborted));
            }
        }
    }

    #[test]
    fn small_orders() {
        let c1 = census_equal_order_size(1, SearchLimits::default()).unwrap();
        assert_eq!(c1.len(), 1);
        assert!(c1[0].is_sem());
        // LK_{1,1} and two loops; only the first is SEM
        let c2 = census_equal_order_size(2, SearchLimits::default()).unwrap();
        assert_eq!(c2.len(), 2);
        assert_eq!(c2.iter().filter(|e| e.is_sem()).count(), 1);
    }

    #[test]
    fn bound() {
        assert!(matches!(
            census_equal_order_size(9, SearchLimits::default()),
            Err(SearchError::OrderTooLarge { .. })
        ));
    }
}
