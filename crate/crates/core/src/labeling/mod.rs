//! Vertex labelings, the consecutive-sum SEM test, complements, completion to
//! full edge-magic labelings, and counterdiagonal diagnostics.

mod diagonal;
mod magic;
mod record;

use std::collections::BTreeMap;

use thiserror::Error;

use crate::graph::{AdjacencyMatrix, Digraph, Graph};

pub use diagonal::{counterdiagonal_profile, rotate_pi, CounterdiagonalProfile};
pub use magic::{complete_to_edge_magic, verify_edge_magic, FullLabeling};
pub use record::{LabelingRecord, RecordError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LabelingError {
    #[error("label {label} outside [1, {order}]")]
    LabelOutOfRange { label: usize, order: usize },
    #[error("label {0} assigned to more than one vertex")]
    DuplicateLabel(usize),
    #[error("labeling has {labeling} entries but the graph has {graph} vertices")]
    OrderMismatch { labeling: usize, graph: usize },
    #[error("labeling is not super edge-magic")]
    NotSem,
}

/// A bijection from vertices `[1, p]` to labels `[1, p]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexLabeling {
    labels: Vec<usize>,
}

impl VertexLabeling {
    /// `labels[v - 1]` is the label of vertex `v`.
    pub fn new(labels: Vec<usize>) -> Result<Self, LabelingError> {
        let p = labels.len();
        let mut seen = vec![false; p];
        for &l in &labels {
            if l == 0 || l > p {
                return Err(LabelingError::LabelOutOfRange { label: l, order: p });
            }
            if std::mem::replace(&mut seen[l - 1], true) {
                return Err(LabelingError::DuplicateLabel(l));
            }
        }
        Ok(VertexLabeling { labels })
    }

    pub fn identity(p: usize) -> Self {
        VertexLabeling { labels: (1..=p).collect() }
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn label(&self, v: usize) -> usize {
        self.labels[v - 1]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.labels
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.labels
    }

    /// `x ↦ p + 1 - f(x)`.
    pub fn complement(&self) -> Self {
        let p = self.order();
        VertexLabeling { labels: self.labels.iter().map(|&l| p + 1 - l).collect() }
    }

    /// The vertex carrying each label: `inverse()[l - 1] = v` iff `f(v) = l`.
    pub fn inverse(&self) -> Vec<usize> {
        let mut inv = vec![0; self.order()];
        for (i, &l) in self.labels.iter().enumerate() {
            inv[l - 1] = i + 1;
        }
        inv
    }
}

/// Free-function form of [`VertexLabeling::complement`].
pub fn complement(f: &VertexLabeling) -> VertexLabeling {
    f.complement()
}

/// The interval `[min, min + width - 1]` of induced sums of a SEM labeling.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SumWindow {
    pub min: usize,
    pub width: usize,
}

impl SumWindow {
    pub fn max(&self) -> usize {
        self.min + self.width - 1
    }
}

fn check_order(g: &Graph, f: &VertexLabeling) {
    assert_eq!(
        g.order(),
        f.order(),
        "labeling of order {} applied to a graph of order {}",
        f.order(),
        g.order()
    );
}

/// Distinct induced sums with multiplicities, ascending.
///
/// # Panics
///
/// If the labeling and graph orders differ.
pub fn induced_sums(g: &Graph, f: &VertexLabeling) -> Vec<(usize, usize)> {
    check_order(g, f);
    let mut counts = BTreeMap::new();
    for (u, v) in g.edges() {
        *counts.entry(f.label(u) + f.label(v)).or_insert(0) += 1;
    }
    counts.into_iter().collect()
}

/// The sum window when the `q` induced sums are distinct and consecutive.
///
/// Edgeless graphs have no window and yield `None`.
pub fn sem_window(g: &Graph, f: &VertexLabeling) -> Option<SumWindow> {
    check_order(g, f);
    let q = g.size();
    if q == 0 {
        return None;
    }
    let mut seen = vec![false; 2 * g.order() + 1];
    let (mut lo, mut hi) = (usize::MAX, 0);
    for (u, v) in g.edges() {
        let s = f.label(u) + f.label(v);
        if std::mem::replace(&mut seen[s], true) {
            return None;
        }
        lo = lo.min(s);
        hi = hi.max(s);
    }
    (hi - lo + 1 == q).then_some(SumWindow { min: lo, width: q })
}

pub fn is_sem(g: &Graph, f: &VertexLabeling) -> bool {
    sem_window(g, f).is_some()
}

/// `A(D_f)`: entry `(f(a), f(b))` is 1 iff `(a, b)` is an arc; identity when `f` is absent.
///
/// # Panics
///
/// If the labeling and digraph orders differ.
pub fn adjacency_matrix(d: &Digraph, f: Option<&VertexLabeling>) -> AdjacencyMatrix {
    match f {
        None => AdjacencyMatrix::of(d),
        Some(f) => {
            assert_eq!(d.order(), f.order(), "labeling order differs from digraph order");
            AdjacencyMatrix::relabeled(d, f.as_slice())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn lk1n(n: usize) -> Graph {
        Graph::new(n + 1, std::iter::once((1, 1)).chain((2..=n + 1).map(|v| (1, v)))).unwrap()
    }

    fn fig1() -> (Graph, VertexLabeling) {
        let g = Graph::new(6, [(1, 1), (1, 2), (3, 3), (3, 4), (5, 5), (5, 6)]).unwrap();
        (g, VertexLabeling::new(vec![3, 6, 5, 2, 4, 1]).unwrap())
    }

    #[test]
    fn bijectivity_enforced() {
        assert_eq!(VertexLabeling::new(vec![1, 1]), Err(LabelingError::DuplicateLabel(1)));
        assert_eq!(
            VertexLabeling::new(vec![1, 3]),
            Err(LabelingError::LabelOutOfRange { label: 3, order: 2 })
        );
        assert_eq!(
            VertexLabeling::new(vec![0]),
            Err(LabelingError::LabelOutOfRange { label: 0, order: 1 })
        );
    }

    #[test]
    fn sums_of_star_with_loop() {
        let f = VertexLabeling::identity(3);
        assert_eq!(induced_sums(&lk1n(2), &f), vec![(2, 1), (3, 1), (4, 1)]);
    }

    #[test]
    fn sums_of_two_loops() {
        let g = Graph::new(2, [(1, 1), (2, 2)]).unwrap();
        let f = VertexLabeling::identity(2);
        assert_eq!(induced_sums(&g, &f), vec![(2, 1), (4, 1)]);
        assert_eq!(sem_window(&g, &f), None);
    }

    #[test]
    fn single_edge_sum() {
        let g = Graph::new(2, [(1, 2)]).unwrap();
        assert_eq!(induced_sums(&g, &VertexLabeling::identity(2)), vec![(3, 1)]);
    }

    #[test]
    fn repeated_sum_fails_fast() {
        // Path 1-2-3 labelled 1,3,2 gives sums 4 and 5; labelled 2,1,2 is not a bijection,
        // so use 4 vertices with sums 5,5.
        let g = Graph::new(4, [(1, 4), (2, 3)]).unwrap();
        assert_eq!(induced_sums(&g, &VertexLabeling::identity(4)), vec![(5, 2)]);
        assert!(!is_sem(&g, &VertexLabeling::identity(4)));
    }

    #[test]
    fn fig1_window() {
        let (g, f) = fig1();
        assert_eq!(sem_window(&g, &f), Some(SumWindow { min: 5, width: 6 }));
        assert_eq!(sem_window(&g, &f).unwrap().max(), 10);
    }

    #[test]
    fn fig1_complement() {
        let (g, f) = fig1();
        let fc = f.complement();
        assert_eq!(fc.as_slice(), &[4, 1, 2, 5, 3, 6]);
        assert!(is_sem(&g, &fc));
        assert_eq!(fc.complement(), f);
    }

    #[test]
    fn complement_value() {
        let f = VertexLabeling::new(vec![3, 1, 2, 4, 5, 6]).unwrap();
        assert_eq!(f.complement().label(1), 4);
    }

    #[test]
    fn labelled_matrix_of_lk11() {
        // center 1 -> label 2, leaf 2 -> label 1
        let d = Digraph::new(2, [(1, 1), (1, 2)]).unwrap();
        let f = VertexLabeling::new(vec![2, 1]).unwrap();
        assert_eq!(adjacency_matrix(&d, Some(&f)).rows(), vec!["00", "11"]);
        assert_eq!(adjacency_matrix(&d, None).rows(), vec!["11", "00"]);
    }

    fn arb_graph_and_labeling() -> impl Strategy<Value = (Graph, VertexLabeling)> {
        (1usize..9)
            .prop_flat_map(|p| {
                (
                    Just(p),
                    prop::collection::btree_set((1..=p, 1..=p).prop_map(|(u, v)| (u.min(v), u.max(v))), 0..=p + 2),
                    Just((1..=p).collect::<Vec<_>>()).prop_shuffle(),
                )
            })
            .prop_map(|(p, edges, labels)| (Graph::new(p, edges).unwrap(), VertexLabeling::new(labels).unwrap()))
    }

    proptest! {
        #[test]
        fn complement_is_an_involution((_, f) in arb_graph_and_labeling()) {
            prop_assert_eq!(complement(&complement(&f)), f);
        }

        #[test]
        fn complement_preserves_sem((g, f) in arb_graph_and_labeling()) {
            prop_assert_eq!(is_sem(&g, &f), is_sem(&g, &f.complement()));
            if let Some(w) = sem_window(&g, &f) {
                // sums map s -> 2(p + 1) - s, so the window flips.
                let wc = sem_window(&g, &f.complement()).unwrap();
                prop_assert_eq!(wc.min, 2 * (g.order() + 1) - w.max());
            }
        }

        #[test]
        fn any_bijection_labels_a_star_with_loop(n in 1usize..12, seed in any::<u64>()) {
            use rand::{seq::SliceRandom, SeedableRng};
            let mut labels: Vec<usize> = (1..=n + 1).collect();
            labels.shuffle(&mut rand::rngs::StdRng::seed_from_u64(seed));
            prop_assert!(is_sem(&lk1n(n), &VertexLabeling::new(labels).unwrap()));
        }
    }
}
