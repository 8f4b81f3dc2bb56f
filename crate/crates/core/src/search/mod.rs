//! Backtracking search for SEM labelings and exhaustive non-existence certificates.
//!
//! [`find_sem`] assigns labels vertex by vertex and abandons a branch as soon as
//! an induced sum repeats or the placed sums spread over more than `q`
//! consecutive values. When it reports `Exhausted` it has covered the whole
//! bijection space, which certifies that the graph is not SEM.

mod census;
mod edge_magic;
mod report;
mod sem;
mod snk;

use std::time::{Duration, Instant};

use thiserror::Error;

use crate::families;
use crate::graph::{disjoint_union, Graph};
use crate::labeling::VertexLabeling;

pub use census::{census_equal_order_size, CensusEntry};
pub use edge_magic::find_edge_magic;
pub use report::ReportRecord;
pub use sem::{enumerate_unpruned, find_sem};
pub use snk::{enumerate_snk, feasible_min_sums};

/// Largest order the bitmask search supports (sums up to `2p` must fit in 128 bits).
pub const HARD_MAX_ORDER: usize = 63;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("order {order} exceeds the search bound {bound}")]
    OrderTooLarge { order: usize, bound: usize },
    #[error("graph has no edges")]
    NoEdges,
    #[error("no labeled digraph of order {n} has minimum induced sum {k}")]
    InfeasibleWindow { n: usize, k: usize },
    #[error("pruned search says {pruned}, unpruned enumeration says {unpruned}")]
    PruningMismatch { pruned: &'static str, unpruned: &'static str },
    #[error("search produced a labeling that fails the SEM check: {0:?}")]
    InvalidWitness(Vec<usize>),
    #[error(transparent)]
    Family(#[from] families::FamilyError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    /// Stop at the first witness.
    First,
    /// Lexicographically smallest labeling vector, `labels[0]` most significant.
    Canonical,
    /// Count every witness.
    All,
}

impl Mode {
    pub fn default_max_order(self) -> usize {
        match self {
            Mode::First | Mode::Canonical => 24,
            Mode::All => 12,
        }
    }
}

/// Resource limits for a search run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchLimits {
    pub node_budget: u64,
    pub timeout: Option<Duration>,
    /// Worker threads for branch-parallel exploration; 1 is serial.
    pub threads: usize,
    /// Overrides [`Mode::default_max_order`].
    pub max_order: Option<usize>,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            node_budget: 1_000_000_000,
            timeout: Some(Duration::from_secs(300)),
            threads: 1,
            max_order: None,
        }
    }
}

impl SearchLimits {
    pub(crate) fn order_bound(&self, mode: Mode) -> usize {
        self.max_order.unwrap_or(mode.default_max_order()).min(HARD_MAX_ORDER)
    }

    pub(crate) fn deadline(&self, start: Instant) -> Option<Instant> {
        self.timeout.map(|t| start + t)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome<W> {
    Witness(W),
    Exhausted,
    /// Budget or timeout hit; says nothing about existence.
    Aborted,
}

impl<W> Outcome<W> {
    pub fn name(&self) -> &'static str {
        match self {
            Outcome::Witness(_) => "witness",
            Outcome::Exhausted => "exhausted",
            Outcome::Aborted => "aborted",
        }
    }

    /// 0 = witness, 1 = exhausted, 3 = aborted.
    pub fn exit_code(&self) -> u8 {
        match self {
            Outcome::Witness(_) => 0,
            Outcome::Exhausted => 1,
            Outcome::Aborted => 3,
        }
    }

    pub fn witness(&self) -> Option<&W> {
        match self {
            Outcome::Witness(w) => Some(w),
            _ => None,
        }
    }

    pub fn is_exhausted(&self) -> bool {
        matches!(self, Outcome::Exhausted)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchReport<W = VertexLabeling> {
    pub outcome: Outcome<W>,
    pub nodes: u64,
    pub elapsed: Duration,
    pub limits: SearchLimits,
    /// Number of witnesses, in [`Mode::All`] only.
    pub solutions: Option<u64>,
}

/// Exhaustive refutation of one instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub report: SearchReport,
    /// The unpruned enumeration, when it was run.
    pub unpruned: Option<SearchReport>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CertifyOptions {
    pub limits: SearchLimits,
    /// Re-run unpruned up to this order and require the same answer.
    pub unpruned_up_to: usize,
}

impl Default for CertifyOptions {
    fn default() -> Self {
        CertifyOptions {
            limits: SearchLimits { max_order: Some(12), ..SearchLimits::default() },
            unpruned_up_to: 8,
        }
    }
}

/// Runs the pruned search and, for small orders, the unpruned enumeration as a
/// cross-check. Outcome `Exhausted` certifies that `g` is not SEM.
pub fn certify_not_sem(g: &Graph, opts: CertifyOptions) -> Result<Certificate, SearchError> {
    let report = find_sem(g, Mode::First, opts.limits)?;
    let unpruned = if g.order() <= opts.unpruned_up_to {
        let full = enumerate_unpruned(g, opts.limits)?;
        let comparable = !matches!(report.outcome, Outcome::Aborted) && !matches!(full.outcome, Outcome::Aborted);
        let pruned_found = report.outcome.witness().is_some();
        let full_found = full.outcome.witness().is_some();
        if comparable && pruned_found != full_found {
            return Err(SearchError::PruningMismatch {
                pruned: report.outcome.name(),
                unpruned: full.outcome.name(),
            });
        }
        Some(full)
    } else {
        None
    };
    Ok(Certificate { report, unpruned })
}

/// `(2s) LK_{1,n}`.
pub fn even_copies_lk1n(s: usize, n: usize) -> Result<Graph, SearchError> {
    if s == 0 || n == 0 {
        return Err(families::FamilyError::BadParam(format!("s and n must be >= 1, got s={s}, n={n}")).into());
    }
    let star = families::lk1n(n);
    Ok(disjoint_union(&vec![star; 2 * s]).graph)
}

/// Searches `(2s) LK_{1,n}` for a SEM labeling. The report is data only.
pub fn explore_even_copies(s: usize, n: usize, limits: SearchLimits) -> Result<SearchReport, SearchError> {
    let g = even_copies_lk1n(s, n)?;
    find_sem(&g, Mode::First, limits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::lk1n;

    fn union(parts: &[Graph]) -> Graph {
        disjoint_union(parts).graph
    }

    #[test]
    fn certify_small_instances() {
        let l = families::loop_graph();
        for g in [
            union(&[l.clone(), lk1n(1)]),
            union(&[l.clone(), l.clone(), lk1n(1)]),
            union(&[lk1n(2), lk1n(3)]),
        ] {
            let cert = certify_not_sem(&g, CertifyOptions::default()).unwrap();
            assert!(cert.report.outcome.is_exhausted(), "{g}");
            assert!(cert.unpruned.unwrap().outcome.is_exhausted());
        }
    }

    #[test]
    fn unpruned_enumeration_covers_all_bijections() {
        let g = union(&[families::loop_graph(), lk1n(1)]);
        let full = enumerate_unpruned(&g, SearchLimits::default()).unwrap();
        assert_eq!(full.nodes, 6);
        assert_eq!(full.solutions, Some(0));
    }

    #[test]
    fn certify_reports_witness_for_sem_graph() {
        let cert = certify_not_sem(&lk1n(3), CertifyOptions::default()).unwrap();
        assert!(cert.report.outcome.witness().is_some());
    }

    #[test]
    fn exit_codes() {
        assert_eq!(Outcome::Witness(()).exit_code(), 0);
        assert_eq!(Outcome::<()>::Exhausted.exit_code(), 1);
        assert_eq!(Outcome::<()>::Aborted.exit_code(), 3);
    }

    #[test]
    fn explore_emits_reports() {
        for (s, n) in [(1, 1), (1, 2), (2, 1)] {
            let r = explore_even_copies(s, n, SearchLimits::default()).unwrap();
            assert_ne!(r.outcome, Outcome::Aborted);
            if let Some(w) = r.outcome.witness() {
                assert!(crate::labeling::is_sem(&even_copies_lk1n(s, n).unwrap(), w));
            }
        }
        // Two copies of LK_{1,1} are a refuted instance of the two-star family.
        assert!(explore_even_copies(1, 1, SearchLimits::default()).unwrap().outcome.is_exhausted());
    }
}
