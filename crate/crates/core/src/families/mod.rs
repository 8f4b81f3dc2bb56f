//! Certified constructors for SEM families of equal order and size.
//!
//! Each constructor lays out the graph component by component, assigns the
//! labeling prescribed for that family, and refuses to return unless the
//! consecutive-sum check passes.

mod deer;

use std::fmt;

use thiserror::Error;

use crate::graph::{disjoint_union, Graph, GraphError};
use crate::labeling::{sem_window, SumWindow, VertexLabeling};

pub use deer::{deer, DeerSpec};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("bad parameter: {0}")]
    BadParam(String),
    #[error("{0}: constructed labeling is not super edge-magic (suspected transcription mismatch)")]
    NotSem(Provenance),
    #[error("{0}: order and size differ")]
    UnequalOrderSize(Provenance),
    #[error("no caterpillar sweep labeling verified for deer spine {0:?}")]
    LabelingFailed(Vec<usize>),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Which constructor produced a [`CertifiedLabeledGraph`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Provenance {
    /// `2LK_{1,1} ∪ LK_{1,n}`.
    TwoLk11Lk1n { n: usize },
    /// `2LK_{1,m} ∪ LK_{1,n}`.
    TwoLk1mLk1n { m: usize, n: usize },
    /// `(2s+1) LK_{1,n}`.
    OddCopiesLk1n { s: usize, n: usize },
    /// `LK_{1,m} ∪ 2LK_{1,n} ∪ (2s) LK_{1,1}`.
    MixedStars { m: usize, n: usize, s: usize },
    Deer { spine: Vec<usize> },
    OddCycle { k: usize },
    /// Product of a labeled host with a labeled family.
    Product,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::TwoLk11Lk1n { n } => write!(f, "2lk11-lk1n(n={n})"),
            Provenance::TwoLk1mLk1n { m, n } => write!(f, "2lk1m-lk1n(m={m},n={n})"),
            Provenance::OddCopiesLk1n { s, n } => write!(f, "odd-lk1n(s={s},n={n})"),
            Provenance::MixedStars { m, n, s } => write!(f, "mixed-stars(m={m},n={n},s={s})"),
            Provenance::Deer { spine } => write!(f, "deer({spine:?})"),
            Provenance::OddCycle { k } => write!(f, "cycle(k={k})"),
            Provenance::Product => f.write_str("product"),
        }
    }
}

/// A graph together with a labeling that has been checked to be SEM.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertifiedLabeledGraph {
    graph: Graph,
    labeling: VertexLabeling,
    window: SumWindow,
    provenance: Provenance,
}

impl CertifiedLabeledGraph {
    /// Verifies `labeling` on `graph`; order must equal size.
    pub fn certify(graph: Graph, labeling: VertexLabeling, provenance: Provenance) -> Result<Self, FamilyError> {
        if graph.order() != graph.size() {
            return Err(FamilyError::UnequalOrderSize(provenance));
        }
        match sem_window(&graph, &labeling) {
            Some(window) => Ok(CertifiedLabeledGraph { graph, labeling, window, provenance }),
            None => Err(FamilyError::NotSem(provenance)),
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn labeling(&self) -> &VertexLabeling {
        &self.labeling
    }

    pub fn window(&self) -> SumWindow {
        self.window
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }
}

/// `LK_{1,n}`: vertex 1 is the center (with the loop), leaves `2..=n+1`.
pub fn lk1n(n: usize) -> Graph {
    Graph::new(n + 1, std::iter::once((1, 1)).chain((2..=n + 1).map(|v| (1, v))))
        .expect("star with loop is a valid graph")
}

/// The loop graph `L`.
pub fn loop_graph() -> Graph {
    lk1n(0)
}

/// The cycle `C_k` on `1..=k` with edges `{i, i+1}` and `{k, 1}`; `k >= 3`.
pub fn cycle(k: usize) -> Result<Graph, FamilyError> {
    if k < 3 {
        return Err(FamilyError::BadParam(format!("cycle length must be at least 3, got {k}")));
    }
    Ok(Graph::new(k, (1..=k).map(|i| (i, i % k + 1)))?)
}

/// Caterpillar with spine `1..=L` followed by the leaves of each spine vertex in turn.
pub fn caterpillar(spine_leaf_counts: &[usize]) -> Result<Graph, FamilyError> {
    if spine_leaf_counts.is_empty() {
        return Err(FamilyError::BadParam("caterpillar spine must be non-empty".into()));
    }
    Ok(caterpillar_layout(spine_leaf_counts).0)
}

/// Graph plus, for each spine vertex, the vertex ids of its leaves.
pub(crate) fn caterpillar_layout(spine: &[usize]) -> (Graph, Vec<Vec<usize>>) {
    let len = spine.len();
    let mut edges: Vec<(usize, usize)> = (1..len).map(|i| (i, i + 1)).collect();
    let mut next = len + 1;
    let mut leaves = Vec::with_capacity(len);
    for (i, &count) in spine.iter().enumerate() {
        let ids: Vec<usize> = (next..next + count).collect();
        edges.extend(ids.iter().map(|&leaf| (i + 1, leaf)));
        next += count;
        leaves.push(ids);
    }
    (Graph::new(next - 1, edges).expect("caterpillar layout is simple"), leaves)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Primitive {
    Loop,
    Lk1n(usize),
    Cycle(usize),
    Caterpillar(Vec<usize>),
}

pub fn build_primitive(kind: &Primitive) -> Result<Graph, FamilyError> {
    match kind {
        Primitive::Loop => Ok(loop_graph()),
        Primitive::Lk1n(0) => Err(FamilyError::BadParam("LK_{1,n} needs n >= 1".into())),
        Primitive::Lk1n(n) => Ok(lk1n(*n)),
        Primitive::Cycle(k) => cycle(*k),
        Primitive::Caterpillar(spec) => caterpillar(spec),
    }
}

fn require(ok: bool, what: impl FnOnce() -> String) -> Result<(), FamilyError> {
    if ok {
        Ok(())
    } else {
        Err(FamilyError::BadParam(what()))
    }
}

/// Disjoint union of stars with loops given as `(center label, leaf labels)`,
/// every label shifted by `shift`. Components keep the given order.
fn labeled_stars(components: &[(i64, Vec<i64>)], shift: i64) -> (Graph, VertexLabeling) {
    let parts: Vec<Graph> = components.iter().map(|(_, leaves)| lk1n(leaves.len())).collect();
    let union = disjoint_union(&parts);
    let labels: Vec<usize> = components
        .iter()
        .flat_map(|(c, leaves)| std::iter::once(c).chain(leaves))
        .map(|&l| usize::try_from(l + shift).expect("shifted labels are positive"))
        .collect();
    let labeling = VertexLabeling::new(labels).expect("family labels form a bijection");
    (union.graph, labeling)
}

fn base_components(n: usize) -> Vec<(i64, Vec<i64>)> {
    // Remaining labels of [1, n+5] once 2..=6 are used, ascending.
    let leaves: Vec<i64> = std::iter::once(1).chain(7..=(n as i64 + 5)).collect();
    vec![(3, vec![6]), (5, vec![2]), (4, leaves)]
}

/// `2LK_{1,1} ∪ LK_{1,n}`, `n >= 1`: centers 3, 5, 4 with partners 6, 2 and the
/// remaining labels of `[1, n+5]` on the big star.
pub fn two_lk11_and_lk1n(n: usize) -> Result<CertifiedLabeledGraph, FamilyError> {
    require(n >= 1, || format!("n must be >= 1, got {n}"))?;
    let (g, f) = labeled_stars(&base_components(n), 0);
    CertifiedLabeledGraph::certify(g, f, Provenance::TwoLk11Lk1n { n })
}

/// `2LK_{1,m} ∪ LK_{1,n}`: the `m = 1` labeling, with `m - 1` new leaves on the
/// 3-center labelled `0, -2, …, -(2m-4)` and on the 5-center `-1, -3, …, -(2m-3)`,
/// then everything shifted by `2m - 2`.
pub fn two_lk1m_and_lk1n(m: usize, n: usize) -> Result<CertifiedLabeledGraph, FamilyError> {
    require(m >= 1 && n >= 1, || format!("m and n must be >= 1, got m={m}, n={n}"))?;
    let mut comps = base_components(n);
    let extra = m as i64 - 1;
    comps[0].1.extend((0..extra).map(|t| -2 * t));
    comps[1].1.extend((0..extra).map(|t| -(2 * t + 1)));
    let (g, f) = labeled_stars(&comps, 2 * m as i64 - 2);
    CertifiedLabeledGraph::certify(g, f, Provenance::TwoLk1mLk1n { m, n })
}

/// `(2s+1) LK_{1,n}`. Component `i` has center `v_i` and leaves `v_i^1..v_i^n`:
///
/// ```text
/// f(v_i)   = s + i
/// f(v_i^1) = i - s - 1                 i in [s+2, 2s+1]
/// f(v_i^1) = f(v_i) + (2s+1)           i in [1, s+1]
/// f(v_i^j) = f(v_i^1) + (2s+1)(j-1)    i in [1, s+1],    j >= 2
/// f(v_i^j) = f(v_i)   + (2s+1)(j-1)    i in [s+2, 2s+1], j >= 2
/// ```
pub fn odd_copies_lk1n(s: usize, n: usize) -> Result<CertifiedLabeledGraph, FamilyError> {
    require(n >= 1, || format!("n must be >= 1, got {n}"))?;
    let (s_, t) = (s as i64, 2 * s as i64 + 1);
    let comps: Vec<(i64, Vec<i64>)> = (1..=t)
        .map(|i| {
            let center = s_ + i;
            let low = i <= s_ + 1;
            let first = if low { center + t } else { i - s_ - 1 };
            let leaves = (1..=n as i64)
                .map(|j| match (j, low) {
                    (1, _) => first,
                    (_, true) => first + t * (j - 1),
                    (_, false) => center + t * (j - 1),
                })
                .collect();
            (center, leaves)
        })
        .collect();
    let (g, f) = labeled_stars(&comps, 0);
    CertifiedLabeledGraph::certify(g, f, Provenance::OddCopiesLk1n { s, n })
}

/// `LK_{1,n}` with an arbitrary bijection; every labeling of a single star with
/// loop is SEM.
pub fn lk1n_with_labeling(n: usize, labeling: VertexLabeling) -> Result<CertifiedLabeledGraph, FamilyError> {
    require(n >= 1, || format!("n must be >= 1, got {n}"))?;
    require(labeling.order() == n + 1, || {
        format!("labeling has order {}, expected {}", labeling.order(), n + 1)
    })?;
    CertifiedLabeledGraph::certify(lk1n(n), labeling, Provenance::OddCopiesLk1n { s: 0, n })
}

/// `LK_{1,m} ∪ 2LK_{1,n} ∪ (2s) LK_{1,1}` for `m, n, s >= 1`.
///
/// Centers `v_1..v_{2s+3}`; `v_1` and `v_3` carry `n` leaves, `v_2` carries `m`,
/// the rest one each. Labels over `[-2n+3, 4s+m+5]`:
///
/// ```text
/// f(v_i)   = 2s+1+i          i in [1, 3]
/// f(v_i)   = s-2+i           i in [4, s+3]
/// f(v_i)   = s+1+i           i in [s+4, 2s+3]
/// f(v_i^1) = f(v_i) + (2s+3) i in [1, 2]
/// f(v_3^1) = f(v_3) - (2s+3)
/// f(v_1^j) = -2j + 4         j in [2, n]
/// f(v_2^k) = f(v_2^1) + k-1  k in [2, m]
/// f(v_3^j) = -2j + 3         j in [2, n]
/// f(v_i^1) = f(v_i) + (2s+3) i in [4, s+3]
/// f(v_i^1) = f(v_i) - (2s+3) i in [s+4, 2s+3]
/// ```
///
/// then shifted by `2n - 2`. Components are laid out as `v_2, v_1, v_3, v_4, …`.
pub fn mixed_stars(m: usize, n: usize, s: usize) -> Result<CertifiedLabeledGraph, FamilyError> {
    require(m >= 1 && n >= 1 && s >= 1, || {
        format!("m, n, s must all be >= 1, got m={m}, n={n}, s={s}")
    })?;
    let (m_, n_, s_) = (m as i64, n as i64, s as i64);
    let t = 2 * s_ + 3;
    let center = |i: i64| -> i64 {
        if i <= 3 {
            2 * s_ + 1 + i
        } else if i <= s_ + 3 {
            s_ - 2 + i
        } else {
            s_ + 1 + i
        }
    };
    let v1 = center(1);
    let v2 = center(2);
    let v3 = center(3);
    let v1_leaves: Vec<i64> = std::iter::once(v1 + t).chain((2..=n_).map(|j| -2 * j + 4)).collect();
    let v2_first = v2 + t;
    let v2_leaves: Vec<i64> = std::iter::once(v2_first).chain((2..=m_).map(|k| v2_first + k - 1)).collect();
    let v3_leaves: Vec<i64> = std::iter::once(v3 - t).chain((2..=n_).map(|j| -2 * j + 3)).collect();

    let mut comps = vec![(v2, v2_leaves), (v1, v1_leaves), (v3, v3_leaves)];
    for i in 4..=2 * s_ + 3 {
        let c = center(i);
        let leaf = if i <= s_ + 3 { c + t } else { c - t };
        comps.push((c, vec![leaf]));
    }
    let (g, f) = labeled_stars(&comps, 2 * n_ - 2);
    CertifiedLabeledGraph::certify(g, f, Provenance::MixedStars { m, n, s })
}

/// SEM labeling of the odd cycle `C_k`: going round the cycle, labels
/// `1, r+2, 2, r+3, …, r+1` with `k = 2r + 1`.
pub fn odd_cycle(k: usize) -> Result<CertifiedLabeledGraph, FamilyError> {
    require(k >= 3 && k % 2 == 1, || format!("k must be odd and >= 3, got {k}"))?;
    let r = (k - 1) / 2;
    let labels = (1..=k)
        .map(|v| if v % 2 == 1 { v.div_ceil(2) } else { r + 1 + v / 2 })
        .collect();
    let labeling = VertexLabeling::new(labels).expect("interleaved labels are a bijection");
    CertifiedLabeledGraph::certify(cycle(k)?, labeling, Provenance::OddCycle { k })
}
