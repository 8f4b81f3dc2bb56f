//! The `⊗_h` product of a host digraph with a family of labeled digraphs.
//!
//! Vertex `(a, i)` of `D ⊗_h Γ` is encoded as `n (a - 1) + i`, and
//! `((a, i), (b, j))` is an arc iff `(a, b)` is an arc of `D` and `(i, j)` is an
//! arc of the member `h(a, b)`.

pub mod io;

use std::collections::BTreeMap;

use thiserror::Error;

use crate::families::{self, CertifiedLabeledGraph, FamilyError};
use crate::graph::{corona, indegree_one_orientation, isomorphic, Arc, Digraph, Graph, GraphError};
use crate::labeling::{sem_window, SumWindow, VertexLabeling};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProductError {
    #[error("family is empty")]
    EmptyFamily,
    #[error("member {index}: {reason}")]
    NotInFamily { index: usize, reason: String },
    #[error("assignment does not cover arc ({0}, {1})")]
    MissingArc(usize, usize),
    #[error("assignment names arc ({0}, {1}) which is not in the host")]
    UnknownArc(usize, usize),
    #[error("assignment maps arc ({a}, {b}) to member {index}, family has {len}")]
    BadMember { a: usize, b: usize, index: usize, len: usize },
    #[error("host labeling is not super edge-magic on und(D)")]
    HostNotSem,
    #[error("canonical product labeling failed verification")]
    VerificationFailed,
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Labeled digraphs of order and size `n` on `[1, n]`, each with arc sums
/// exactly `k, k+1, …, k+n-1` (vertex name = label, a loop at `i` sums to `2i`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledFamily {
    n: usize,
    k: usize,
    members: Vec<Digraph>,
}

/// Minimum arc sum when the `n` arc sums of `d` are `n` consecutive integers.
fn consecutive_arc_sums(d: &Digraph) -> Result<usize, String> {
    let n = d.order();
    if d.size() != n {
        return Err(format!("has {} arcs, expected {n}", d.size()));
    }
    let mut seen = vec![false; 2 * n + 1];
    for (a, b) in d.arcs() {
        if std::mem::replace(&mut seen[a + b], true) {
            return Err(format!("arc sum {} repeats", a + b));
        }
    }
    let min = seen.iter().position(|&s| s).expect("n >= 1 arcs");
    if seen[min..min + n].iter().all(|&s| s) {
        Ok(min)
    } else {
        Err("arc sums are not consecutive".into())
    }
}

impl LabeledFamily {
    /// Validates every member and that they share one order and one minimum sum.
    pub fn new(members: Vec<Digraph>) -> Result<Self, ProductError> {
        let first = members.first().ok_or(ProductError::EmptyFamily)?;
        let n = first.order();
        let mut k = None;
        for (index, d) in members.iter().enumerate() {
            if d.order() != n {
                return Err(ProductError::NotInFamily {
                    index,
                    reason: format!("order {} differs from {n}", d.order()),
                });
            }
            let min = consecutive_arc_sums(d).map_err(|reason| ProductError::NotInFamily { index, reason })?;
            match k {
                None => k = Some(min),
                Some(k0) if k0 != min => {
                    return Err(ProductError::NotInFamily {
                        index,
                        reason: format!("minimum induced sum {min} differs from {k0}"),
                    })
                }
                _ => {}
            }
        }
        Ok(LabeledFamily { n, k: k.expect("non-empty"), members })
    }

    /// Orients a certified graph indegree-1 and renames each vertex by its label.
    pub fn member_from_certified(c: &CertifiedLabeledGraph) -> Result<Digraph, ProductError> {
        let d = indegree_one_orientation(c.graph())?;
        Ok(d.relabel(c.labeling().as_slice()))
    }

    pub fn from_certified(graphs: &[CertifiedLabeledGraph]) -> Result<Self, ProductError> {
        let members = graphs.iter().map(Self::member_from_certified).collect::<Result<_, _>>()?;
        LabeledFamily::new(members)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn members(&self) -> &[Digraph] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// `h: E(D) → Γ`, stored as member indices.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ArcAssignment {
    map: BTreeMap<Arc, usize>,
}

impl ArcAssignment {
    pub fn new() -> Self {
        ArcAssignment::default()
    }

    pub fn constant(d: &Digraph, member: usize) -> Self {
        ArcAssignment { map: d.arcs().map(|a| (a, member)).collect() }
    }

    pub fn from_fn(d: &Digraph, mut f: impl FnMut(Arc) -> usize) -> Self {
        ArcAssignment { map: d.arcs().map(|a| (a, f(a))).collect() }
    }

    pub fn insert(&mut self, arc: Arc, member: usize) {
        self.map.insert(arc, member);
    }

    pub fn get(&self, arc: Arc) -> Option<usize> {
        self.map.get(&arc).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Arc, usize)> + '_ {
        self.map.iter().map(|(&a, &m)| (a, m))
    }

    fn check(&self, d: &Digraph, len: usize) -> Result<(), ProductError> {
        for (a, b) in d.arcs() {
            match self.get((a, b)) {
                None => return Err(ProductError::MissingArc(a, b)),
                Some(index) if index >= len => return Err(ProductError::BadMember { a, b, index, len }),
                _ => {}
            }
        }
        if let Some(&(a, b)) = self.map.keys().find(|&&arc| !d.has_arc(arc.0, arc.1)) {
            return Err(ProductError::UnknownArc(a, b));
        }
        Ok(())
    }
}

fn product_with<'a>(d: &Digraph, n: usize, member: impl Fn(Arc) -> &'a Digraph) -> Digraph {
    let mut arcs = Vec::new();
    for (a, b) in d.arcs() {
        for (i, j) in member((a, b)).arcs() {
            arcs.push((n * (a - 1) + i, n * (b - 1) + j));
        }
    }
    Digraph::new(d.order() * n, arcs).expect("product arcs are distinct")
}

/// `D ⊗_h Γ`.
pub fn otimes_h(d: &Digraph, h: &ArcAssignment, fam: &LabeledFamily) -> Result<Digraph, ProductError> {
    h.check(d, fam.len())?;
    let n = fam.n();
    Ok(product_with(d, n, |arc| &fam.members[h.get(arc).expect("checked")]))
}

/// Kronecker product: `⊗_h` with a constant `h`; no labeling requirements.
pub fn kronecker(d1: &Digraph, d2: &Digraph) -> Digraph {
    product_with(d1, d2.order(), |_| d2)
}

/// A labeled `⊗_h` product with its verified window.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledProduct {
    pub digraph: Digraph,
    pub labeling: VertexLabeling,
    pub window: SumWindow,
}

/// Labels `(a, i)` with `n (f_D(a) - 1) + i` and checks the result is SEM on
/// `und(D ⊗_h Γ)` before returning it.
///
/// An arc pairing a host arc of sum `σ` with a member arc of sum `τ` gets
/// sum `n (σ - 2) + τ`; the window minimum is therefore `n (s_D - 2) + k`.
pub fn canonical_product_labeling(
    d: &Digraph,
    h: &ArcAssignment,
    host_labeling: &VertexLabeling,
    fam: &LabeledFamily,
) -> Result<LabeledProduct, ProductError> {
    if sem_window(&d.underlying(), host_labeling).is_none() {
        return Err(ProductError::HostNotSem);
    }
    let digraph = otimes_h(d, h, fam)?;
    let n = fam.n();
    let labels = (1..=d.order())
        .flat_map(|a| (1..=n).map(move |i| (a, i)))
        .map(|(a, i)| n * (host_labeling.label(a) - 1) + i)
        .collect();
    let labeling = VertexLabeling::new(labels).expect("block labels form a bijection");
    let window = sem_window(&digraph.underlying(), &labeling).ok_or(ProductError::VerificationFailed)?;
    Ok(LabeledProduct { digraph, labeling, window })
}

/// `und(C_k ⊗_h LK_{1,n})` with both factors oriented indegree-1 and a constant `h`.
pub fn cycle_star_product(k: usize, n: usize) -> Result<Graph, ProductError> {
    let ck = indegree_one_orientation(&families::cycle(k)?)?;
    let star = indegree_one_orientation(&families::lk1n(n))?;
    Ok(kronecker(&ck, &star).underlying())
}

/// Whether `und(C_k ⊗_h LK_{1,n}) ≅ C_k ⊙ K̄_n`.
pub fn corona_iso_check(k: usize, n: usize) -> Result<bool, ProductError> {
    let lhs = cycle_star_product(k, n)?;
    let rhs = corona(&families::cycle(k)?, n);
    Ok(isomorphic(&lhs, &rhs)?)
}

/// The four corona-union graphs obtained as `C_k ⊗_h G` for a SEM family graph `G`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoronaUnion {
    /// `2 C_k ⊙ K̄_1 ∪ C_k ⊙ K̄_n`, from `2LK_{1,1} ∪ LK_{1,n}`.
    I { k: usize, n: usize },
    /// `2 C_k ⊙ K̄_m ∪ C_k ⊙ K̄_n`, from `2LK_{1,m} ∪ LK_{1,n}`.
    II { k: usize, m: usize, n: usize },
    /// `(2s+1) C_k ⊙ K̄_n`, from `(2s+1) LK_{1,n}`.
    III { k: usize, s: usize, n: usize },
    /// `C_k ⊙ K̄_m ∪ 2 C_k ⊙ K̄_n ∪ (2s) C_k ⊙ K̄_1`.
    IV { k: usize, m: usize, n: usize, s: usize },
}

impl CoronaUnion {
    pub fn cycle_length(&self) -> usize {
        match *self {
            CoronaUnion::I { k, .. }
            | CoronaUnion::II { k, .. }
            | CoronaUnion::III { k, .. }
            | CoronaUnion::IV { k, .. } => k,
        }
    }

    /// The labeled seed graph whose oriented copy is placed on every cycle arc.
    pub fn seed(&self) -> Result<CertifiedLabeledGraph, FamilyError> {
        match *self {
            CoronaUnion::I { n, .. } => families::two_lk11_and_lk1n(n),
            CoronaUnion::II { m, n, .. } => families::two_lk1m_and_lk1n(m, n),
            CoronaUnion::III { s, n, .. } => families::odd_copies_lk1n(s, n),
            CoronaUnion::IV { m, n, s, .. } => families::mixed_stars(m, n, s),
        }
    }
}

/// Graph built by [`corona_union`]; `labeling` is present (and SEM) iff `k` is odd.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoronaUnionBuild {
    pub graph: Graph,
    pub labeling: Option<VertexLabeling>,
    pub window: Option<SumWindow>,
}

pub fn corona_union(variant: CoronaUnion) -> Result<CoronaUnionBuild, ProductError> {
    let k = variant.cycle_length();
    let seed = variant.seed()?;
    let fam = LabeledFamily::from_certified(std::slice::from_ref(&seed))?;
    let host = indegree_one_orientation(&families::cycle(k)?)?;
    let h = ArcAssignment::constant(&host, 0);
    if k % 2 == 1 {
        let host_labeling = families::odd_cycle(k)?;
        let lp = canonical_product_labeling(&host, &h, host_labeling.labeling(), &fam)?;
        Ok(CoronaUnionBuild {
            graph: lp.digraph.underlying(),
            labeling: Some(lp.labeling),
            window: Some(lp.window),
        })
    } else {
        let product = otimes_h(&host, &h, &fam)?;
        Ok(CoronaUnionBuild { graph: product.underlying(), labeling: None, window: None })
    }
}
