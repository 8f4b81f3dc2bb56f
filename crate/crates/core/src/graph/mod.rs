//! Graphs and digraphs on the vertex set `[1, p]`.
//!
//! Loops are allowed, multiple edges are not. Both types are immutable once
//! built; every constructor validates endpoints and rejects duplicates.

mod canon;
pub mod io;
mod iso;
mod matrix;
mod ops;
mod orientation;

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

pub use canon::{canonical_form, CanonicalForm};
pub use iso::{isomorphic, isomorphic_with, IsoConfig};
pub use matrix::AdjacencyMatrix;
pub use ops::{corona, disjoint_union, DisjointUnion};
pub use orientation::indegree_one_orientation;

/// An undirected edge stored with `u <= v`; `u == v` is a loop.
pub type Edge = (usize, usize);

/// An arc `(tail, head)`.
pub type Arc = (usize, usize);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph order must be at least 1")]
    EmptyVertexSet,
    #[error("endpoint {vertex} outside [1, {order}]")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("duplicate edge {{{0}, {1}}}: multiple edges are not allowed")]
    DuplicateEdge(usize, usize),
    #[error("duplicate arc ({0}, {1})")]
    DuplicateArc(usize, usize),
    #[error("no indegree-1 orientation: component containing vertex {vertex} {reason}")]
    NoSuchOrientation { vertex: usize, reason: &'static str },
    #[error("isomorphism search exceeded its budget of {0} nodes")]
    ResourceLimit(u64),
    #[error("order {order} exceeds the configured bound {bound}")]
    OrderTooLarge { order: usize, bound: usize },
}

fn check_endpoint(v: usize, order: usize) -> Result<(), GraphError> {
    if v == 0 || v > order {
        Err(GraphError::VertexOutOfRange { vertex: v, order })
    } else {
        Ok(())
    }
}

/// A `(p, q)`-graph: `p` vertices, `q` edges, loops allowed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    edges: BTreeSet<Edge>,
}

impl Graph {
    pub fn new<I>(order: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = Edge>,
    {
        if order == 0 {
            return Err(GraphError::EmptyVertexSet);
        }
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            check_endpoint(u, order)?;
            check_endpoint(v, order)?;
            let e = (u.min(v), u.max(v));
            if !set.insert(e) {
                return Err(GraphError::DuplicateEdge(e.0, e.1));
            }
        }
        Ok(Graph { order, edges: set })
    }

    /// The edgeless graph on `order` vertices.
    pub fn empty(order: usize) -> Result<Self, GraphError> {
        Graph::new(order, std::iter::empty())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Edges in ascending `(u, v)` order with `u <= v`.
    pub fn edges(&self) -> impl ExactSizeIterator<Item = Edge> + '_ {
        self.edges.iter().copied()
    }

    pub fn vertices(&self) -> std::ops::RangeInclusive<usize> {
        1..=self.order
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn has_loop(&self, v: usize) -> bool {
        self.edges.contains(&(v, v))
    }

    pub fn loop_count(&self) -> usize {
        self.edges.iter().filter(|(u, v)| u == v).count()
    }

    /// Degree with a loop contributing 2.
    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .map(|&(a, b)| match (a == v, b == v) {
                (true, true) => 2,
                (true, false) | (false, true) => 1,
                _ => 0,
            })
            .sum()
    }

    /// Neighbour lists indexed by `v - 1`, loops excluded, ascending.
    pub fn neighbors(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.order];
        for &(u, v) in &self.edges {
            if u != v {
                adj[u - 1].push(v);
                adj[v - 1].push(u);
            }
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    /// Connected components as ascending vertex lists, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let adj = self.neighbors();
        let mut seen = vec![false; self.order];
        let mut out = Vec::new();
        for start in 1..=self.order {
            if seen[start - 1] {
                continue;
            }
            seen[start - 1] = true;
            let mut comp = vec![start];
            let mut stack = vec![start];
            while let Some(u) = stack.pop() {
                for &w in &adj[u - 1] {
                    if !seen[w - 1] {
                        seen[w - 1] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Renames every vertex `v` to `perm[v - 1]`. `perm` must be a permutation of `[1, p]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.order, "relabel permutation has wrong length");
        Graph::new(self.order, self.edges.iter().map(|&(u, v)| (perm[u - 1], perm[v - 1])))
            .expect("relabelling by a permutation preserves validity")
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})-graph {{", self.order, self.size())?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{u}{v}")?;
        }
        f.write_str("}")
    }
}

/// A digraph on `[1, n]`; loops allowed, no repeated arcs.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    order: usize,
    arcs: BTreeSet<Arc>,
}

impl Digraph {
    pub fn new<I>(order: usize, arcs: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = Arc>,
    {
        if order == 0 {
            return Err(GraphError::EmptyVertexSet);
        }
        let mut set = BTreeSet::new();
        for (a, b) in arcs {
            check_endpoint(a, order)?;
            check_endpoint(b, order)?;
            if !set.insert((a, b)) {
                return Err(GraphError::DuplicateArc(a, b));
            }
        }
        Ok(Digraph { order, arcs: set })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn size(&self) -> usize {
        self.arcs.len()
    }

    pub fn arcs(&self) -> impl ExactSizeIterator<Item = Arc> + '_ {
        self.arcs.iter().copied()
    }

    pub fn has_arc(&self, a: usize, b: usize) -> bool {
        self.arcs.contains(&(a, b))
    }

    pub fn indegree(&self, v: usize) -> usize {
        self.arcs.iter().filter(|&&(_, b)| b == v).count()
    }

    pub fn outdegree(&self, v: usize) -> usize {
        self.arcs.iter().filter(|&&(a, _)| a == v).count()
    }

    /// `und(D)`: every arc becomes an edge, antiparallel pairs collapse.
    pub fn underlying(&self) -> Graph {
        let edges: BTreeSet<Edge> = self.arcs.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
        Graph { order: self.order, edges }
    }

    /// Renames every vertex `v` to `perm[v - 1]`.
    pub fn relabel(&self, perm: &[usize]) -> Digraph {
        assert_eq!(perm.len(), self.order, "relabel permutation has wrong length");
        Digraph::new(self.order, self.arcs.iter().map(|&(a, b)| (perm[a - 1], perm[b - 1])))
            .expect("relabelling by a permutation preserves validity")
    }
}

/// Free-function form of [`Digraph::underlying`].
pub fn underlying(d: &Digraph) -> Graph {
    d.underlying()
}
