//! Super edge-magic labelings of graphs with loops.
//!
//! A labeling `g: V -> [1, p]` of a `(p, q)`-graph is super edge-magic (SEM) when
//! the induced sums `g(u) + g(v)` over its edges are `q` consecutive integers
//! (a loop at `u` contributes `2 g(u)`). This crate builds the known SEM
//! families, combines labeled digraphs with the `⊗_h` product, and searches
//! or exhaustively refutes SEM labelings of small graphs.

pub mod graph;
pub mod labeling;
pub mod families;
pub mod product;
pub mod search;
