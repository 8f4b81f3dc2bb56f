use super::{sem_window, LabelingError, VertexLabeling};
use crate::graph::Graph;

/// Labels on vertices and edges with a claimed magic sum.
///
/// `edge_labels[i]` belongs to the `i`-th edge of [`Graph::edges`]. Nothing here
/// forces the labels to be valid; [`verify_edge_magic`] is the check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FullLabeling {
    pub vertex_labels: Vec<usize>,
    pub edge_labels: Vec<usize>,
    pub magic_sum: usize,
}

/// Extends a SEM vertex labeling: edge `uv` gets `p + q + s - g(u) - g(v)`, where
/// `s` is the window minimum, so every edge sums to `p + q + s`.
pub fn complete_to_edge_magic(g: &Graph, f: &VertexLabeling) -> Result<FullLabeling, LabelingError> {
    let window = sem_window(g, f).ok_or(LabelingError::NotSem)?;
    let magic_sum = g.order() + g.size() + window.min;
    let edge_labels = g
        .edges()
        .map(|(u, v)| magic_sum - f.label(u) - f.label(v))
        .collect();
    Ok(FullLabeling { vertex_labels: f.as_slice().to_vec(), edge_labels, magic_sum })
}

/// Checks bijectivity onto `[1, p + q]` and the constant edge sum; with
/// `require_super` also that the vertices carry exactly `[1, p]`.
pub fn verify_edge_magic(g: &Graph, full: &FullLabeling, require_super: bool) -> bool {
    let (p, q) = (g.order(), g.size());
    if full.vertex_labels.len() != p || full.edge_labels.len() != q {
        return false;
    }
    let mut seen = vec![false; p + q];
    for &l in full.vertex_labels.iter().chain(&full.edge_labels) {
        if l == 0 || l > p + q || std::mem::replace(&mut seen[l - 1], true) {
            return false;
        }
    }
    if require_super && full.vertex_labels.iter().any(|&l| l > p) {
        return false;
    }
    g.edges()
        .zip(&full.edge_labels)
        .all(|((u, v), &e)| full.vertex_labels[u - 1] + e + full.vertex_labels[v - 1] == full.magic_sum)
}
