use crate::graph::Graph;
use crate::labeling::VertexLabeling;

use super::{caterpillar_layout, CertifiedLabeledGraph, FamilyError, Provenance};

/// Leaf counts along an odd, palindromic caterpillar spine.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DeerSpec {
    spine: Vec<usize>,
}

impl DeerSpec {
    pub fn new(spine_leaf_counts: Vec<usize>) -> Result<Self, FamilyError> {
        if spine_leaf_counts.len().is_multiple_of(2) {
            return Err(FamilyError::BadParam(format!(
                "deer spine must have odd length, got {}",
                spine_leaf_counts.len()
            )));
        }
        if spine_leaf_counts.iter().ne(spine_leaf_counts.iter().rev()) {
            return Err(FamilyError::BadParam(format!(
                "deer spine {spine_leaf_counts:?} is not palindromic"
            )));
        }
        Ok(DeerSpec { spine: spine_leaf_counts })
    }

    pub fn spine(&self) -> &[usize] {
        &self.spine
    }

    pub fn center(&self) -> usize {
        self.spine.len() / 2 + 1
    }
}

/// Sweep order of one bipartition class: starting with `spine[0]` itself when
/// `with_first` holds, alternating spine vertex / leaves of the next spine vertex.
fn sweep(order: &[usize], leaves: &[Vec<usize>], with_first: bool) -> Vec<usize> {
    let mut out = Vec::new();
    for (pos, &s) in order.iter().enumerate() {
        if (pos % 2 == 0) == with_first {
            out.push(s);
        } else {
            out.extend(&leaves[s - 1]);
        }
    }
    out
}

/// Caterpillar on the spine plus a loop at the central spine vertex.
///
/// Labeled by the bipartition sweep: one class gets `1..=a` in sweep order, the
/// other `a+1..=p`. Both class orders and both sweep directions are tried; the
/// first that verifies is returned.
pub fn deer(spec: &DeerSpec) -> Result<CertifiedLabeledGraph, FamilyError> {
    let (tree, leaves) = caterpillar_layout(spec.spine());
    let center = spec.center();
    let graph = Graph::new(tree.order(), tree.edges().chain(std::iter::once((center, center))))?;

    let forward: Vec<usize> = (1..=spec.spine().len()).collect();
    let backward: Vec<usize> = forward.iter().rev().copied().collect();
    for class_first in [true, false] {
        for order in [&forward, &backward] {
            let first = sweep(order, &leaves, class_first);
            let second = sweep(order, &leaves, !class_first);
            let mut labels = vec![0; graph.order()];
            for (i, &v) in first.iter().chain(&second).enumerate() {
                labels[v - 1] = i + 1;
            }
            let labeling = VertexLabeling::new(labels).expect("the two classes partition the vertices");
            let provenance = Provenance::Deer { spine: spec.spine().to_vec() };
            if let Ok(c) = CertifiedLabeledGraph::certify(graph.clone(), labeling, provenance) {
                return Ok(c);
            }
        }
    }
    Err(FamilyError::LabelingFailed(spec.spine().to_vec()))
}
