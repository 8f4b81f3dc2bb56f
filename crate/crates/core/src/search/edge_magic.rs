use std::collections::HashMap;
use std::time::Instant;

use super::{Outcome, SearchError, SearchLimits, SearchReport};
use crate::graph::Graph;
use crate::labeling::{verify_edge_magic, FullLabeling};

/// Largest `p + q` accepted by [`find_edge_magic`].
pub const MAX_EDGE_MAGIC_TOTAL: usize = 16;

struct Walk<'a> {
    total: usize,
    k: usize,
    order: &'a [usize],
    /// Per depth: (earlier depth or self for a loop, edge index).
    back: &'a [Vec<(usize, usize)>],
    vlabels: Vec<usize>,
    elabels: Vec<usize>,
    nodes: u64,
    budget: u64,
    deadline: Option<Instant>,
    aborted: bool,
}

impl Walk<'_> {
    fn go(&mut self, depth: usize, used: u64) -> bool {
        if depth == self.order.len() {
            return true;
        }
        for label in 1..=self.total {
            if used & (1 << label) != 0 {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.budget || (self.nodes.is_multiple_of(4096) && self.deadline.is_some_and(|d| Instant::now() >= d)) {
                self.aborted = true;
                return false;
            }
            let mut mask = used | (1 << label);
            let mut ok = true;
            for &(e, idx) in &self.back[depth] {
                let other = if e == depth { label } else { self.vlabels[e] };
                let Some(l) = self.k.checked_sub(label + other).filter(|&l| l >= 1 && l <= self.total) else {
                    ok = false;
                    break;
                };
                if mask & (1 << l) != 0 {
                    ok = false;
                    break;
                }
                mask |= 1 << l;
                self.elabels[idx] = l;
            }
            if !ok {
                continue;
            }
            self.vlabels[depth] = label;
            if self.go(depth + 1, mask) {
                return true;
            }
            if self.aborted {
                return false;
            }
        }
        false
    }
}

/// Searches for an edge-magic total labeling of `g`: a bijection from vertices
/// and edges onto `[1, p + q]` with `f(u) + f(uv) + f(v)` constant. Magic sums
/// are tried in increasing order; the witness need not be super.
pub fn find_edge_magic(g: &Graph, limits: SearchLimits) -> Result<SearchReport<FullLabeling>, SearchError> {
    let (p, q) = (g.order(), g.size());
    if p + q > MAX_EDGE_MAGIC_TOTAL {
        return Err(SearchError::OrderTooLarge { order: p + q, bound: MAX_EDGE_MAGIC_TOTAL });
    }
    if q == 0 {
        return Err(SearchError::NoEdges);
    }
    let start = Instant::now();
    let mut order: Vec<usize> = g.vertices().collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut depth_of = vec![0; p];
    for (d, &v) in order.iter().enumerate() {
        depth_of[v - 1] = d;
    }
    let edge_index: HashMap<(usize, usize), usize> = g.edges().enumerate().map(|(i, e)| (e, i)).collect();
    let mut back = vec![Vec::new(); p];
    for (&(u, v), &idx) in &edge_index {
        let (du, dv) = (depth_of[u - 1], depth_of[v - 1]);
        back[du.max(dv)].push((du.min(dv), idx));
    }
    for b in &mut back {
        b.sort_unstable();
    }

    let total = p + q;
    let mut walk = Walk {
        total,
        k: 0,
        order: &order,
        back: &back,
        vlabels: vec![0; p],
        elabels: vec![0; q],
        nodes: 0,
        budget: limits.node_budget,
        deadline: limits.deadline(start),
        aborted: false,
    };
    let mut outcome = Outcome::Exhausted;
    for k in 4..=3 * total {
        walk.k = k;
        if walk.go(0, 0) {
            let mut vertex_labels = vec![0; p];
            for (d, &v) in order.iter().enumerate() {
                vertex_labels[v - 1] = walk.vlabels[d];
            }
            let full = FullLabeling { vertex_labels, edge_labels: walk.elabels.clone(), magic_sum: k };
            if !verify_edge_magic(g, &full, false) {
                return Err(SearchError::InvalidWitness(full.vertex_labels));
            }
            outcome = Outcome::Witness(full);
            break;
        }
        if walk.aborted {
            outcome = Outcome::Aborted;
            break;
        }
    }
    Ok(SearchReport { outcome, nodes: walk.nodes, elapsed: start.elapsed(), limits, solutions: None })
}
