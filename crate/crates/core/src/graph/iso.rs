use super::{Graph, GraphError};

/// Bounds for [`isomorphic_with`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IsoConfig {
    pub max_order: usize,
    pub node_budget: u64,
}

impl Default for IsoConfig {
    fn default() -> Self {
        IsoConfig { max_order: 512, node_budget: 10_000_000 }
    }
}

/// Colour refinement to a stable partition.
///
/// Colours are dense ranks of `(previous colour, sorted neighbour colours)`,
/// so the ordering of classes is isomorphism-invariant.
pub(super) fn refine(adj: &[Vec<usize>], mut colors: Vec<u32>) -> Vec<u32> {
    let mut classes = count_classes(&colors);
    loop {
        let mut sigs: Vec<(u32, Vec<u32>, usize)> = adj
            .iter()
            .enumerate()
            .map(|(v, ns)| {
                let mut nc: Vec<u32> = ns.iter().map(|&w| colors[w]).collect();
                nc.sort_unstable();
                (colors[v], nc, v)
            })
            .collect();
        sigs.sort();
        let mut next = vec![0u32; colors.len()];
        let mut rank = 0u32;
        for i in 0..sigs.len() {
            if i > 0 && (sigs[i].0 != sigs[i - 1].0 || sigs[i].1 != sigs[i - 1].1) {
                rank += 1;
            }
            next[sigs[i].2] = rank;
        }
        let new_classes = if sigs.is_empty() { 0 } else { rank as usize + 1 };
        colors = next;
        if new_classes == classes {
            return colors;
        }
        classes = new_classes;
    }
}

pub(super) fn count_classes(colors: &[u32]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

/// Isomorphism test with the default bounds.
pub fn isomorphic(g: &Graph, h: &Graph) -> Result<bool, GraphError> {
    isomorphic_with(g, h, IsoConfig::default())
}

/// True iff some vertex bijection maps the edges (and loops) of `g` onto those of `h`.
///
/// Candidates are filtered by a joint colour refinement seeded with
/// `(loop, degree)`, then matched by backtracking in a connectivity-first order.
pub fn isomorphic_with(g: &Graph, h: &Graph, cfg: IsoConfig) -> Result<bool, GraphError> {
    for x in [g, h] {
        if x.order() > cfg.max_order {
            return Err(GraphError::OrderTooLarge { order: x.order(), bound: cfg.max_order });
        }
    }
    if g.order() != h.order() || g.size() != h.size() || g.loop_count() != h.loop_count() {
        return Ok(false);
    }
    let n = g.order();

    // Refine on the disjoint union so colours are comparable across graphs.
    let gadj = g.neighbors();
    let hadj = h.neighbors();
    let mut joint: Vec<Vec<usize>> = gadj.iter().map(|ns| ns.iter().map(|&w| w - 1).collect()).collect();
    joint.extend(hadj.iter().map(|ns| ns.iter().map(|&w| n + w - 1).collect()));
    let seed: Vec<u32> = g
        .vertices()
        .map(|v| (g.has_loop(v), g.degree(v)))
        .chain(h.vertices().map(|v| (h.has_loop(v), h.degree(v))))
        .map(|(l, d)| (d as u32) * 2 + l as u32)
        .collect();
    let colors = refine(&joint, seed);
    let (gc, hc) = colors.split_at(n);

    let mut ghist = gc.to_vec();
    let mut hhist = hc.to_vec();
    ghist.sort_unstable();
    hhist.sort_unstable();
    if ghist != hhist {
        return Ok(false);
    }

    let matrix = |x: &Graph| {
        let mut m = vec![false; n * n];
        for (u, v) in x.edges() {
            m[(u - 1) * n + (v - 1)] = true;
            m[(v - 1) * n + (u - 1)] = true;
        }
        m
    };
    let gm = matrix(g);
    let hm = matrix(h);

    let class_size = |c: u32| gc.iter().filter(|&&x| x == c).count();
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    let mut links = vec![0usize; n];
    for _ in 0..n {
        let u = (0..n)
            .filter(|&u| !placed[u])
            .min_by_key(|&u| (std::cmp::Reverse(links[u]), class_size(gc[u]), u))
            .expect("unplaced vertex remains");
        placed[u] = true;
        order.push(u);
        for &w in &gadj[u] {
            links[w - 1] += 1;
        }
    }

    let mut search = Matcher {
        n,
        order: &order,
        gc,
        hc,
        gm: &gm,
        hm: &hm,
        hadj: &hadj,
        gadj: &gadj,
        map: vec![usize::MAX; n],
        used: vec![false; n],
        depth_of: {
            let mut d = vec![0; n];
            for (i, &u) in order.iter().enumerate() {
                d[u] = i;
            }
            d
        },
        nodes: 0,
        budget: cfg.node_budget,
    };
    match search.extend(0) {
        Some(found) => Ok(found),
        None => Err(GraphError::ResourceLimit(cfg.node_budget)),
    }
}

struct Matcher<'a> {
    n: usize,
    order: &'a [usize],
    gc: &'a [u32],
    hc: &'a [u32],
    gm: &'a [bool],
    hm: &'a [bool],
    gadj: &'a [Vec<usize>],
    hadj: &'a [Vec<usize>],
    map: Vec<usize>,
    used: Vec<bool>,
    depth_of: Vec<usize>,
    nodes: u64,
    budget: u64,
}

impl Matcher<'_> {
    /// `Some(found)` on completion, `None` once the budget runs out.
    fn extend(&mut self, depth: usize) -> Option<bool> {
        if depth == self.n {
            return Some(true);
        }
        let u = self.order[depth];
        let anchor = self.gadj[u]
            .iter()
            .map(|&w| w - 1)
            .find(|&w| self.depth_of[w] < depth);
        let candidates: Vec<usize> = match anchor {
            Some(w) => self.hadj[self.map[w]].iter().map(|&x| x - 1).collect(),
            None => (0..self.n).collect(),
        };
        for x in candidates {
            if self.used[x] || self.hc[x] != self.gc[u] {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                return None;
            }
            let consistent = self.order[..depth]
                .iter()
                .all(|&w| self.gm[u * self.n + w] == self.hm[x * self.n + self.map[w]]);
            if !consistent {
                continue;
            }
            self.map[u] = x;
            self.used[x] = true;
            match self.extend(depth + 1) {
                Some(true) => return Some(true),
                None => return None,
                Some(false) => {}
            }
            self.used[x] = false;
            self.map[u] = usize::MAX;
        }
        Some(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{corona, indegree_one_orientation, Digraph};

    fn cycle(k: usize) -> Graph {
        Graph::new(k, (1..=k).map(|i| (i, i % k + 1))).unwrap()
    }

    #[test]
    fn relabelled_triangle() {
        let c3 = cycle(3);
        let other = c3.relabel(&[3, 1, 2]);
        assert!(isomorphic(&c3, &other).unwrap());
    }

    #[test]
    fn triangle_is_not_a_path() {
        let p3 = Graph::new(3, [(1, 2), (2, 3)]).unwrap();
        assert!(!isomorphic(&cycle(3), &p3).unwrap());
    }

    #[test]
    fn loop_position_matters() {
        let a = Graph::new(3, [(1, 1), (1, 2), (2, 3)]).unwrap();
        let b = Graph::new(3, [(2, 2), (1, 2), (2, 3)]).unwrap();
        assert!(!isomorphic(&a, &b).unwrap());
        assert!(isomorphic(&a, &a.relabel(&[3, 2, 1])).unwrap());
    }

    #[test]
    fn regular_graphs_need_backtracking() {
        // C_6 versus two triangles: same degree sequence, refinement cannot split.
        let two_triangles = Graph::new(6, [(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6)]).unwrap();
        assert!(!isomorphic(&cycle(6), &two_triangles).unwrap());
        assert!(isomorphic(&cycle(6), &cycle(6).relabel(&[4, 2, 6, 1, 5, 3])).unwrap());
    }

    #[test]
    fn sun_from_kronecker_shape() {
        // Underlying graph of oriented C_3 times oriented LK_{1,1}, written out by hand
        // with vertex (a, i) numbered 2(a-1)+i.
        let c3 = indegree_one_orientation(&cycle(3)).unwrap();
        let lk11 = Digraph::new(2, [(1, 1), (1, 2)]).unwrap();
        let mut arcs = Vec::new();
        for (a, b) in c3.arcs() {
            for (i, j) in lk11.arcs() {
                arcs.push((2 * (a - 1) + i, 2 * (b - 1) + j));
            }
        }
        let product = Digraph::new(6, arcs).unwrap().underlying();
        assert!(isomorphic(&product, &corona(&cycle(3), 1)).unwrap());
    }

    #[test]
    fn order_bound_enforced() {
        let cfg = IsoConfig { max_order: 2, ..IsoConfig::default() };
        assert!(matches!(
            isomorphic_with(&cycle(3), &cycle(3), cfg),
            Err(GraphError::OrderTooLarge { order: 3, bound: 2 })
        ));
    }

    #[test]
    fn budget_exhaustion_reported() {
        let cfg = IsoConfig { node_budget: 2, ..IsoConfig::default() };
        assert_eq!(
            isomorphic_with(&cycle(8), &cycle(8).relabel(&[8, 6, 4, 2, 1, 3, 5, 7]), cfg),
            Err(GraphError::ResourceLimit(2))
        );
    }
}
