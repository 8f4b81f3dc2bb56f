use std::collections::VecDeque;

use super::{Arc, Digraph, Graph, GraphError};

/// Orients `g` so that every vertex has indegree exactly 1.
///
/// Such an orientation exists iff every component has exactly one cycle
/// (a loop counts as a cycle). The cycle is walked from its smallest vertex
/// towards the smaller of its two cycle neighbours; all other edges point
/// away from the cycle. For `LK_{1,n}` this gives the loop plus center→leaf arcs.
pub fn indegree_one_orientation(g: &Graph) -> Result<Digraph, GraphError> {
    let adj = g.neighbors();
    let mut arcs: Vec<Arc> = Vec::with_capacity(g.order());

    for comp in g.components() {
        let edge_count = g
            .edges()
            .filter(|&(u, _)| comp.binary_search(&u).is_ok())
            .count();
        let start = comp[0];
        if edge_count < comp.len() {
            return Err(GraphError::NoSuchOrientation { vertex: start, reason: "is a tree" });
        }
        if edge_count > comp.len() {
            return Err(GraphError::NoSuchOrientation {
                vertex: start,
                reason: "has more than one cycle",
            });
        }

        // Strip pendant vertices until only the cycle remains.
        let mut deg: Vec<usize> = (0..g.order())
            .map(|i| adj[i].len() + if g.has_loop(i + 1) { 2 } else { 0 })
            .collect();
        let mut removed = vec![false; g.order()];
        let mut queue: VecDeque<usize> = comp.iter().copied().filter(|&v| deg[v - 1] == 1).collect();
        while let Some(v) = queue.pop_front() {
            removed[v - 1] = true;
            for &w in &adj[v - 1] {
                if !removed[w - 1] {
                    deg[w - 1] -= 1;
                    if deg[w - 1] == 1 {
                        queue.push_back(w);
                    }
                }
            }
        }
        let cycle: Vec<usize> = comp.iter().copied().filter(|&v| !removed[v - 1]).collect();

        let mut on_tree = vec![false; g.order()];
        if cycle.len() == 1 {
            let c = cycle[0];
            debug_assert!(g.has_loop(c));
            arcs.push((c, c));
        } else {
            let in_cycle = |v: usize| !removed[v - 1];
            let first = cycle[0];
            let mut prev = first;
            let mut cur = adj[first - 1]
                .iter()
                .copied()
                .filter(|&w| in_cycle(w))
                .min()
                .expect("cycle vertex has two cycle neighbours");
            arcs.push((first, cur));
            while cur != first {
                let next = adj[cur - 1]
                    .iter()
                    .copied()
                    .find(|&w| in_cycle(w) && w != prev)
                    .expect("cycle vertex has two cycle neighbours");
                arcs.push((cur, next));
                prev = cur;
                cur = next;
            }
        }
        for &c in &cycle {
            on_tree[c - 1] = true;
        }

        let mut queue: VecDeque<usize> = cycle.iter().copied().collect();
        while let Some(u) = queue.pop_front() {
            for &w in &adj[u - 1] {
                if !on_tree[w - 1] {
                    on_tree[w - 1] = true;
                    arcs.push((u, w));
                    queue.push_back(w);
                }
            }
        }
    }

    Digraph::new(g.order(), arcs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn star_with_loop() {
        let g = Graph::new(3, [(1, 1), (1, 2), (1, 3)]).unwrap();
        let d = indegree_one_orientation(&g).unwrap();
        assert_eq!(d.arcs().collect::<Vec<_>>(), vec![(1, 1), (1, 2), (1, 3)]);
    }

    #[test]
    fn triangle_ascending() {
        let g = Graph::new(3, [(1, 2), (2, 3), (1, 3)]).unwrap();
        let d = indegree_one_orientation(&g).unwrap();
        assert_eq!(d.arcs().collect::<Vec<_>>(), vec![(1, 2), (2, 3), (3, 1)]);
    }

    #[test]
    fn tree_has_no_orientation() {
        let g = Graph::new(2, [(1, 2)]).unwrap();
        assert!(matches!(
            indegree_one_orientation(&g),
            Err(GraphError::NoSuchOrientation { vertex: 1, reason: "is a tree" })
        ));
    }

    #[test]
    fn two_cycles_rejected() {
        let g = Graph::new(2, [(1, 1), (2, 2), (1, 2)]).unwrap();
        assert!(matches!(
            indegree_one_orientation(&g),
            Err(GraphError::NoSuchOrientation { reason: "has more than one cycle", .. })
        ));
    }

    #[test]
    fn isolated_vertex_is_a_tree() {
        let g = Graph::new(2, [(1, 1)]).unwrap();
        assert!(indegree_one_orientation(&g).is_err());
    }

    #[test]
    fn tail_hanging_off_a_cycle() {
        // 4-cycle 1-3-2-4 with a path 2-5-6 and a leaf 6-7.
        let g = Graph::new(7, [(1, 3), (3, 2), (2, 4), (4, 1), (2, 5), (5, 6), (6, 7)]).unwrap();
        let d = indegree_one_orientation(&g).unwrap();
        assert_eq!(d.underlying(), g);
        for v in 1..=7 {
            assert_eq!(d.indegree(v), 1, "vertex {v}");
        }
        assert!(d.has_arc(1, 3) && d.has_arc(3, 2) && d.has_arc(2, 4) && d.has_arc(4, 1));
        assert!(d.has_arc(2, 5) && d.has_arc(5, 6) && d.has_arc(6, 7));
    }
}
