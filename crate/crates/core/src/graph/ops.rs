use super::Graph;

/// Result of [`disjoint_union`]: the union plus the vertex offset of each part.
///
/// Vertex `v` of part `i` becomes `offsets[i] + v` in `graph`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DisjointUnion {
    pub graph: Graph,
    pub offsets: Vec<usize>,
}

impl DisjointUnion {
    /// Part index and local vertex of a union vertex.
    pub fn locate(&self, v: usize) -> (usize, usize) {
        let part = self.offsets.partition_point(|&off| off < v) - 1;
        (part, v - self.offsets[part])
    }
}

/// Lays the parts out one after another in the given order.
///
/// # Panics
///
/// If `parts` is empty.
pub fn disjoint_union(parts: &[Graph]) -> DisjointUnion {
    assert!(!parts.is_empty(), "disjoint union of zero graphs");
    let mut offsets = Vec::with_capacity(parts.len());
    let mut edges = Vec::new();
    let mut offset = 0;
    for g in parts {
        offsets.push(offset);
        edges.extend(g.edges().map(|(u, v)| (u + offset, v + offset)));
        offset += g.order();
    }
    let graph = Graph::new(offset, edges).expect("offset parts cannot collide");
    DisjointUnion { graph, offsets }
}

/// `G ⊙ K̄_n`: each vertex `v` of `g` gets `n` private pendant vertices
/// numbered `p + (v - 1) * n + 1 ..= p + v * n`.
pub fn corona(g: &Graph, n: usize) -> Graph {
    let p = g.order();
    let pendants = (1..=p).flat_map(|v| (1..=n).map(move |j| (v, p + (v - 1) * n + j)));
    Graph::new(p * (n + 1), g.edges().chain(pendants)).expect("pendants are fresh vertices")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(k: usize) -> Graph {
        Graph::new(k, (1..=k).map(|i| (i, i % k + 1))).unwrap()
    }

    fn lk11() -> Graph {
        Graph::new(2, [(1, 1), (1, 2)]).unwrap()
    }

    #[test]
    fn two_loops() {
        let l = Graph::new(1, [(1, 1)]).unwrap();
        let u = disjoint_union(&[l.clone(), l]);
        assert_eq!((u.graph.order(), u.graph.size()), (2, 2));
        assert_eq!(u.offsets, vec![0, 1]);
    }

    #[test]
    fn union_counts() {
        let u = disjoint_union(&[lk11(), lk11()]);
        assert_eq!((u.graph.order(), u.graph.size()), (4, 4));
        let lk1n = lk11();
        let u = disjoint_union(&[lk11(), lk11(), lk1n]);
        assert_eq!((u.graph.order(), u.graph.size()), (6, 6));
        assert_eq!(u.locate(1), (0, 1));
        assert_eq!(u.locate(4), (1, 2));
        assert_eq!(u.locate(5), (2, 1));
    }

    #[test]
    fn corona_sizes() {
        let sun = corona(&cycle(3), 1);
        assert_eq!((sun.order(), sun.size()), (6, 6));
        assert_eq!(corona(&cycle(5), 0), cycle(5));
        let c = corona(&cycle(3), 2);
        assert_eq!((c.order(), c.size()), (9, 9));
    }

    #[test]
    fn corona_of_cycles_has_equal_order_and_size() {
        for k in 3..10 {
            for n in 0..5 {
                let c = corona(&cycle(k), n);
                assert_eq!(c.order(), c.size(), "k={k} n={n}");
            }
        }
    }
}
