use super::iso::{count_classes, refine};
use super::Graph;

/// Complete isomorphism invariant: equal forms iff isomorphic graphs.
///
/// Stores the upper triangle (diagonal included) of the adjacency matrix under
/// the canonical vertex order, row by row.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    order: usize,
    bits: Vec<u8>,
}

impl CanonicalForm {
    pub fn order(&self) -> usize {
        self.order
    }

    /// The representative graph whose vertex order is the canonical one.
    pub fn to_graph(&self) -> Graph {
        let n = self.order;
        let mut edges = Vec::new();
        let mut k = 0;
        for i in 1..=n {
            for j in i..=n {
                if self.bits[k] == 1 {
                    edges.push((i, j));
                }
                k += 1;
            }
        }
        Graph::new(n, edges).expect("canonical bits describe a simple graph")
    }

    pub fn as_bit_string(&self) -> String {
        self.bits.iter().map(|&b| if b == 1 { '1' } else { '0' }).collect()
    }
}

/// Minimum upper-triangle string over the leaves of an individualise-and-refine tree.
///
/// Branches on the first non-singleton cell; twin vertices (same loop status and same
/// neighbourhood apart from each other) are tried only once per cell since swapping
/// them is an automorphism.
pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let n = g.order();
    let adj: Vec<Vec<usize>> = g.neighbors().iter().map(|ns| ns.iter().map(|&w| w - 1).collect()).collect();
    let mut matrix = vec![false; n * n];
    for (u, v) in g.edges() {
        matrix[(u - 1) * n + (v - 1)] = true;
        matrix[(v - 1) * n + (u - 1)] = true;
    }
    let seed: Vec<u32> = g
        .vertices()
        .map(|v| g.degree(v) as u32 * 2 + g.has_loop(v) as u32)
        .collect();
    let colors = refine(&adj, seed);
    let mut ctx = Canon { n, adj: &adj, matrix: &matrix, best: None };
    ctx.search(colors);
    CanonicalForm { order: n, bits: ctx.best.expect("search reaches at least one leaf") }
}

struct Canon<'a> {
    n: usize,
    adj: &'a [Vec<usize>],
    matrix: &'a [bool],
    best: Option<Vec<u8>>,
}

impl Canon<'_> {
    fn twins(&self, u: usize, w: usize) -> bool {
        let n = self.n;
        if self.matrix[u * n + u] != self.matrix[w * n + w] {
            return false;
        }
        (0..n)
            .filter(|&x| x != u && x != w)
            .all(|x| self.matrix[u * n + x] == self.matrix[w * n + x])
    }

    fn search(&mut self, colors: Vec<u32>) {
        let n = self.n;
        if count_classes(&colors) == n {
            let mut at = vec![0usize; n];
            for (v, &c) in colors.iter().enumerate() {
                at[c as usize] = v;
            }
            let mut bits = Vec::with_capacity(n * (n + 1) / 2);
            for i in 0..n {
                for j in i..n {
                    bits.push(self.matrix[at[i] * n + at[j]] as u8);
                }
            }
            if self.best.as_ref().is_none_or(|b| bits < *b) {
                self.best = Some(bits);
            }
            return;
        }

        let mut sizes = vec![0usize; n];
        for &c in &colors {
            sizes[c as usize] += 1;
        }
        let target = (0..n).find(|&c| sizes[c] > 1).expect("partition is not discrete") as u32;
        let cell: Vec<usize> = (0..n).filter(|&v| colors[v] == target).collect();

        let mut tried: Vec<usize> = Vec::new();
        for &v in &cell {
            if tried.iter().any(|&t| self.twins(t, v)) {
                continue;
            }
            tried.push(v);
            let split: Vec<u32> = colors
                .iter()
                .enumerate()
                .map(|(x, &c)| 2 * c + (x != v) as u32)
                .collect();
            let next = refine(self.adj, split);
            self.search(next);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::isomorphic;

    #[test]
    fn relabelling_preserves_form() {
        let g = Graph::new(6, [(1, 1), (1, 2), (2, 3), (3, 1), (4, 5), (6, 6)]).unwrap();
        let h = g.relabel(&[6, 4, 2, 1, 3, 5]);
        assert_eq!(canonical_form(&g), canonical_form(&h));
    }

    #[test]
    fn representative_is_isomorphic() {
        let g = Graph::new(5, [(2, 2), (2, 4), (4, 5), (1, 3)]).unwrap();
        let rep = canonical_form(&g).to_graph();
        assert!(isomorphic(&g, &rep).unwrap());
        assert_eq!(canonical_form(&rep), canonical_form(&g));
    }

    #[test]
    fn distinguishes_loop_placement() {
        let a = Graph::new(3, [(1, 1), (1, 2), (2, 3)]).unwrap();
        let b = Graph::new(3, [(2, 2), (1, 2), (2, 3)]).unwrap();
        assert_ne!(canonical_form(&a), canonical_form(&b));
    }

    #[test]
    fn many_isolated_loops() {
        let g = Graph::new(10, (1..=10).map(|v| (v, v))).unwrap();
        assert_eq!(canonical_form(&g).as_bit_string().matches('1').count(), 10);
    }
}
