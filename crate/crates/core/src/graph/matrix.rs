use std::fmt;

use super::Digraph;

/// Dense 0/1 adjacency matrix, 1-indexed: `get(i, j)` is 1 iff arc `(i, j)` is present.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AdjacencyMatrix {
    n: usize,
    bits: Vec<bool>,
}

impl AdjacencyMatrix {
    pub fn zeros(n: usize) -> Self {
        AdjacencyMatrix { n, bits: vec![false; n * n] }
    }

    pub fn of(d: &Digraph) -> Self {
        let mut m = AdjacencyMatrix::zeros(d.order());
        for (a, b) in d.arcs() {
            m.set(a, b, true);
        }
        m
    }

    /// Matrix of `d` with vertex `v` renamed `names[v - 1]`.
    pub fn relabeled(d: &Digraph, names: &[usize]) -> Self {
        assert_eq!(names.len(), d.order(), "one name per vertex required");
        let mut m = AdjacencyMatrix::zeros(d.order());
        for (a, b) in d.arcs() {
            m.set(names[a - 1], names[b - 1], true);
        }
        m
    }

    /// Parses rows of `'0'`/`'1'` characters.
    pub fn from_rows<S: AsRef<str>>(rows: &[S]) -> Option<Self> {
        let n = rows.len();
        let mut m = AdjacencyMatrix::zeros(n);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != n {
                return None;
            }
            for (j, c) in row.chars().enumerate() {
                match c {
                    '0' => {}
                    '1' => m.set(i + 1, j + 1, true),
                    _ => return None,
                }
            }
        }
        Some(m)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.bits[(i - 1) * self.n + (j - 1)]
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        self.bits[(i - 1) * self.n + (j - 1)] = value;
    }

    pub fn ones(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    pub fn rows(&self) -> Vec<String> {
        self.bits
            .chunks(self.n.max(1))
            .take(self.n)
            .map(|row| row.iter().map(|&b| if b { '1' } else { '0' }).collect())
            .collect()
    }

    /// The digraph whose arcs are the 1 entries.
    pub fn to_digraph(&self) -> Digraph {
        let arcs = (1..=self.n)
            .flat_map(|i| (1..=self.n).map(move |j| (i, j)))
            .filter(|&(i, j)| self.get(i, j));
        Digraph::new(self.n, arcs).expect("matrix entries are in range and unique")
    }
}

impl fmt::Display for AdjacencyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.rows() {
            writeln!(f, "{row}")?;
        }
        Ok(())
    }
}
