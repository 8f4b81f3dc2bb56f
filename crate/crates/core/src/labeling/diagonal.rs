use crate::graph::AdjacencyMatrix;

/// Number of 1 entries on each counterdiagonal `i + j = s`, for `s` in `[2, 2n]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CounterdiagonalProfile {
    counts: Vec<usize>,
}

impl CounterdiagonalProfile {
    /// 1-count of the counterdiagonal with index sum `s`; 0 outside `[2, 2n]`.
    pub fn count(&self, s: usize) -> usize {
        s.checked_sub(2).and_then(|i| self.counts.get(i)).copied().unwrap_or(0)
    }

    /// `(s, count)` for every counterdiagonal.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.counts.iter().enumerate().map(|(i, &c)| (i + 2, c))
    }

    /// Index sums of the counterdiagonals holding at least one 1.
    pub fn support(&self) -> Vec<usize> {
        self.entries().filter(|&(_, c)| c > 0).map(|(s, _)| s).collect()
    }

    /// At most one 1 per counterdiagonal, and the occupied ones are consecutive.
    pub fn is_compliant(&self) -> bool {
        if self.counts.iter().any(|&c| c > 1) {
            return false;
        }
        let support = self.support();
        support.windows(2).all(|w| w[1] == w[0] + 1)
    }
}

pub fn counterdiagonal_profile(a: &AdjacencyMatrix) -> CounterdiagonalProfile {
    let n = a.dim();
    let mut counts = vec![0; (2 * n).saturating_sub(1)];
    for i in 1..=n {
        for j in 1..=n {
            if a.get(i, j) {
                counts[i + j - 2] += 1;
            }
        }
    }
    CounterdiagonalProfile { counts }
}

/// Rotation by π: entry `(i, j)` of the result is entry `(n+1-i, n+1-j)` of `a`.
pub fn rotate_pi(a: &AdjacencyMatrix) -> AdjacencyMatrix {
    let n = a.dim();
    let mut out = AdjacencyMatrix::zeros(n);
    for i in 1..=n {
        for j in 1..=n {
            out.set(i, j, a.get(n + 1 - i, n + 1 - j));
        }
    }
    out
}
