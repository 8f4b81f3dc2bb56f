use std::ops::RangeInclusive;

use super::SearchError;
use crate::graph::Digraph;
use crate::product::LabeledFamily;

/// Largest `n` accepted by [`enumerate_snk`].
pub const MAX_SNK_ORDER: usize = 5;

/// Minimum sums `k` for which order-`n` members exist.
pub fn feasible_min_sums(n: usize) -> RangeInclusive<usize> {
    2..=n + 1
}

/// Every labeled digraph on `[1, n]` with `n` arcs whose sums `a + b` are
/// distinct and fill `[k, k + n - 1]`.
///
/// Such a digraph picks exactly one arc for each sum in the window, so the set
/// is the product over the window of the arcs with that sum. Members come out
/// in lexicographic order of their arc lists.
pub fn enumerate_snk(n: usize, k: usize) -> Result<LabeledFamily, SearchError> {
    if n > MAX_SNK_ORDER {
        return Err(SearchError::OrderTooLarge { order: n, bound: MAX_SNK_ORDER });
    }
    if n == 0 || !feasible_min_sums(n).contains(&k) {
        return Err(SearchError::InfeasibleWindow { n, k });
    }
    let choices: Vec<Vec<(usize, usize)>> = (k..k + n)
        .map(|s| (1..=n).filter(|&a| s > a && s - a <= n).map(|a| (a, s - a)).collect())
        .collect();
    let mut members = Vec::new();
    let mut idx = vec![0usize; n];
    loop {
        let arcs = idx.iter().zip(&choices).map(|(&i, c)| c[i]);
        members.push(Digraph::new(n, arcs).expect("arcs in range and distinct"));
        // odometer, last position fastest
        let mut pos = n;
        loop {
            if pos == 0 {
                return Ok(LabeledFamily::new(members).expect("members satisfy the window by construction"));
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < choices[pos].len() {
                break;
            }
            idx[pos] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use itertools::Itertools;
    use std::collections::BTreeSet;

    /// All `n`-subsets of the `n^2` possible arcs, filtered by the definition.
    fn brute(n: usize, k: usize) -> BTreeSet<Vec<(usize, usize)>> {
        let all: Vec<(usize, usize)> = (1..=n).cartesian_product(1..=n).collect();
        all.into_iter()
            .combinations(n)
            .filter(|arcs| {
                let sums: BTreeSet<usize> = arcs.iter().map(|&(a, b)| a + b).collect();
                sums.len() == n && sums.first() == Some(&k) && sums.last() == Some(&(k + n - 1))
            })
            .collect()
    }

    #[test]
    fn matches_brute_force() {
        for n in 1..=3 {
            for k in 1..=2 * n + 1 {
                let b = brute(n, k);
                match enumerate_snk(n, k) {
                    Ok(fam) => {
                        let got: BTreeSet<Vec<_>> = fam.members().iter().map(|d| d.arcs().collect()).collect();
                        assert_eq!(got.len(), fam.len(), "duplicates for n={n}, k={k}");
                        assert_eq!(got, b, "n={n}, k={k}");
                    }
                    Err(SearchError::InfeasibleWindow { .. }) => assert!(b.is_empty(), "n={n}, k={k}"),
                    Err(e) => panic!("{e}"),
                }
            }
        }
    }

    #[test]
    fn two_vertex_counts() {
        assert_eq!(enumerate_snk(2, 2).unwrap().len(), 2);
        assert_eq!(enumerate_snk(2, 3).unwrap().len(), 2);
        assert!(enumerate_snk(2, 4).is_err());
    }

    #[test]
    fn order_three_counts() {
        let sizes: Vec<usize> = feasible_min_sums(3).map(|k| enumerate_snk(3, k).unwrap().len()).collect();
        assert_eq!(sizes, vec![6, 12, 6]);
    }

    #[test]
    fn bound() {
        assert!(matches!(enumerate_snk(6, 3), Err(SearchError::OrderTooLarge { .. })));
        assert!(!enumerate_snk(5, 4).unwrap().is_empty());
    }
}
