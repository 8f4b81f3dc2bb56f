use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::time::Instant;

use rayon::prelude::*;

use super::{Mode, Outcome, SearchError, SearchLimits, SearchReport};
use crate::graph::Graph;
use crate::labeling::{sem_window, VertexLabeling};

/// Static variable order plus, per depth, the earlier depths adjacent to it.
struct Problem {
    p: usize,
    q: usize,
    order: Vec<usize>,
    back: Vec<Vec<usize>>,
    looped: Vec<bool>,
}

impl Problem {
    fn new(g: &Graph, mode: Mode) -> Self {
        let mut order: Vec<usize> = g.vertices().collect();
        if mode != Mode::Canonical {
            order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
        }
        let mut depth_of = vec![0; g.order()];
        for (d, &v) in order.iter().enumerate() {
            depth_of[v - 1] = d;
        }
        let adj = g.neighbors();
        let back = order
            .iter()
            .enumerate()
            .map(|(d, &v)| adj[v - 1].iter().map(|&w| depth_of[w - 1]).filter(|&e| e < d).collect())
            .collect();
        let looped = order.iter().map(|&v| g.has_loop(v)).collect();
        Problem { p: g.order(), q: g.size(), order, back, looped }
    }

    fn labeling(&self, by_depth: &[usize]) -> Vec<usize> {
        let mut labels = vec![0; self.p];
        for (d, &v) in self.order.iter().enumerate() {
            labels[v - 1] = by_depth[d];
        }
        labels
    }
}

struct Shared {
    nodes: AtomicU64,
    aborted: AtomicBool,
    /// Lowest branch index that has produced a witness (first/canonical modes).
    best_branch: AtomicUsize,
    budget: u64,
    deadline: Option<Instant>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Status {
    Complete,
    Aborted,
    Cancelled,
}

struct BranchResult {
    status: Status,
    first: Option<Vec<usize>>,
    count: u64,
}

const FLUSH: u64 = 1 << 12;

struct Walker<'a> {
    problem: &'a Problem,
    shared: &'a Shared,
    mode: Mode,
    branch: usize,
    labels: Vec<usize>,
    local: u64,
    first: Option<Vec<usize>>,
    count: u64,
    status: Status,
}

impl Walker<'_> {
    fn tick(&mut self) -> bool {
        self.local += 1;
        if self.local.is_multiple_of(FLUSH) {
            let total = self.shared.nodes.fetch_add(FLUSH, Ordering::Relaxed) + FLUSH;
            if total > self.shared.budget || self.shared.deadline.is_some_and(|d| Instant::now() >= d) {
                self.shared.aborted.store(true, Ordering::Relaxed);
            }
        }
        if self.shared.aborted.load(Ordering::Relaxed) {
            self.status = Status::Aborted;
            return false;
        }
        if self.mode != Mode::All && self.shared.best_branch.load(Ordering::Relaxed) < self.branch {
            self.status = Status::Cancelled;
            return false;
        }
        true
    }

    /// Tries `label` at `depth`; returns the updated sum state if nothing is violated.
    fn place(&self, depth: usize, label: usize, sums: u128, lo: usize, hi: usize) -> Option<(u128, usize, usize)> {
        let mut sums = sums;
        let (mut lo, mut hi) = (lo, hi);
        let mut add = |s: usize| -> bool {
            let bit = 1u128 << s;
            if sums & bit != 0 {
                return false;
            }
            sums |= bit;
            lo = lo.min(s);
            hi = hi.max(s);
            true
        };
        if self.problem.looped[depth] && !add(2 * label) {
            return None;
        }
        for &e in &self.problem.back[depth] {
            if !add(label + self.labels[e]) {
                return None;
            }
        }
        if lo <= hi && hi - lo >= self.problem.q {
            return None;
        }
        Some((sums, lo, hi))
    }

    /// Returns false when the walk must stop.
    fn walk(&mut self, depth: usize, used: u64, sums: u128, lo: usize, hi: usize) -> bool {
        if depth == self.problem.p {
            self.count += 1;
            if self.first.is_none() {
                self.first = Some(self.problem.labeling(&self.labels));
            }
            if self.mode != Mode::All {
                self.shared.best_branch.fetch_min(self.branch, Ordering::Relaxed);
                return false;
            }
            return true;
        }
        for label in 1..=self.problem.p {
            if used & (1 << label) != 0 {
                continue;
            }
            if !self.tick() {
                return false;
            }
            if let Some((s, l, h)) = self.place(depth, label, sums, lo, hi) {
                self.labels[depth] = label;
                if !self.walk(depth + 1, used | (1 << label), s, l, h) {
                    return false;
                }
            }
        }
        true
    }
}

fn run_branch(problem: &Problem, shared: &Shared, mode: Mode, label: usize) -> BranchResult {
    let mut w = Walker {
        problem,
        shared,
        mode,
        branch: label,
        labels: vec![0; problem.p],
        local: 0,
        first: None,
        count: 0,
        status: Status::Complete,
    };
    if w.tick() {
        if let Some((s, l, h)) = w.place(0, label, 0, usize::MAX, 0) {
            w.labels[0] = label;
            w.walk(1, 1 << label, s, l, h);
        }
    }
    shared.nodes.fetch_add(w.local % FLUSH, Ordering::Relaxed);
    // A witness found before a stop signal is still a complete answer for that branch.
    let status = if w.first.is_some() && mode != Mode::All { Status::Complete } else { w.status };
    BranchResult { status, first: w.first, count: w.count }
}

fn check_input(g: &Graph, mode: Mode, limits: &SearchLimits) -> Result<(), SearchError> {
    let bound = limits.order_bound(mode);
    if g.order() > bound {
        return Err(SearchError::OrderTooLarge { order: g.order(), bound });
    }
    if g.size() == 0 {
        return Err(SearchError::NoEdges);
    }
    Ok(())
}

fn verified(g: &Graph, labels: Vec<usize>) -> Result<VertexLabeling, SearchError> {
    match VertexLabeling::new(labels.clone()) {
        Ok(f) if sem_window(g, &f).is_some() => Ok(f),
        _ => Err(SearchError::InvalidWitness(labels)),
    }
}

/// Pruned backtracking search for a SEM labeling of `g`.
///
/// Vertices are visited by descending degree (index order in canonical mode)
/// and labels tried in ascending order. With `limits.threads > 1` the first
/// vertex's label choices are explored in parallel; the merged result equals
/// the serial one apart from `nodes` and `elapsed`.
pub fn find_sem(g: &Graph, mode: Mode, limits: SearchLimits) -> Result<SearchReport, SearchError> {
    check_input(g, mode, &limits)?;
    let start = Instant::now();
    let problem = Problem::new(g, mode);
    let shared = Shared {
        nodes: AtomicU64::new(0),
        aborted: AtomicBool::new(false),
        best_branch: AtomicUsize::new(usize::MAX),
        budget: limits.node_budget,
        deadline: limits.deadline(start),
    };

    let branches: Vec<usize> = (1..=problem.p).collect();
    let results: Vec<BranchResult> = if limits.threads > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(limits.threads)
            .build()
            .expect("thread pool");
        pool.install(|| branches.par_iter().map(|&l| run_branch(&problem, &shared, mode, l)).collect())
    } else {
        let mut out = Vec::with_capacity(branches.len());
        for &l in &branches {
            let r = run_branch(&problem, &shared, mode, l);
            let stop = r.status == Status::Aborted || (mode != Mode::All && r.first.is_some());
            out.push(r);
            if stop {
                break;
            }
        }
        out
    };

    let (outcome, solutions) = merge(g, mode, results)?;
    Ok(SearchReport {
        outcome,
        nodes: shared.nodes.load(Ordering::Relaxed),
        elapsed: start.elapsed(),
        limits,
        solutions,
    })
}

fn merge(g: &Graph, mode: Mode, results: Vec<BranchResult>) -> Result<(Outcome<VertexLabeling>, Option<u64>), SearchError> {
    match mode {
        Mode::All => {
            if results.iter().any(|r| r.status != Status::Complete) {
                return Ok((Outcome::Aborted, None));
            }
            let count = results.iter().map(|r| r.count).sum();
            let first = results.into_iter().find_map(|r| r.first);
            let outcome = match first {
                Some(labels) => Outcome::Witness(verified(g, labels)?),
                None => Outcome::Exhausted,
            };
            Ok((outcome, Some(count)))
        }
        Mode::First | Mode::Canonical => {
            let mut incomplete = false;
            for r in results {
                if let Some(labels) = r.first {
                    if incomplete && mode == Mode::Canonical {
                        return Ok((Outcome::Aborted, None));
                    }
                    return Ok((Outcome::Witness(verified(g, labels)?), None));
                }
                if r.status != Status::Complete {
                    incomplete = true;
                }
            }
            Ok((if incomplete { Outcome::Aborted } else { Outcome::Exhausted }, None))
        }
    }
}

/// Checks every one of the `p!` bijections with [`sem_window`]; no pruning.
///
/// Reports the count as in [`Mode::All`]; the witness is the first in
/// lexicographic permutation order.
pub fn enumerate_unpruned(g: &Graph, limits: SearchLimits) -> Result<SearchReport, SearchError> {
    check_input(g, Mode::All, &limits)?;
    let start = Instant::now();
    let deadline = limits.deadline(start);
    let mut perm: Vec<usize> = (1..=g.order()).collect();
    let mut nodes = 0u64;
    let mut count = 0u64;
    let mut first: Option<VertexLabeling> = None;
    loop {
        nodes += 1;
        if nodes > limits.node_budget || (nodes.is_multiple_of(FLUSH) && deadline.is_some_and(|d| Instant::now() >= d)) {
            return Ok(SearchReport { outcome: Outcome::Aborted, nodes, elapsed: start.elapsed(), limits, solutions: None });
        }
        let f = VertexLabeling::new(perm.clone()).expect("permutation");
        if sem_window(g, &f).is_some() {
            count += 1;
            first.get_or_insert(f);
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    let outcome = match first {
        Some(f) => Outcome::Witness(f),
        None => Outcome::Exhausted,
    };
    Ok(SearchReport { outcome, nodes, elapsed: start.elapsed(), limits, solutions: Some(count) })
}

fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).expect("successor exists");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}
