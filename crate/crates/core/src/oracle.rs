//! Ground-truth path counts.
//!
//! Two tiers: dynamic programming over `(up-steps used, level, last step)`
//! for medium sizes, and exhaustive enumeration of step sequences for tiny
//! sizes. Nothing here touches generating functions.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::combinatorics::KParameter;
use crate::error::{Error, Result};

/// Largest path length, in steps, that [`enumerate_paths`] will walk.
pub const ENUMERATION_STEP_LIMIT: usize = 30;

/// Largest path length for the exhaustive first-down-run measurement.
pub const FIRST_RUN_STEP_LIMIT: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    Up,
    Down,
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Step::Up => "U",
            Step::Down => "D",
        })
    }
}

pub fn path_to_string(path: &[Step]) -> String {
    path.iter().map(Step::to_string).collect()
}

/// A counting query: paths from level 0 with exactly `n_up` up-steps that
/// end at `end_level`, optionally required to end with an up-step.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PathSpec {
    pub k: KParameter,
    pub n_up: usize,
    pub end_level: usize,
    pub require_last_up: bool,
}

impl PathSpec {
    pub fn new(k: KParameter, n_up: usize, end_level: usize, require_last_up: bool) -> Self {
        Self {
            k,
            n_up,
            end_level,
            require_last_up,
        }
    }

    /// Down-steps implied by the end level, if it is reachable at all.
    pub fn down_steps(&self) -> Option<usize> {
        (self.k.as_usize() * self.n_up).checked_sub(self.end_level)
    }
}

/// Counts after a fixed number of up-steps, split by the last step taken.
#[derive(Debug, Clone)]
struct Layer {
    /// Only the empty path, before any step.
    empty: Vec<BigInt>,
    last_up: Vec<BigInt>,
    last_down: Vec<BigInt>,
}

impl Layer {
    fn start() -> Self {
        Self {
            empty: vec![BigInt::from(1)],
            last_up: vec![BigInt::zero()],
            last_down: vec![BigInt::zero()],
        }
    }

    fn total(&self, level: usize) -> BigInt {
        let get = |v: &Vec<BigInt>| v.get(level).cloned().unwrap_or_default();
        get(&self.empty) + get(&self.last_up) + get(&self.last_down)
    }

    /// One up-step from every state, then any number of down-steps.
    fn advance(&self, k: usize) -> Self {
        let width = self.last_up.len() + k;
        let mut last_up = vec![BigInt::zero(); width];
        for (level, slot) in last_up.iter_mut().enumerate().skip(k) {
            *slot = self.total(level - k);
        }
        let mut last_down = vec![BigInt::zero(); width];
        for level in (1..width).rev() {
            let arriving = &last_up[level] + &last_down[level];
            last_down[level - 1] = arriving;
        }
        Self {
            empty: vec![BigInt::zero(); width],
            last_up,
            last_down,
        }
    }
}

fn layers(k: KParameter, n_max: usize) -> Vec<Layer> {
    let mut out = vec![Layer::start()];
    for n in 0..n_max {
        let next = out[n].advance(k.as_usize());
        out.push(next);
    }
    out
}

/// Number of paths matching `spec`, by dynamic programming.
pub fn count_paths(spec: PathSpec) -> BigInt {
    if spec.down_steps().is_none() {
        return BigInt::zero();
    }
    let layer = layers(spec.k, spec.n_up).pop().expect("layer 0 exists");
    let j = spec.end_level;
    if spec.require_last_up {
        layer.last_up[j].clone()
    } else {
        layer.total(j)
    }
}

/// `row[j]` = paths with `n` up-steps, last step up, ending at level `j`,
/// for `j` in `0..=k n`.
pub fn last_up_row(k: KParameter, n: usize) -> Vec<BigInt> {
    layers(k, n).pop().expect("layer 0 exists").last_up
}

/// Iterator over complete k-Dyck paths (back on the axis after all
/// `(k+1) n_up` steps), in lexicographic order with `U < D`.
#[derive(Debug, Clone)]
pub struct PathIter {
    k: usize,
    n_up: usize,
    len: usize,
    steps: Vec<Step>,
    ups: usize,
    level: usize,
    started: bool,
    done: bool,
}

impl PathIter {
    fn push(&mut self, step: Step) {
        match step {
            Step::Up => {
                self.ups += 1;
                self.level += self.k;
            }
            Step::Down => self.level -= 1,
        }
        self.steps.push(step);
    }

    fn pop(&mut self) -> Option<Step> {
        let step = self.steps.pop()?;
        match step {
            Step::Up => {
                self.ups -= 1;
                self.level -= self.k;
            }
            Step::Down => self.level += 1,
        }
        Some(step)
    }

    /// Greedy completion: every remaining up-step first, then the descent.
    fn complete(&mut self) {
        while self.steps.len() < self.len {
            let step = if self.ups < self.n_up {
                Step::Up
            } else {
                Step::Down
            };
            self.push(step);
        }
    }

    /// Replace the deepest `U` that can legally become a `D`.
    fn advance(&mut self) -> bool {
        while let Some(step) = self.pop() {
            if step == Step::Up && self.level >= 1 {
                self.push(Step::Down);
                self.complete();
                return true;
            }
        }
        false
    }
}

impl Iterator for PathIter {
    type Item = Vec<Step>;

    fn next(&mut self) -> Option<Vec<Step>> {
        if self.done {
            return None;
        }
        let found = if self.started {
            self.advance()
        } else {
            self.started = true;
            self.complete();
            true
        };
        if found {
            Some(self.steps.clone())
        } else {
            self.done = true;
            None
        }
    }
}

/// Every complete path with `n_up` up-steps, exactly once. Rejects sizes
/// over [`ENUMERATION_STEP_LIMIT`] steps.
pub fn enumerate_paths(k: KParameter, n_up: usize) -> Result<PathIter> {
    let len = (k.as_usize() + 1) * n_up;
    if len > ENUMERATION_STEP_LIMIT {
        return Err(Error::TooLarge {
            steps: len,
            limit: ENUMERATION_STEP_LIMIT,
        });
    }
    Ok(PathIter {
        k: k.as_usize(),
        n_up,
        len,
        steps: Vec::with_capacity(len),
        ups: 0,
        level: 0,
        started: false,
        done: false,
    })
}

/// Length of the maximal run of down-steps ending the path.
pub fn terminal_run(path: &[Step]) -> usize {
    path.iter().rev().take_while(|&&s| s == Step::Down).count()
}

/// Length of the maximal run of down-steps right after the first up-step.
pub fn first_run(path: &[Step]) -> usize {
    path.iter()
        .skip(1)
        .take_while(|&&s| s == Step::Down)
        .count()
}

/// [`count_paths`] recomputed from [`enumerate_paths`]. Removing the last
/// `end_level` down-steps of a complete path is a bijection onto the paths
/// ending at that level, so only complete paths need walking.
pub fn count_paths_exhaustive(spec: PathSpec) -> Result<BigInt> {
    let j = spec.end_level;
    let mut count = 0u64;
    for path in enumerate_paths(spec.k, spec.n_up)? {
        let run = terminal_run(&path);
        let hit = if spec.require_last_up {
            spec.n_up > 0 && run == j
        } else {
            run >= j
        };
        count += u64::from(hit);
    }
    Ok(BigInt::from(count))
}

/// Total length of the terminal down-run over complete paths with `m`
/// up-steps, weighted through the end level of the up-ending prefix:
/// `Σ_j j * count_paths(k, m, j, last_up)`.
pub fn last_downrun_total_oracle(k: KParameter, m: usize) -> BigInt {
    last_up_row(k, m)
        .iter()
        .enumerate()
        .map(|(j, c)| c * j)
        .sum()
}

/// Total terminal down-run length measured literally: a DP over complete
/// paths that carries, per state, the summed length of the current trailing
/// run of down-steps.
pub fn terminal_run_total_dp(k: KParameter, m: usize) -> BigInt {
    let k = k.as_usize();
    // (count, run-weight) per level, split by last step; the empty path sits
    // in `down` with run 0.
    let mut up_c = vec![BigInt::zero()];
    let mut down_c = vec![BigInt::from(1)];
    let mut down_w = vec![BigInt::zero()];
    for _ in 0..m {
        let width = up_c.len() + k;
        let mut nu = vec![BigInt::zero(); width];
        for level in k..width {
            nu[level] = &up_c[level - k] + &down_c[level - k];
        }
        let mut nd = vec![BigInt::zero(); width];
        let mut nw = vec![BigInt::zero(); width];
        for level in (1..width).rev() {
            let arriving = &nu[level] + &nd[level];
            nw[level - 1] = &nw[level] + &arriving;
            nd[level - 1] = arriving;
        }
        up_c = nu;
        down_c = nd;
        down_w = nw;
    }
    down_w[0].clone()
}

/// Literal terminal-run total over [`enumerate_paths`].
pub fn terminal_run_total_exhaustive(k: KParameter, m: usize) -> Result<BigInt> {
    let total: usize = enumerate_paths(k, m)?.map(|p| terminal_run(&p)).sum();
    Ok(BigInt::from(total))
}

/// Paths from level `h` to level 0 made of exactly `m` slices, each one
/// up-step followed by a possibly empty run of down-steps, never below 0.
pub fn paths_from_level(k: KParameter, h: usize, m: usize) -> BigInt {
    let k = k.as_usize();
    let mut dist = vec![BigInt::zero(); h + 1];
    dist[h] = BigInt::from(1);
    for _ in 0..m {
        // From level l the slice can stop anywhere in 0..=l+k.
        let width = dist.len() + k;
        let mut next = vec![BigInt::zero(); width];
        let mut running = BigInt::zero();
        for target in (0..width).rev() {
            if target >= k {
                running += &dist[target - k];
            }
            next[target] = running.clone();
        }
        dist = next;
    }
    dist[0].clone()
}

/// Total length of the down-run after the first up-step, over complete
/// paths with `m + 1` up-steps: `Σ_{i=0..k} i * paths_from_level(k, k-i, m)`.
pub fn first_downrun_total_oracle(k: KParameter, m: usize) -> BigInt {
    let kk = k.as_usize();
    (0..=kk)
        .map(|i| paths_from_level(k, kk - i, m) * i)
        .sum()
}

/// [`first_downrun_total_oracle`] by direct inspection of every path.
pub fn first_downrun_total_exhaustive(k: KParameter, m: usize) -> Result<BigInt> {
    let len = (k.as_usize() + 1) * (m + 1);
    if len > FIRST_RUN_STEP_LIMIT {
        return Err(Error::TooLarge {
            steps: len,
            limit: FIRST_RUN_STEP_LIMIT,
        });
    }
    let total: usize = enumerate_paths(k, m + 1)?.map(|p| first_run(&p)).sum();
    Ok(BigInt::from(total))
}

/// Oracle counts for paths ending with an up-step, with the two run-length
/// statistics accumulated per number of up-steps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StatLedger {
    pub k: KParameter,
    /// `(n_up, end_level) -> count`, last step up, zero cells omitted.
    pub counts: BTreeMap<(usize, usize), BigInt>,
    /// Index `m`: summed terminal down-run over complete paths with `m` up-steps.
    pub last_downrun_totals: Vec<BigInt>,
    /// Index `m`: summed first down-run over complete paths with `m + 1` up-steps.
    pub first_downrun_totals: Vec<BigInt>,
}

impl StatLedger {
    pub fn tabulate(k: KParameter, n_max: usize) -> Self {
        let mut counts = BTreeMap::new();
        let mut last_downrun_totals = Vec::with_capacity(n_max + 1);
        for (n, layer) in layers(k, n_max).into_iter().enumerate() {
            let mut weighted = BigInt::zero();
            for (j, c) in layer.last_up.into_iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                weighted += &c * j;
                counts.insert((n, j), c);
            }
            last_downrun_totals.push(weighted);
        }
        let first_downrun_totals = (0..=n_max)
            .map(|m| first_downrun_total_oracle(k, m))
            .collect();
        Self {
            k,
            counts,
            last_downrun_totals,
            first_downrun_totals,
        }
    }

    pub fn count(&self, n_up: usize, end_level: usize) -> BigInt {
        self.counts
            .get(&(n_up, end_level))
            .cloned()
            .unwrap_or_default()
    }

    /// All paths with `n_up >= 1` up-steps ending in an up-step; equals the
    /// number of complete paths with `n_up` up-steps.
    pub fn row_total(&self, n_up: usize) -> BigInt {
        self.counts
            .range((n_up, 0)..(n_up + 1, 0))
            .map(|(_, c)| c)
            .sum()
    }
}
