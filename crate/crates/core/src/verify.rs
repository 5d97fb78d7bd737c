//! Cross-route verification sweep.
//!
//! Each suite compares two or more independent computations of the same
//! quantity over a grid bounded by [`VerifyConfig`]. Grid cells are spread
//! over rayon workers per `(suite, k)`; results are reassembled in a fixed
//! order so the report does not depend on scheduling.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::combinatorics::{
    fuss_catalan, s_polynomial, s_polynomials_recursive, KParameter,
};
use crate::error::{Error, Result};
use crate::formulas::{
    core_series_check, early_adventure_series, early_adventure_total, last_downrun_series_check,
    last_downrun_total, simplification_check, telescoping_check, DmFormula, Fault,
};
use crate::oracle::{
    count_paths_exhaustive, first_downrun_total_exhaustive, first_downrun_total_oracle,
    last_downrun_total_oracle, last_up_row, paths_from_level, terminal_run_total_dp,
    terminal_run_total_exhaustive, PathSpec, FIRST_RUN_STEP_LIMIT,
};
use crate::series::{
    denominator_series_check, kernel_check, kernel_factorization_check, ubar_series, ZSeries,
};
use crate::slices::{generate_f, h_coeffs_by_slices};

/// Paths up to this many steps are also counted by exhaustive enumeration.
pub const EXHAUSTIVE_STEPS: usize = 20;

pub const MAX_K: u32 = 8;
pub const MAX_N: usize = 16;
pub const MAX_ORDER: usize = 200;

/// u-degree through which the kernel factorization is compared.
const FACTORIZATION_U_ORDER: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyConfig {
    pub k_max: u32,
    pub n_max: usize,
    pub order: usize,
    pub fault: Option<Fault>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            k_max: 3,
            n_max: 6,
            order: 20,
            fault: None,
        }
    }
}

impl VerifyConfig {
    pub fn validate(&self) -> Result<()> {
        let check = |what, value: u64, min: u64, max: u64| {
            if (min..=max).contains(&value) {
                Ok(())
            } else {
                Err(Error::OutOfRange {
                    what,
                    value,
                    min,
                    max,
                })
            }
        };
        check("k-max", self.k_max.into(), 1, MAX_K.into())?;
        check("n-max", self.n_max as u64, 1, MAX_N as u64)?;
        check("order", self.order as u64, 1, MAX_ORDER as u64)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    ThreeRoute,
    CoreSeries,
    RowSums,
    Kernel,
    Denominators,
    LastDownrun,
    EarlyAdventure,
    ReturnToAxis,
    SliceRecursion,
    Support,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::ThreeRoute,
        Suite::CoreSeries,
        Suite::RowSums,
        Suite::Kernel,
        Suite::Denominators,
        Suite::LastDownrun,
        Suite::EarlyAdventure,
        Suite::ReturnToAxis,
        Suite::SliceRecursion,
        Suite::Support,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::ThreeRoute => "three-route",
            Suite::CoreSeries => "core-series",
            Suite::RowSums => "row-sums",
            Suite::Kernel => "kernel",
            Suite::Denominators => "denominators",
            Suite::LastDownrun => "last-downrun",
            Suite::EarlyAdventure => "early-adventure",
            Suite::ReturnToAxis => "return-to-axis",
            Suite::SliceRecursion => "slice-recursion",
            Suite::Support => "support",
        }
    }

    fn run(self, k: KParameter, cfg: &VerifyConfig) -> Outcome {
        let formula = DmFormula::with_fault(cfg.fault);
        match self {
            Suite::ThreeRoute => three_route(&formula, k, cfg.n_max),
            Suite::CoreSeries => {
                let j_max = (k.as_usize() + 1) * cfg.n_max + 1;
                core_series_check(&formula, k, cfg.n_max, j_max)
                    .map(|()| ((cfg.n_max + 1) * (j_max + 1)) as u64)
                    .map_err(|e| format!("k={k}: {e}"))
            }
            Suite::RowSums => row_sums(&formula, k, cfg.n_max),
            Suite::Kernel => kernel(k, cfg.order),
            Suite::Denominators => denominators(k, cfg.order),
            Suite::LastDownrun => last_downrun(&formula, k, cfg.n_max, cfg.order),
            Suite::EarlyAdventure => early_adventure(k, cfg.n_max, cfg.order),
            Suite::ReturnToAxis => return_to_axis(k, cfg.n_max),
            Suite::SliceRecursion => slice_recursion(k, cfg.n_max),
            Suite::Support => support(&formula, k, cfg.n_max),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Number of checks performed, or the first counterexample.
type Outcome = std::result::Result<u64, String>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteResult {
    pub suite: Suite,
    pub checks: u64,
    pub counterexample: Option<String>,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub config: VerifyConfig,
    pub suites: Vec<SuiteResult>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(SuiteResult::passed)
    }

    pub fn first_counterexample(&self) -> Option<(Suite, &str)> {
        self.suites
            .iter()
            .find_map(|s| Some((s.suite, s.counterexample.as_deref()?)))
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = &self.config;
        write!(
            f,
            "verify k-max={} n-max={} order={}",
            c.k_max, c.n_max, c.order
        )?;
        if let Some(fault) = c.fault {
            write!(f, " fault={fault}")?;
        }
        writeln!(f)?;
        writeln!(f, "{:<18} {:>8}  result", "suite", "checks")?;
        for s in &self.suites {
            let verdict = if s.passed() { "PASS" } else { "FAIL" };
            writeln!(f, "{:<18} {:>8}  {}", s.suite.name(), s.checks, verdict)?;
            if let Some(cx) = &s.counterexample {
                writeln!(f, "  counterexample: {cx}")?;
            }
        }
        let failed = self.suites.iter().filter(|s| !s.passed()).count();
        if failed == 0 {
            write!(f, "all {} suites passed", self.suites.len())
        } else {
            write!(f, "{failed} of {} suites failed", self.suites.len())
        }
    }
}

/// Runs every suite for `k` in `1..=k_max`.
pub fn run(config: VerifyConfig) -> Result<Report> {
    config.validate()?;
    let tasks: Vec<(Suite, KParameter)> = Suite::ALL
        .iter()
        .flat_map(|&s| (1..=config.k_max).map(move |k| (s, KParameter::new(k).unwrap())))
        .collect();
    let outcomes: Vec<Outcome> = tasks
        .par_iter()
        .map(|&(suite, k)| suite.run(k, &config))
        .collect();

    let mut suites: Vec<SuiteResult> = Suite::ALL
        .iter()
        .map(|&suite| SuiteResult {
            suite,
            checks: 0,
            counterexample: None,
        })
        .collect();
    for ((suite, _), outcome) in tasks.iter().zip(outcomes) {
        let slot = suites
            .iter_mut()
            .find(|r| r.suite == *suite)
            .expect("every suite has a slot");
        match outcome {
            Ok(n) => slot.checks += n,
            Err(cx) => {
                slot.checks += 1;
                // tasks are ordered by k, so the first failure is the smallest k
                slot.counterexample.get_or_insert(cx);
            }
        }
    }
    Ok(Report { config, suites })
}

fn mismatch(what: &str, values: &[(&str, &BigInt)]) -> String {
    let parts: Vec<String> = values.iter().map(|(n, v)| format!("{n}={v}")).collect();
    format!("{what}: {}", parts.join(", "))
}

fn all_equal(values: &[(&str, &BigInt)]) -> bool {
    values.windows(2).all(|w| w[0].1 == w[1].1)
}

/// Closed formula, slice iteration and DP (plus enumeration when small) on
/// every cell `1 <= n <= n_max`, `0 <= j <= (k+1)n + 1`. Columns past `kn`
/// must all be zero.
fn three_route(formula: &DmFormula, k: KParameter, n_max: usize) -> Outcome {
    let kk = k.as_usize();
    let f = generate_f(k, n_max - 1);
    let mut checks = 0;
    for n in 1..=n_max {
        let row = last_up_row(k, n);
        let exhaustive = (kk + 1) * n <= EXHAUSTIVE_STEPS;
        for j in 0..=(kk + 1) * n + 1 {
            let closed = formula.count(k, n, j);
            let sliced = f[n - 1].coeff(n, j).clone();
            let dp = row.get(j).cloned().unwrap_or_default();
            let mut values = vec![("formula", &closed), ("slices", &sliced), ("dp", &dp)];
            let brute;
            if exhaustive {
                brute = count_paths_exhaustive(PathSpec::new(k, n, j, true))
                    .map_err(|e| e.to_string())?;
                values.push(("exhaustive", &brute));
            }
            if !all_equal(&values) {
                return Err(mismatch(&format!("k={k} n={n} j={j}"), &values));
            }
            checks += 1;
        }
    }
    Ok(checks)
}

fn row_sums(formula: &DmFormula, k: KParameter, n_max: usize) -> Outcome {
    for n in 1..=n_max {
        let sum: BigInt = (0..=k.as_usize() * n).map(|j| formula.count(k, n, j)).sum();
        let fc = fuss_catalan(k, n as i64);
        if sum != fc {
            return Err(mismatch(
                &format!("k={k} n={n}"),
                &[("row sum", &sum), ("fuss-catalan", &fc)],
            ));
        }
    }
    Ok(n_max as u64)
}

fn kernel(k: KParameter, order: usize) -> Outcome {
    kernel_check(k, order).map_err(|e| format!("k={k}: {e}"))?;
    kernel_factorization_check(k, FACTORIZATION_U_ORDER, order)
        .map_err(|e| format!("k={k}: {e}"))?;
    Ok(2)
}

fn denominators(k: KParameter, j_max: usize) -> Outcome {
    for (j, rec) in s_polynomials_recursive(k, j_max).iter().enumerate() {
        let closed = s_polynomial(k, j);
        if &closed != rec {
            return Err(format!("k={k} j={j}: closed S_j = {closed}, recursive S_j = {rec}"));
        }
    }
    denominator_series_check(k, j_max).map_err(|e| format!("k={k}: {e}"))?;
    Ok(j_max as u64 + 2)
}

fn last_downrun(formula: &DmFormula, k: KParameter, n_max: usize, order: usize) -> Outcome {
    let kk = k.as_usize();
    for m in 1..=n_max {
        let closed = last_downrun_total(k, m);
        let fc_diff = fuss_catalan(k, m as i64 + 1) - fuss_catalan(k, m as i64);
        let weighted: BigInt = (0..=kk * m).map(|j| formula.count(k, m, j) * j).sum();
        let oracle = last_downrun_total_oracle(k, m);
        let literal = terminal_run_total_dp(k, m);
        let mut values = vec![
            ("closed", &closed),
            ("fc-diff", &fc_diff),
            ("weighted-formula", &weighted),
            ("oracle", &oracle),
            ("terminal-run", &literal),
        ];
        let brute;
        if (kk + 1) * m <= EXHAUSTIVE_STEPS {
            brute = terminal_run_total_exhaustive(k, m).map_err(|e| e.to_string())?;
            values.push(("exhaustive", &brute));
        }
        if !all_equal(&values) {
            return Err(mismatch(&format!("k={k} m={m}"), &values));
        }
    }
    last_downrun_series_check(k, order).map_err(|e| format!("k={k}: {e}"))?;
    Ok(n_max as u64 + 1)
}

fn early_adventure(k: KParameter, n_max: usize, order: usize) -> Outcome {
    let kk = k.as_usize();
    for m in 0..n_max {
        let closed = early_adventure_total(k, m);
        let oracle = first_downrun_total_oracle(k, m);
        let mut values = vec![("closed", &closed), ("oracle", &oracle)];
        let brute;
        if (kk + 1) * (m + 1) <= FIRST_RUN_STEP_LIMIT {
            brute = first_downrun_total_exhaustive(k, m).map_err(|e| e.to_string())?;
            values.push(("exhaustive", &brute));
        }
        if !all_equal(&values) {
            return Err(mismatch(&format!("k={k} m={m}"), &values));
        }
    }
    let series = early_adventure_series(k, order);
    for (m, coeff) in series.coeffs().iter().enumerate() {
        let closed = early_adventure_total(k, m);
        if coeff != &closed {
            return Err(mismatch(
                &format!("k={k} m={m}"),
                &[("Σ ū^h coefficient", coeff), ("closed", &closed)],
            ));
        }
    }
    telescoping_check(k, order).map_err(|e| format!("k={k}: {e}"))?;
    simplification_check(k, order).map_err(|e| format!("k={k}: {e}"))?;
    Ok(n_max as u64 + order as u64 + 3)
}

/// Slice iteration, `[h=0] + ū^(h+1) - ū^h` and the level DP, per start level.
fn return_to_axis(k: KParameter, n_max: usize) -> Outcome {
    let ubar = ubar_series(k, n_max);
    let mut checks = 0;
    for h in 0..=k.get() {
        let mut closed = &ubar.pow(h + 1) - &ubar.pow(h);
        if h == 0 {
            closed = &closed + &ZSeries::one(n_max);
        }
        let sliced = h_coeffs_by_slices(k, h as usize, n_max);
        for m in 0..=n_max {
            let dp = paths_from_level(k, h as usize, m);
            let values = [
                ("slices", &sliced.coeffs()[m]),
                ("ū powers", &closed.coeffs()[m]),
                ("dp", &dp),
            ];
            if !all_equal(&values) {
                return Err(mismatch(&format!("k={k} h={h} m={m}"), &values));
            }
            checks += 1;
        }
    }
    Ok(checks)
}

/// `(1-u) F_{m+1} + z u^(k+1) F_m = z u^k F_m(z,1)` and the level floor `k`.
fn slice_recursion(k: KParameter, n_max: usize) -> Outcome {
    let kk = k.as_usize();
    let f = generate_f(k, n_max);
    let one_minus_u = crate::bivariate::BivariatePoly::from_terms([
        ((0, 0), BigInt::one()),
        ((0, 1), -BigInt::one()),
    ]);
    for m in 0..n_max {
        let lhs = &(&one_minus_u * &f[m + 1]) + &f[m].shift(1, kk + 1);
        let rhs = f[m].at_u_one().shift(1, kk);
        lhs.check_equal(&rhs, "slice recursion")
            .map_err(|e| format!("k={k} m={m}: {e}"))?;
    }
    for (m, poly) in f.iter().enumerate() {
        if let Some((lo, _)) = poly.u_degree_bounds() {
            if lo < kk {
                return Err(format!("k={k} m={m}: F_m has a term at level {lo} < k"));
            }
        }
    }
    Ok(2 * n_max as u64 + 1)
}

/// Nonnegativity of the core sum and the single all-up path.
fn support(formula: &DmFormula, k: KParameter, n_max: usize) -> Outcome {
    let kk = k.as_usize();
    let mut checks = 0;
    for n in 0..=n_max as i64 {
        for j in 0..=((kk + 1) * n as usize + 1) as i64 {
            let v = formula.core(k, n, j);
            if v < BigInt::zero() {
                return Err(format!("k={k} n={n} j={j}: core sum is negative ({v})"));
            }
            checks += 1;
        }
    }
    for n in 1..=n_max {
        let top = formula.count(k, n, kk * n);
        if !top.is_one() {
            return Err(format!("k={k} n={n} j={}: all-up path count is {top}", kk * n));
        }
        checks += 1;
    }
    Ok(checks)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stock_build_passes() {
        let report = run(VerifyConfig::default()).unwrap();
        assert!(report.passed(), "{report}");
        assert_eq!(report.suites.len(), Suite::ALL.len());
        assert!(report.suites.iter().all(|s| s.checks > 0));
    }

    #[test]
    fn minimal_sweep_passes() {
        let cfg = VerifyConfig {
            k_max: 1,
            n_max: 1,
            order: 1,
            fault: None,
        };
        assert!(run(cfg).unwrap().passed());
    }

    #[test]
    fn every_fault_is_caught() {
        for fault in Fault::ALL {
            let cfg = VerifyConfig {
                fault: Some(fault),
                ..VerifyConfig::default()
            };
            let report = run(cfg).unwrap();
            assert!(!report.passed(), "{fault} not detected");
            let (_, cx) = report.first_counterexample().unwrap();
            assert!(cx.contains("k="), "{cx}");
        }
    }

    #[test]
    fn report_is_deterministic() {
        let cfg = VerifyConfig {
            fault: Some(Fault::GeneralizedBinomial),
            ..VerifyConfig::default()
        };
        let a = run(cfg).unwrap().to_string();
        let b = run(cfg).unwrap().to_string();
        assert_eq!(a, b);
    }

    #[test]
    fn rejects_out_of_range_bounds() {
        let cfg = VerifyConfig {
            k_max: 0,
            ..VerifyConfig::default()
        };
        assert!(matches!(run(cfg), Err(Error::OutOfRange { what: "k-max", .. })));
        let cfg = VerifyConfig {
            n_max: MAX_N + 1,
            ..VerifyConfig::default()
        };
        assert!(run(cfg).is_err());
    }
}
