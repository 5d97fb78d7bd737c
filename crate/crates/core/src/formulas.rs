//! Closed-form counts.
//!
//! With `ū` the power-series root of the kernel `1 - u + z u^(k+1)`, the
//! generating function of paths ending in an up-step is
//! `F(z, u) = z u^k (ū - u) / (1 - u + z u^(k+1))`. Reading off
//! `[z^n u^j] (ū - u) / kernel` gives [`dm_core`], an alternating sum of
//! `O(j)` terms; the prefactor `z u^k` shifts it to [`dm_count`].
//!
//! Both run-length statistics reduce to Fuss–Catalan numbers:
//! [`last_downrun_total`] is `FC(m+1) - FC(m)` and [`early_adventure_total`]
//! is `k/(m+1) binomial((k+1)m, m)`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::bivariate::BivariatePoly;
use crate::combinatorics::{binomial, fuss_catalan, fuss_catalan_sequence, KParameter};
use crate::error::IdentityError;
use crate::series::{ubar_series, ZSeries};

/// Deliberate defects for exercising the verification harness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Fault {
    /// Use the generalized binomial `(-1)^b binomial(b-a-1, b)` for `a < 0`.
    GeneralizedBinomial,
    /// Shift the end level by `k - 1` instead of `k`.
    ShiftOffByOne,
    /// Omit the `(-1)^n binomial(j-1-kn, n)` correction term.
    DroppedSecondTerm,
}

impl Fault {
    pub const ALL: [Fault; 3] = [
        Fault::GeneralizedBinomial,
        Fault::ShiftOffByOne,
        Fault::DroppedSecondTerm,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Fault::GeneralizedBinomial => "generalized-binomial",
            Fault::ShiftOffByOne => "shift-off-by-one",
            Fault::DroppedSecondTerm => "dropped-second-term",
        }
    }
}

impl fmt::Display for Fault {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Fault {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Fault::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| format!("unknown fault '{s}'"))
    }
}

/// Evaluator for the end-level count, optionally with one injected [`Fault`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct DmFormula {
    fault: Option<Fault>,
}

impl DmFormula {
    pub fn with_fault(fault: Option<Fault>) -> Self {
        Self { fault }
    }

    pub fn fault(&self) -> Option<Fault> {
        self.fault
    }

    fn binomial(&self, a: i64, b: i64) -> BigInt {
        if self.fault == Some(Fault::GeneralizedBinomial) && a < 0 && b >= 0 {
            let mag = binomial(b - a - 1, b);
            return if b % 2 == 0 { mag } else { -mag };
        }
        binomial(a, b)
    }

    /// `[z^n u^j] (ū - u) / (1 - u + z u^(k+1))`; zero for negative `n` or `j`.
    pub fn core(&self, k: KParameter, n: i64, j: i64) -> BigInt {
        if n < 0 || j < 0 {
            return BigInt::zero();
        }
        let kk = k.as_i64();
        // FC(n - m) vanishes for m > n.
        let m_top = (j / kk).min(n);
        let fc = fuss_catalan_sequence(k, n as usize);
        let mut sum = BigInt::zero();
        for m in 0..=m_top {
            let term = self.binomial(j - kk * m, m) * &fc[(n - m) as usize];
            if m % 2 == 0 {
                sum += term;
            } else {
                sum -= term;
            }
        }
        if self.fault != Some(Fault::DroppedSecondTerm) {
            let tail = self.binomial(j - 1 - kk * n, n);
            if n % 2 == 0 {
                sum -= tail;
            } else {
                sum += tail;
            }
        }
        sum
    }

    /// Paths with `n` up-steps ending at level `j` whose last step is up.
    pub fn count(&self, k: KParameter, n: usize, j: usize) -> BigInt {
        let shift = match self.fault {
            Some(Fault::ShiftOffByOne) => k.as_i64() - 1,
            _ => k.as_i64(),
        };
        self.core(k, n as i64 - 1, j as i64 - shift)
    }
}

/// `[z^n u^j] (ū - u) / (1 - u + z u^(k+1))`, i.e.
/// `Σ_{0<=m<=j/k} (-1)^m binomial(j-km, m) FC(n-m) - (-1)^n binomial(j-1-kn, n)`.
/// Negative arguments give zero.
pub fn dm_core(k: KParameter, n: i64, j: i64) -> BigInt {
    DmFormula::default().core(k, n, j)
}

/// Number of k-Dyck paths with `n` up-steps, last step an up-step, ending at
/// level `j`. Equals `dm_core(k, n - 1, j - k)`: the `z u^k` prefactor of the
/// generating function moves index `(n, j)` of the core to `(n + 1, j + k)`.
/// Zero off the support `1 <= n`, `k <= j <= kn`.
pub fn dm_count(k: KParameter, n: usize, j: usize) -> BigInt {
    DmFormula::default().count(k, n, j)
}

/// Summed length of the terminal down-run over complete paths with `m`
/// up-steps: `FC(m+1) - FC(m)`.
pub fn last_downrun_total(k: KParameter, m: usize) -> BigInt {
    fuss_catalan(k, m as i64 + 1) - fuss_catalan(k, m as i64)
}

/// [`last_downrun_total`] for `m` in `0..=m_max`.
pub fn last_downrun_totals(k: KParameter, m_max: usize) -> Vec<BigInt> {
    fuss_catalan_sequence(k, m_max + 1)
        .windows(2)
        .map(|w| &w[1] - &w[0])
        .collect()
}

/// Summed length of the down-run after the first up-step, over complete
/// paths with `m + 1` up-steps: `k/(m+1) binomial((k+1)m, m)` for `m >= 1`,
/// and `k` for `m = 0` (the single path `U D^k`).
pub fn early_adventure_total(k: KParameter, m: usize) -> BigInt {
    if m == 0 {
        return BigInt::from(k.get());
    }
    let kk = k.as_i64();
    let m = m as i64;
    let num = binomial((kk + 1) * m, m) * kk;
    let (q, r) = num.div_rem(&BigInt::from(m + 1));
    assert!(r.is_zero(), "early-adventure division not exact at m={m}");
    q
}

/// [`early_adventure_total`] for `m` in `0..=m_max`, from the Fuss–Catalan
/// table: `k (km + 1) FC(m) / (m + 1)`.
pub fn early_adventure_totals(k: KParameter, m_max: usize) -> Vec<BigInt> {
    let kk = u64::from(k.get());
    fuss_catalan_sequence(k, m_max)
        .into_iter()
        .enumerate()
        .map(|(m, fc)| {
            let m = m as u64;
            let (q, r) = (fc * kk * (kk * m + 1)).div_rem(&BigInt::from(m + 1));
            assert!(r.is_zero(), "early-adventure ratio not exact at m={m}");
            q
        })
        .collect()
}

/// `Σ_{h=1..k} ū^h` through `z^order`.
pub fn early_adventure_series(k: KParameter, order: usize) -> ZSeries {
    let ubar = ubar_series(k, order);
    let mut power = ubar.clone();
    let mut sum = ubar.clone();
    for _ in 1..k.get() {
        power = &power * &ubar;
        sum = &sum + &power;
    }
    sum
}

/// `k + Σ_{h=0..k} (k-h)(ū^(h+1) - ū^h) == Σ_{h=1..k} ū^h` through `z^order`.
pub fn telescoping_check(k: KParameter, order: usize) -> Result<usize, IdentityError> {
    let ubar = ubar_series(k, order);
    let kk = k.get();
    let mut lhs = ZSeries::constant(BigInt::from(kk), order);
    for h in 0..=kk {
        let diff = &ubar.pow(h + 1) - &ubar.pow(h);
        lhs = &lhs + &diff.scale(&BigInt::from(kk - h));
    }
    lhs.check_equal(&early_adventure_series(k, order), "telescoping sum")
}

/// Checks that `E = Σ_m early_adventure_total(k, m) z^m` satisfies
/// `z ū^(k+1) (1 + E) = ū^(k+1) - 1`, the multiplied-out form of
/// `E = -1 + 1/z + 1/(1 - ū)`.
pub fn simplification_check(k: KParameter, order: usize) -> Result<usize, IdentityError> {
    let ubar = ubar_series(k, order);
    let power = ubar.pow(k.get() + 1);
    let closed = ZSeries::new(early_adventure_totals(k, order));
    let one = ZSeries::one(order);
    let lhs = (&power * &(&one + &closed)).times_z().truncate(order);
    let rhs = &power - &one;
    lhs.check_equal(&rhs, "z ū^(k+1) (1 + E) = ū^(k+1) - 1")
}

/// Checks that `D = Σ_m last_downrun_total(k, m) z^m` satisfies
/// `z D = ū - z ū - 1`, the multiplied-out form of `D = ū/z - ū - 1/z`.
pub fn last_downrun_series_check(k: KParameter, order: usize) -> Result<usize, IdentityError> {
    let ubar = ubar_series(k, order);
    let totals = ZSeries::new(last_downrun_totals(k, order));
    let lhs = totals.times_z().truncate(order);
    let rhs = &(&ubar - &ubar.times_z()) - &ZSeries::one(order);
    lhs.check_equal(&rhs, "z D = ū - z ū - 1")
}

/// Checks `G (1 - u + z u^(k+1)) = ū - u` where `G` collects
/// `formula.core(k, n, j)` for `n <= n_max`, `j <= j_max`. Compared on that
/// same box, which the truncated `G` determines.
pub fn core_series_check(
    formula: &DmFormula,
    k: KParameter,
    n_max: usize,
    j_max: usize,
) -> Result<(), IdentityError> {
    let mut g = BivariatePoly::zero();
    for n in 0..=n_max {
        for j in 0..=j_max {
            g.add_term(n, j, formula.core(k, n as i64, j as i64));
        }
    }
    let product = &g * &BivariatePoly::kernel(k);
    let mut lhs = BivariatePoly::zero();
    for ((z, u), c) in product.terms() {
        if z <= n_max && u <= j_max {
            lhs.add_term(z, u, c.clone());
        }
    }
    let ubar = ubar_series(k, n_max);
    let mut rhs = BivariatePoly::from_terms(
        ubar.coeffs()
            .iter()
            .enumerate()
            .map(|(z, c)| ((z, 0), c.clone())),
    );
    if j_max >= 1 {
        rhs.add_term(0, 1, -BigInt::one());
    }
    lhs.check_equal(&rhs, "(ū - u) / kernel")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{count_paths, PathSpec};

    fn k(v: u32) -> KParameter {
        KParameter::new(v).unwrap()
    }

    #[test]
    fn dm_core_spot_values() {
        assert_eq!(dm_core(k(1), 0, 0), BigInt::from(1));
        assert_eq!(dm_core(k(1), 2, 0), BigInt::from(2));
        assert_eq!(dm_core(k(2), 1, 2), BigInt::from(1));
        assert_eq!(dm_core(k(2), -1, 2), BigInt::zero());
        assert_eq!(dm_core(k(2), 1, -2), BigInt::zero());
    }

    #[test]
    fn dm_count_spot_values() {
        assert_eq!(dm_count(k(1), 1, 1), BigInt::from(1));
        assert_eq!(dm_count(k(1), 3, 1), BigInt::from(2));
        // level 1 is below the floor k = 2 for a path ending in an up-step
        assert_eq!(dm_count(k(2), 2, 1), BigInt::zero());
        assert_eq!(dm_count(k(2), 2, 2), BigInt::from(1));
        assert_eq!(dm_count(k(2), 2, 7), BigInt::zero());
        assert_eq!(dm_count(k(2), 0, 0), BigInt::zero());
    }

    #[test]
    fn all_up_path_is_unique() {
        for kk in 1..=5u32 {
            for n in 1..=10usize {
                assert_eq!(dm_count(k(kk), n, kk as usize * n), BigInt::one());
            }
        }
    }

    #[test]
    fn dm_count_is_zero_past_the_top_level() {
        // The correction term is what cancels the alternating sum here.
        for kk in 1..=3u32 {
            for n in 1..=6usize {
                for j in kk as usize * n + 1..=(kk as usize + 1) * n + 3 {
                    assert_eq!(dm_count(k(kk), n, j), BigInt::zero(), "k={kk} n={n} j={j}");
                }
            }
        }
    }

    #[test]
    fn statistic_spot_values() {
        for kk in 1..=4 {
            assert_eq!(last_downrun_total(k(kk), 0), BigInt::zero());
        }
        assert_eq!(last_downrun_total(k(1), 2), BigInt::from(3));
        assert_eq!(last_downrun_total(k(2), 1), BigInt::from(2));
        assert_eq!(early_adventure_total(k(1), 1), BigInt::from(1));
        assert_eq!(early_adventure_total(k(2), 1), BigInt::from(3));
        assert_eq!(early_adventure_total(k(2), 0), BigInt::from(2));
        let seq: Vec<_> = (0..4).map(|m| early_adventure_total(k(2), m)).collect();
        assert_eq!(seq, [2, 3, 10, 42].map(BigInt::from));
    }

    #[test]
    fn batch_sequences_match_single_terms() {
        for kk in 1..=5 {
            let last = last_downrun_totals(k(kk), 30);
            let early = early_adventure_totals(k(kk), 30);
            for m in 0..=30 {
                assert_eq!(last[m], last_downrun_total(k(kk), m));
                assert_eq!(early[m], early_adventure_total(k(kk), m));
            }
        }
    }

    #[test]
    fn early_adventure_series_spot_values() {
        assert_eq!(
            early_adventure_series(k(1), 3),
            ZSeries::from_i64(&[1, 1, 2, 5])
        );
        assert_eq!(early_adventure_series(k(2), 1), ZSeries::from_i64(&[2, 3]));
        for kk in 1..=5 {
            assert_eq!(
                early_adventure_series(k(kk), 0),
                ZSeries::from_i64(&[kk as i64])
            );
        }
    }

    #[test]
    fn series_identities() {
        for kk in 1..=5 {
            assert_eq!(telescoping_check(k(kk), 15), Ok(15));
            assert_eq!(simplification_check(k(kk), 15), Ok(15));
            assert_eq!(last_downrun_series_check(k(kk), 15), Ok(15));
            let closed = ZSeries::new(early_adventure_totals(k(kk), 12));
            assert_eq!(early_adventure_series(k(kk), 12), closed);
        }
        assert_eq!(simplification_check(k(3), 0), Ok(0));
    }

    #[test]
    fn core_identity_holds_and_faults_break_it() {
        for kk in 1..=4 {
            assert!(core_series_check(&DmFormula::default(), k(kk), 8, 20).is_ok());
        }
        for fault in [Fault::GeneralizedBinomial, Fault::DroppedSecondTerm] {
            let bad = DmFormula::with_fault(Some(fault));
            assert!(core_series_check(&bad, k(1), 6, 12).is_err(), "{fault}");
        }
    }

    #[test]
    fn faults_change_counts() {
        let n = 3;
        for fault in Fault::ALL {
            let bad = DmFormula::with_fault(Some(fault));
            let differs = (0..=(2 * n + 2)).any(|j| {
                bad.count(k(1), n, j) != count_paths(PathSpec::new(k(1), n, j, true))
            });
            assert!(differs, "{fault} went unnoticed");
            assert_eq!(fault.name().parse::<Fault>(), Ok(fault));
        }
        assert!("nope".parse::<Fault>().is_err());
    }

    #[test]
    fn large_query_is_exact_and_positive() {
        let v = dm_count(k(3), 300, 450);
        assert!(v > BigInt::zero());
    }
}
