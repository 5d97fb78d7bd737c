//! Truncated power series in `z` and the kernel root `ū`.
//!
//! `ū` is the power-series root of `1 - u + z u^(k+1) = 0`. It is built two
//! ways: from Fuss–Catalan coefficients ([`ubar_series`]) and by fixed-point
//! iteration of `u <- 1 + z u^(k+1)` ([`ubar_fixed_point`]). Identities are
//! always checked in multiplied-out form; no series is ever divided.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::bivariate::BivariatePoly;
use crate::combinatorics::{fuss_catalan_sequence, s_polynomial, KParameter};
use crate::error::IdentityError;

/// Power series in `z` known exactly through `z^order`. Coefficients above
/// the order are unknown, so binary operations yield the smaller order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ZSeries {
    coeffs: Vec<BigInt>,
}

impl ZSeries {
    /// Series with the given coefficients for `z^0..z^(len-1)`.
    ///
    /// Panics on an empty vector: a series always knows its constant term.
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        assert!(!coeffs.is_empty(), "series needs at least one coefficient");
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![BigInt::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(BigInt::one(), order)
    }

    pub fn constant(c: BigInt, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// `None` above the truncation order.
    pub fn coeff(&self, i: usize) -> Option<&BigInt> {
        self.coeffs.get(i)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Self {
        let n = order.min(self.order()) + 1;
        Self {
            coeffs: self.coeffs[..n].to_vec(),
        }
    }

    /// Multiply by `z`. The result is known one order further.
    pub fn times_z(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(BigInt::zero());
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut result = Self::one(self.order());
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Compare through the smaller of the two orders. Returns that order,
    /// or the first coefficient that differs.
    pub fn check_equal(&self, other: &Self, name: &str) -> Result<usize, IdentityError> {
        let order = self.order().min(other.order());
        for i in 0..=order {
            if self.coeffs[i] != other.coeffs[i] {
                return Err(IdentityError::Series {
                    name: name.to_string(),
                    index: i,
                    left: self.coeffs[i].clone(),
                    right: other.coeffs[i].clone(),
                });
            }
        }
        Ok(order)
    }
}

impl fmt::Display for ZSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})z")?,
                _ => write!(f, "({c})z^{i}")?,
            }
        }
        write!(f, " + O(z^{})", self.order() + 1)
    }
}

impl Add for &ZSeries {
    type Output = ZSeries;

    fn add(self, rhs: Self) -> ZSeries {
        let n = self.coeffs.len().min(rhs.coeffs.len());
        ZSeries {
            coeffs: (0..n).map(|i| &self.coeffs[i] + &rhs.coeffs[i]).collect(),
        }
    }
}

impl Sub for &ZSeries {
    type Output = ZSeries;

    fn sub(self, rhs: Self) -> ZSeries {
        let n = self.coeffs.len().min(rhs.coeffs.len());
        ZSeries {
            coeffs: (0..n).map(|i| &self.coeffs[i] - &rhs.coeffs[i]).collect(),
        }
    }
}

impl Neg for &ZSeries {
    type Output = ZSeries;

    fn neg(self) -> ZSeries {
        ZSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &ZSeries {
    type Output = ZSeries;

    fn mul(self, rhs: Self) -> ZSeries {
        let n = self.coeffs.len().min(rhs.coeffs.len());
        let mut out = vec![BigInt::zero(); n];
        for (i, a) in self.coeffs[..n].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs[..n - i].iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        ZSeries { coeffs: out }
    }
}

/// `ū` through `z^order` from its Fuss–Catalan coefficients.
pub fn ubar_series(k: KParameter, order: usize) -> ZSeries {
    ZSeries::new(fuss_catalan_sequence(k, order))
}

/// `ū` through `z^order` as the fixed point of `u <- 1 + z u^(k+1)`,
/// starting from `u = 1`. Each pass fixes one more coefficient.
pub fn ubar_fixed_point(k: KParameter, order: usize) -> ZSeries {
    let one = ZSeries::one(order);
    let mut u = one.clone();
    for _ in 0..order {
        let next = &one + &u.pow(k.get() + 1).times_z();
        if next == u {
            break;
        }
        u = next;
    }
    u
}

/// `1 - ū + z ū^(k+1)` at the order of `ubar`.
pub fn kernel_residual(k: KParameter, ubar: &ZSeries) -> ZSeries {
    let order = ubar.order();
    let lifted = ubar.pow(k.get() + 1).times_z().truncate(order);
    &(&ZSeries::one(order) - ubar) + &lifted
}

/// Checks `1 - ū + z ū^(k+1) = 0` through `z^order` for both constructions
/// of `ū`. Returns the verified order.
pub fn kernel_check(k: KParameter, order: usize) -> Result<usize, IdentityError> {
    let zero = ZSeries::zero(order);
    let from_formula = ubar_series(k, order);
    let from_iteration = ubar_fixed_point(k, order);
    kernel_residual(k, &from_formula).check_equal(&zero, "kernel at ū (Fuss-Catalan)")?;
    kernel_residual(k, &from_iteration).check_equal(&zero, "kernel at ū (fixed point)")?;
    from_formula.check_equal(&from_iteration, "ū constructions")
}

/// Checks `(Σ_{j<=j_max} S_j u^j)(1 - u + z u^(k+1)) = 1` for u-degrees
/// `0..=j_max`, the range on which the truncated sum determines the product.
pub fn denominator_series_check(k: KParameter, j_max: usize) -> Result<usize, IdentityError> {
    let mut sum = BivariatePoly::zero();
    for j in 0..=j_max {
        for (z, c) in s_polynomial(k, j).into_coeffs().into_iter().enumerate() {
            sum.add_term(z, j, c);
        }
    }
    let product = (&sum * &BivariatePoly::kernel(k)).truncate_u(j_max);
    product.check_equal(&BivariatePoly::one(), "S_j series times kernel")?;
    Ok(j_max)
}

/// Polynomial in `u` whose coefficients are [`ZSeries`] of a common order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesPoly {
    coeffs: Vec<ZSeries>,
    order: usize,
}

impl SeriesPoly {
    pub fn new(coeffs: Vec<ZSeries>, order: usize) -> Self {
        let coeffs = coeffs.into_iter().map(|c| c.truncate(order)).collect();
        Self { coeffs, order }
    }

    /// `[u^i]`, zero beyond the stored degree.
    pub fn coeff(&self, i: usize) -> ZSeries {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| ZSeries::zero(self.order))
    }

    fn len(&self) -> usize {
        self.coeffs.len()
    }
}

impl Sub for &SeriesPoly {
    type Output = SeriesPoly;

    fn sub(self, rhs: Self) -> SeriesPoly {
        let order = self.order.min(rhs.order);
        let n = self.len().max(rhs.len());
        let coeffs = (0..n)
            .map(|i| &self.coeff(i).truncate(order) - &rhs.coeff(i).truncate(order))
            .collect();
        SeriesPoly { coeffs, order }
    }
}

impl Mul for &SeriesPoly {
    type Output = SeriesPoly;

    fn mul(self, rhs: Self) -> SeriesPoly {
        let order = self.order.min(rhs.order);
        if self.len() == 0 || rhs.len() == 0 {
            return SeriesPoly::new(Vec::new(), order);
        }
        let mut coeffs = vec![ZSeries::zero(order); self.len() + rhs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        SeriesPoly { coeffs, order }
    }
}

/// Expands `(ū - u)(1 - z Σ_{i=0..k} u^i ū^(k-i))` and compares it with
/// `1 - u + z u^(k+1)` for u-degrees `0..=u_order` and z-degrees
/// `0..=z_order`. The sum is the exact quotient `(u^(k+1) - ū^(k+1)) / (u - ū)`.
pub fn kernel_factorization_check(
    k: KParameter,
    u_order: usize,
    z_order: usize,
) -> Result<(usize, usize), IdentityError> {
    let kk = k.as_usize();
    let ubar = ubar_series(k, z_order);

    let linear = SeriesPoly::new(
        vec![ubar.clone(), ZSeries::constant(-BigInt::one(), z_order)],
        z_order,
    );
    let mut second = Vec::with_capacity(kk + 1);
    for i in 0..=kk {
        let term = ubar.pow((kk - i) as u32).times_z().truncate(z_order);
        second.push(-&term);
    }
    second[0] = &ZSeries::one(z_order) + &second[0];
    let second = SeriesPoly::new(second, z_order);
    let rhs = &linear * &second;

    let mut kernel = vec![ZSeries::zero(z_order); kk + 2];
    kernel[0] = ZSeries::one(z_order);
    kernel[1] = ZSeries::constant(-BigInt::one(), z_order);
    kernel[kk + 1] = ZSeries::one(z_order).times_z().truncate(z_order);
    let lhs = SeriesPoly::new(kernel, z_order);

    for u_deg in 0..=u_order {
        let (l, r) = (lhs.coeff(u_deg), rhs.coeff(u_deg));
        for z_deg in 0..=z_order {
            if l.coeffs[z_deg] != r.coeffs[z_deg] {
                return Err(IdentityError::Bivariate {
                    name: "kernel factorization".into(),
                    z_deg,
                    u_deg,
                    left: l.coeffs[z_deg].clone(),
                    right: r.coeffs[z_deg].clone(),
                });
            }
        }
    }
    Ok((u_order, z_order))
}
