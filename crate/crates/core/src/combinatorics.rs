//! Binomial coefficients, Fuss–Catalan numbers and the denominator
//! polynomials `S_j = [u^j] 1 / (1 - u + z u^(k+1))`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Every count and coefficient is an exact big integer.
pub type UnboundedInt = BigInt;

pub(crate) static ZERO: BigInt = BigInt::ZERO;

/// Height of the up-step: paths use `(1, k)` and `(1, -1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct KParameter(u32);

impl KParameter {
    pub fn new(k: u32) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidK(k));
        }
        Ok(Self(k))
    }

    #[inline]
    pub fn get(self) -> u32 {
        self.0
    }

    #[inline]
    pub(crate) fn as_usize(self) -> usize {
        self.0 as usize
    }

    #[inline]
    pub(crate) fn as_i64(self) -> i64 {
        i64::from(self.0)
    }
}

impl TryFrom<u32> for KParameter {
    type Error = Error;

    fn try_from(k: u32) -> Result<Self> {
        Self::new(k)
    }
}

impl fmt::Display for KParameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Binomial coefficient with the combinatorial convention: `a!/(b!(a-b)!)`
/// for `0 <= b <= a`, and zero otherwise. A negative upper index gives zero,
/// not the generalized value.
pub fn binomial(a: i64, b: i64) -> BigInt {
    if a < 0 || b < 0 || b > a {
        return BigInt::zero();
    }
    let b = b.min(a - b) as u64;
    let base = a as u64 - b;
    let mut acc = BigInt::one();
    for i in 1..=b {
        // acc == binomial(base + i - 1, i - 1) here, so the division is exact.
        acc *= base + i;
        acc /= i;
    }
    acc
}

/// Fuss–Catalan number `binomial(1 + l(k+1), l) / (1 + l(k+1))`, the number
/// of `(k+1)`-ary trees with `l` internal nodes. Zero for `l < 0`.
pub fn fuss_catalan(k: KParameter, ell: i64) -> BigInt {
    if ell < 0 {
        return BigInt::zero();
    }
    let top = 1 + ell * (k.as_i64() + 1);
    let (q, r) = binomial(top, ell).div_rem(&BigInt::from(top));
    assert!(
        r.is_zero(),
        "Fuss-Catalan division not exact for k={k}, l={ell}"
    );
    q
}

/// `fuss_catalan(k, 0..=max)` by the term ratio, one pass of small
/// multiplications instead of a fresh binomial per term.
pub fn fuss_catalan_sequence(k: KParameter, max: usize) -> Vec<BigInt> {
    let k = k.get() as u64;
    let mut out = Vec::with_capacity(max + 1);
    let mut cur = BigInt::one();
    out.push(cur.clone());
    for ell in 1..=max as u64 {
        // FC(l) * l * prod_{i<k} (kl+1-i) = FC(l-1) * prod_{i<=k} ((k+1)l - i)
        let mut num = cur;
        for i in 0..=k {
            num *= (k + 1) * ell - i;
        }
        let mut den = BigInt::from(ell);
        for i in 0..k {
            den *= k * ell + 1 - i;
        }
        let (q, r) = num.div_rem(&den);
        assert!(r.is_zero(), "Fuss-Catalan ratio not exact at l={ell}");
        cur = q;
        out.push(cur.clone());
    }
    out
}

/// Dense polynomial in `z`. The zero polynomial has no coefficients; any
/// other value has a nonzero leading coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct ZPolynomial {
    coeffs: Vec<BigInt>,
}

impl ZPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    pub fn monomial(c: BigInt, degree: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[degree] = c;
        Self::new(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, degree: usize) -> &BigInt {
        self.coeffs.get(degree).unwrap_or(&ZERO)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Multiply by `z^shift`.
    pub fn shift(&self, shift: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); shift];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn eval(&self, z: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * z + c)
    }
}

impl fmt::Display for ZPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            match (d, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => f.write_str("z")?,
                (1, false) => write!(f, "{mag}z")?,
                (_, true) => write!(f, "z^{d}")?,
                (_, false) => write!(f, "{mag}z^{d}")?,
            }
        }
        Ok(())
    }
}

impl Add for &ZPolynomial {
    type Output = ZPolynomial;

    fn add(self, rhs: Self) -> ZPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        ZPolynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &ZPolynomial {
    type Output = ZPolynomial;

    fn sub(self, rhs: Self) -> ZPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        ZPolynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Neg for &ZPolynomial {
    type Output = ZPolynomial;

    fn neg(self) -> ZPolynomial {
        ZPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &ZPolynomial {
    type Output = ZPolynomial;

    fn mul(self, rhs: Self) -> ZPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return ZPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        ZPolynomial::new(out)
    }
}

/// `S_j` from its closed form `sum_{0 <= m <= j/k} (-1)^m binomial(j-km, m) z^m`.
pub fn s_polynomial(k: KParameter, j: usize) -> ZPolynomial {
    let k = k.as_usize();
    let coeffs = (0..=j / k)
        .map(|m| {
            let b = binomial((j - k * m) as i64, m as i64);
            if m % 2 == 0 {
                b
            } else {
                -b
            }
        })
        .collect();
    ZPolynomial::new(coeffs)
}

/// `S_j` from `S_j = S_{j-1} - z S_{j-k-1}` with `S_0 = .. = S_k = 1`.
pub fn s_polynomial_recursive(k: KParameter, j: usize) -> ZPolynomial {
    s_polynomials_recursive(k, j).pop().expect("at least S_0")
}

/// `[S_0, ..., S_{j_max}]` by the recursion.
pub fn s_polynomials_recursive(k: KParameter, j_max: usize) -> Vec<ZPolynomial> {
    let k = k.as_usize();
    let mut table: Vec<ZPolynomial> = Vec::with_capacity(j_max + 1);
    for j in 0..=j_max {
        let next = if j <= k {
            ZPolynomial::one()
        } else {
            &table[j - 1] - &table[j - k - 1].shift(1)
        };
        table.push(next);
    }
    table
}
