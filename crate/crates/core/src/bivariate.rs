//! Exact sparse polynomials in `z` and `u`.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::combinatorics::{KParameter, ZPolynomial, ZERO};
use crate::error::IdentityError;

/// Sparse polynomial keyed by `(z-degree, u-degree)`. No stored coefficient
/// is zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct BivariatePoly {
    terms: BTreeMap<(usize, usize), BigInt>,
}

impl BivariatePoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0, 0)
    }

    pub fn monomial(c: BigInt, z_deg: usize, u_deg: usize) -> Self {
        let mut p = Self::zero();
        p.add_term(z_deg, u_deg, c);
        p
    }

    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = ((usize, usize), BigInt)>,
    {
        let mut p = Self::zero();
        for ((z, u), c) in terms {
            p.add_term(z, u, c);
        }
        p
    }

    /// The kernel `1 - u + z u^(k+1)`.
    pub fn kernel(k: KParameter) -> Self {
        Self::from_terms([
            ((0, 0), BigInt::one()),
            ((0, 1), -BigInt::one()),
            ((1, k.as_usize() + 1), BigInt::one()),
        ])
    }

    /// Adds `c z^z_deg u^u_deg`, dropping the entry if it cancels.
    pub fn add_term(&mut self, z_deg: usize, u_deg: usize, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry((z_deg, u_deg)) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn coeff(&self, z_deg: usize, u_deg: usize) -> &BigInt {
        self.terms.get(&(z_deg, u_deg)).unwrap_or(&ZERO)
    }

    /// Nonzero terms as `((z_deg, u_deg), coefficient)`, ordered by z then u.
    pub fn terms(&self) -> impl Iterator<Item = ((usize, usize), &BigInt)> + '_ {
        self.terms.iter().map(|(&key, c)| (key, c))
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `(min, max)` z-degree over the nonzero terms.
    pub fn z_degree_bounds(&self) -> Option<(usize, usize)> {
        bounds(self.terms.keys().map(|&(z, _)| z))
    }

    /// `(min, max)` u-degree over the nonzero terms.
    pub fn u_degree_bounds(&self) -> Option<(usize, usize)> {
        bounds(self.terms.keys().map(|&(_, u)| u))
    }

    /// `[u^j]` as a polynomial in `z`.
    pub fn u_coefficient(&self, j: usize) -> ZPolynomial {
        let mut coeffs = Vec::new();
        for (&(z, u), c) in &self.terms {
            if u == j {
                if coeffs.len() <= z {
                    coeffs.resize(z + 1, BigInt::zero());
                }
                coeffs[z] = c.clone();
            }
        }
        ZPolynomial::new(coeffs)
    }

    /// Substitute `u = 1`.
    pub fn at_u_one(&self) -> Self {
        let mut out = Self::zero();
        for (&(z, _), c) in &self.terms {
            out.add_term(z, 0, c.clone());
        }
        out
    }

    /// Substitute `u = 0`, i.e. keep the `u^0` terms.
    pub fn at_u_zero(&self) -> ZPolynomial {
        self.u_coefficient(0)
    }

    /// Drop every term with u-degree above `max_u`.
    pub fn truncate_u(&self, max_u: usize) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(&(_, u), _)| u <= max_u)
                .map(|(&key, c)| (key, c.clone()))
                .collect(),
        }
    }

    /// Multiply by `z^dz u^du`.
    pub fn shift(&self, dz: usize, du: usize) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&(z, u), c)| ((z + dz, u + du), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_terms(self.terms.iter().map(|(&key, x)| (key, x * c)))
    }

    /// Exact equality, reporting the first differing `(z, u)` in key order.
    pub fn check_equal(&self, other: &Self, name: &str) -> Result<(), IdentityError> {
        let diff = self - other;
        match diff.terms.keys().next() {
            None => Ok(()),
            Some(&(z_deg, u_deg)) => Err(IdentityError::Bivariate {
                name: name.to_string(),
                z_deg,
                u_deg,
                left: self.coeff(z_deg, u_deg).clone(),
                right: other.coeff(z_deg, u_deg).clone(),
            }),
        }
    }
}

fn bounds(mut it: impl Iterator<Item = usize>) -> Option<(usize, usize)> {
    let first = it.next()?;
    Some(it.fold((first, first), |(lo, hi), d| (lo.min(d), hi.max(d))))
}

impl fmt::Display for BivariatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (&(z, u), c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c})")?;
            if z > 0 {
                write!(f, "z^{z}")?;
            }
            if u > 0 {
                write!(f, "u^{u}")?;
            }
        }
        Ok(())
    }
}

impl Add for &BivariatePoly {
    type Output = BivariatePoly;

    fn add(self, rhs: Self) -> BivariatePoly {
        let mut out = self.clone();
        for (&(z, u), c) in &rhs.terms {
            out.add_term(z, u, c.clone());
        }
        out
    }
}

impl Sub for &BivariatePoly {
    type Output = BivariatePoly;

    fn sub(self, rhs: Self) -> BivariatePoly {
        let mut out = self.clone();
        for (&(z, u), c) in &rhs.terms {
            out.add_term(z, u, -c);
        }
        out
    }
}

impl Neg for &BivariatePoly {
    type Output = BivariatePoly;

    fn neg(self) -> BivariatePoly {
        BivariatePoly {
            terms: self.terms.iter().map(|(&key, c)| (key, -c)).collect(),
        }
    }
}

impl Mul for &BivariatePoly {
    type Output = BivariatePoly;

    fn mul(self, rhs: Self) -> BivariatePoly {
        let mut out = BivariatePoly::zero();
        for (&(z1, u1), a) in &self.terms {
            for (&(z2, u2), b) in &rhs.terms {
                out.add_term(z1 + z2, u1 + u2, a * b);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[((usize, usize), i64)]) -> BivariatePoly {
        BivariatePoly::from_terms(terms.iter().map(|&(key, c)| (key, BigInt::from(c))))
    }

    #[test]
    fn cancellation_leaves_no_zero_entries() {
        let a = p(&[((0, 0), 1), ((1, 2), 3)]);
        let b = p(&[((1, 2), 3)]);
        let d = &a - &b;
        assert_eq!(d.term_count(), 1);
        assert_eq!(d, BivariatePoly::one());
        assert!((&a - &a).is_zero());
        assert_eq!(p(&[((2, 2), 0)]).term_count(), 0);
    }

    #[test]
    fn degree_bounds() {
        let a = p(&[((1, 4), 1), ((3, 2), -1), ((2, 7), 5)]);
        assert_eq!(a.z_degree_bounds(), Some((1, 3)));
        assert_eq!(a.u_degree_bounds(), Some((2, 7)));
        assert_eq!(BivariatePoly::zero().u_degree_bounds(), None);
    }

    #[test]
    fn product_and_evaluations() {
        // (1 - u)(1 + u) = 1 - u^2
        let a = p(&[((0, 0), 1), ((0, 1), -1)]);
        let b = p(&[((0, 0), 1), ((0, 1), 1)]);
        assert_eq!(&a * &b, p(&[((0, 0), 1), ((0, 2), -1)]));
        let f = p(&[((2, 1), 1), ((2, 2), 1), ((3, 0), 4)]);
        assert_eq!(f.at_u_one(), p(&[((2, 0), 2), ((3, 0), 4)]));
        assert_eq!(f.at_u_zero(), ZPolynomial::from_i64(&[0, 0, 0, 4]));
        assert_eq!(f.u_coefficient(1), ZPolynomial::from_i64(&[0, 0, 1]));
        assert_eq!(f.truncate_u(1).term_count(), 2);
        assert_eq!(f.shift(1, 2).coeff(3, 3), &BigInt::one());
    }

    #[test]
    fn kernel_shape() {
        let kern = BivariatePoly::kernel(KParameter::new(2).unwrap());
        assert_eq!(kern, p(&[((0, 0), 1), ((0, 1), -1), ((1, 3), 1)]));
    }

    #[test]
    fn check_equal_reports_first_difference() {
        let a = p(&[((0, 0), 1), ((1, 1), 2), ((2, 0), 5)]);
        let b = p(&[((0, 0), 1), ((1, 1), 3), ((2, 0), 6)]);
        match a.check_equal(&b, "x") {
            Err(IdentityError::Bivariate { z_deg, u_deg, .. }) => {
                assert_eq!((z_deg, u_deg), (1, 1))
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(a.check_equal(&a.clone(), "x").is_ok());
    }
}
