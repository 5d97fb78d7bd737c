//! Path generating functions built one slice at a time.
//!
//! `z` marks up-steps and `u` marks the current level. Two slice shapes are
//! supported:
//!
//! * [`SliceKind::DownRunThenUp`]: a run of down-steps followed by one
//!   up-step, `u^j -> z Σ_{h=0..j} u^(h+k)`. Starting from `z u^k` (the first
//!   up-step) the iterates `F_m` count paths that end with an up-step.
//! * [`SliceKind::UpThenDownRun`]: one up-step followed by a run of
//!   down-steps, `u^i -> z Σ_{h=0..i+k} u^h`. Starting from `u^start_level`
//!   the `u^0` coefficients count paths that return to the axis.
//!
//! Every iterate is an exact polynomial; nothing is truncated.

use num_bigint::BigInt;

use crate::bivariate::BivariatePoly;
use crate::combinatorics::KParameter;
use crate::series::ZSeries;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SliceKind {
    DownRunThenUp,
    UpThenDownRun { start_level: usize },
}

/// One iterate of the slice recursion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SliceState {
    k: KParameter,
    kind: SliceKind,
    slice_index: usize,
    poly: BivariatePoly,
}

impl SliceState {
    /// `F_0 = z u^k`: the first up-step on its own.
    pub fn first_up_step(k: KParameter) -> Self {
        Self {
            k,
            kind: SliceKind::DownRunThenUp,
            slice_index: 0,
            poly: BivariatePoly::monomial(BigInt::from(1), 1, k.as_usize()),
        }
    }

    /// `u^start_level` with no slices taken yet.
    pub fn from_level(k: KParameter, start_level: usize) -> Self {
        Self {
            k,
            kind: SliceKind::UpThenDownRun { start_level },
            slice_index: 0,
            poly: BivariatePoly::monomial(BigInt::from(1), 0, start_level),
        }
    }

    pub fn k(&self) -> KParameter {
        self.k
    }

    pub fn kind(&self) -> SliceKind {
        self.kind
    }

    /// Number of slices added so far.
    pub fn slice_index(&self) -> usize {
        self.slice_index
    }

    pub fn poly(&self) -> &BivariatePoly {
        &self.poly
    }

    pub fn into_poly(self) -> BivariatePoly {
        self.poly
    }

    /// Add one slice of this state's kind.
    pub fn next(&self) -> Self {
        let poly = match self.kind {
            SliceKind::DownRunThenUp => add_down_run_then_up(&self.poly, self.k),
            SliceKind::UpThenDownRun { .. } => add_up_then_down_run(&self.poly, self.k),
        };
        Self {
            k: self.k,
            kind: self.kind,
            slice_index: self.slice_index + 1,
            poly,
        }
    }
}

/// `c z^a u^j -> c z^(a+1) Σ_{h=0..j} u^(h+k)` on every monomial.
pub fn add_down_run_then_up(poly: &BivariatePoly, k: KParameter) -> BivariatePoly {
    let k = k.as_usize();
    let mut out = BivariatePoly::zero();
    for ((a, j), c) in poly.terms() {
        for h in 0..=j {
            out.add_term(a + 1, h + k, c.clone());
        }
    }
    out
}

/// `c z^a u^i -> c z^(a+1) Σ_{h=0..i+k} u^h` on every monomial.
pub fn add_up_then_down_run(poly: &BivariatePoly, k: KParameter) -> BivariatePoly {
    let k = k.as_usize();
    let mut out = BivariatePoly::zero();
    for ((a, i), c) in poly.terms() {
        for h in 0..=i + k {
            out.add_term(a + 1, h, c.clone());
        }
    }
    out
}

/// `[F_0, ..., F_{m_max}]`. `[z^n u^j] F_{n-1}` is the number of k-Dyck paths
/// with `n` up-steps whose last step is an up-step, ending at level `j`.
pub fn generate_f(k: KParameter, m_max: usize) -> Vec<BivariatePoly> {
    let mut state = SliceState::first_up_step(k);
    let mut out = Vec::with_capacity(m_max + 1);
    for _ in 0..m_max {
        let next = state.next();
        out.push(state.into_poly());
        state = next;
    }
    out.push(state.into_poly());
    out
}

/// `Σ_m [u^0] F_m z^m` through `z^m_max`, iterating up-then-down-run slices
/// from level `start_level`: the number of ways to reach level 0 in exactly
/// `m` slices.
pub fn h_coeffs_by_slices(k: KParameter, start_level: usize, m_max: usize) -> ZSeries {
    let mut state = SliceState::from_level(k, start_level);
    let mut coeffs = Vec::with_capacity(m_max + 1);
    for m in 0..=m_max {
        coeffs.push(state.poly().coeff(m, 0).clone());
        if m < m_max {
            state = state.next();
        }
    }
    ZSeries::new(coeffs)
}
