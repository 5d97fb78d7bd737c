//! Exact enumeration of k-Dyck paths.
//!
//! A k-Dyck path uses up-steps `(1, k)` and down-steps `(1, -1)` and never
//! goes below the x-axis. This crate counts such paths three independent
//! ways and checks that they agree:
//!
//! * [`formulas`]: closed-form sums over binomial coefficients and
//!   Fuss–Catalan numbers, `O(j)` big-integer terms per query;
//! * [`slices`]: the "add a new slice" substitution iterated on exact
//!   bivariate polynomials in `z` (up-steps) and `u` (level);
//! * [`oracle`]: dynamic programming over path states plus exhaustive
//!   enumeration at tiny sizes.
//!
//! [`verify`] runs every cross-route check and reports per suite.

pub mod bivariate;
pub mod combinatorics;
pub mod error;
pub mod formulas;
pub mod oracle;
pub mod sequences;
pub mod series;
pub mod slices;
pub mod verify;

pub use bivariate::BivariatePoly;
pub use combinatorics::{
    binomial, fuss_catalan, fuss_catalan_sequence, s_polynomial, s_polynomial_recursive,
    KParameter, UnboundedInt, ZPolynomial,
};
pub use error::{Error, IdentityError, Result};
pub use formulas::{
    dm_core, dm_count, early_adventure_series, early_adventure_total, last_downrun_total,
};
pub use oracle::{count_paths, enumerate_paths, paths_from_level, PathSpec, StatLedger, Step};
pub use sequences::SequenceKind;
pub use series::{ubar_fixed_point, ubar_series, ZSeries};
pub use slices::{generate_f, h_coeffs_by_slices, SliceKind, SliceState};
