//! Jacobi theta functions and the characteristic series built from them.
//!
//! [`series`] holds the exact q-expansions used by the genus pipeline, with
//! the Chern-root rescaling `x = 2 pi i z` already applied so every
//! coefficient is rational. [`numeric`] evaluates the four theta functions in
//! floating point from their product formulas and serves as the oracle for the
//! exact side.

pub mod numeric;
pub mod series;

pub use numeric::{
    jacobi_identity_residual, theta_eval_numeric, theta_prime_zero, translation_factor,
    translation_law_residual, ThetaKind, DEFAULT_PRODUCT_TERMS,
};
pub use series::{ahat_char_series, witten_char_series, CharKind, CharSeries};
