//! Exact Witten-genus computations for complete intersections in smooth
//! complete toric varieties.
//!
//! The crate is organized bottom-up:
//!
//! - [`ringcore`]: rationals, truncated q-series, truncated multivariate
//!   polynomials and one-variable characteristic series.
//! - [`theta`]: exact characteristic series for the Witten and Â genera, and
//!   floating-point Jacobi theta functions used as numeric oracles.
//! - [`toric`]: fan validation, Picard data and integration by fixed-point
//!   localization.
//! - [`genus`]: characteristic classes of complete intersections, the string
//!   obstruction check, the Witten genus pipeline and its independent oracles.

pub mod error;
pub mod genus;
pub mod linalg;
pub mod ringcore;
pub mod theta;
pub mod toric;

pub use error::{Error, Result};
