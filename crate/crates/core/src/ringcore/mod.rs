//! Exact arithmetic substrate.
//!
//! Everything here is exact: coefficients are [`Rational`]s or truncated
//! [`QSeries`] over them. The polynomial and series containers are generic over
//! [`Coefficient`] so the same kernels serve rational Chern classes and
//! q-series valued Witten classes.

mod mpoly;
mod qseries;
mod uniseries;

pub use mpoly::{compose_series, total_degree, Exponent, MPoly};
pub use qseries::QSeries;
pub use uniseries::UniSeries;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use std::fmt::Debug;

/// Arbitrary-precision rational, always kept in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Format as `p/q`, always with an explicit denominator.
pub fn rational_to_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parse `p/q` or a bare integer `p`.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (
            n.trim().parse::<BigInt>().ok()?,
            d.trim().parse::<BigInt>().ok()?,
        ),
        None => (s.parse::<BigInt>().ok()?, BigInt::one()),
    };
    if d.is_zero() {
        return None;
    }
    Some(Rational::new(n, d))
}

pub fn rational_to_f64(r: &Rational) -> f64 {
    match (r.numer().to_f64(), r.denom().to_f64()) {
        (Some(n), Some(d)) if n.is_finite() && d.is_finite() => n / d,
        _ => {
            // Huge numerators/denominators: scale down by the common bit excess.
            let shift = r.numer().bits().max(r.denom().bits()).saturating_sub(1000);
            let n = (r.numer() >> shift).to_f64().unwrap_or(f64::NAN);
            let d = (r.denom() >> shift).to_f64().unwrap_or(f64::NAN);
            n / d
        }
    }
}

/// Ring operations needed by [`MPoly`] and [`UniSeries`] coefficients.
///
/// Binary operations assume [`compatible`](Coefficient::compatible) operands;
/// containers check compatibility at their public boundary.
pub trait Coefficient: Clone + PartialEq + Debug + Send + Sync {
    fn is_zero_coeff(&self) -> bool;
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn ring_add(&self, other: &Self) -> Self;
    fn ring_sub(&self, other: &Self) -> Self;
    fn ring_neg(&self) -> Self;
    fn ring_mul(&self, other: &Self) -> Self;
    fn scale(&self, factor: &Rational) -> Self;
    /// Multiplicative inverse, if the element is a unit.
    fn inverse(&self) -> Option<Self>;
    fn from_rational_like(&self, value: Rational) -> Self;
    fn compatible(&self, _other: &Self) -> bool {
        true
    }
}

impl Coefficient for Rational {
    fn is_zero_coeff(&self) -> bool {
        Zero::is_zero(self)
    }
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn one_like(&self) -> Self {
        Rational::one()
    }
    fn ring_add(&self, other: &Self) -> Self {
        self + other
    }
    fn ring_sub(&self, other: &Self) -> Self {
        self - other
    }
    fn ring_neg(&self) -> Self {
        -self
    }
    fn ring_mul(&self, other: &Self) -> Self {
        self * other
    }
    fn scale(&self, factor: &Rational) -> Self {
        self * factor
    }
    fn inverse(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn from_rational_like(&self, value: Rational) -> Self {
        value
    }
}

/// True when `r` has denominator one.
pub fn is_integral(r: &Rational) -> bool {
    r.denom().is_one()
}
