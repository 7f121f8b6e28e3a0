use super::{rational_to_string, Coefficient, Rational};
use crate::error::{Error, Result};
use num_traits::{One, Zero};
use std::fmt;

/// Power series in the nome `q`, truncated after `q^order`.
///
/// Always stores exactly `order + 1` coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QSeries {
    coeffs: Vec<Rational>,
}

impl QSeries {
    pub fn zero(order: usize) -> Self {
        QSeries {
            coeffs: vec![Rational::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(order, Rational::one())
    }

    pub fn constant(order: usize, c: Rational) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// Builds a series from leading coefficients; missing ones are zero, extra ones are dropped.
    pub fn from_coeffs(order: usize, coeffs: impl IntoIterator<Item = Rational>) -> Self {
        let mut s = Self::zero(order);
        for (slot, c) in s.coeffs.iter_mut().zip(coeffs) {
            *slot = c;
        }
        s
    }

    /// `c * q^power`, or zero if the power is beyond the truncation.
    pub fn monomial(order: usize, power: usize, c: Rational) -> Self {
        let mut s = Self::zero(order);
        if power <= order {
            s.coeffs[power] = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, power: usize) -> &Rational {
        &self.coeffs[power]
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn set_coeff(&mut self, power: usize, c: Rational) {
        assert!(
            power <= self.order(),
            "q^{power} beyond truncation order {}",
            self.order()
        );
        self.coeffs[power] = c;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(self.add_unchecked(other))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(self.mul_unchecked(other))
    }

    /// Multiplicative inverse up to the truncation order.
    pub fn invert(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::NotUnit);
        }
        let inv0 = c0.recip();
        let n = self.order();
        let mut out = vec![Rational::zero(); n + 1];
        out[0] = inv0.clone();
        for j in 1..=n {
            let mut acc = Rational::zero();
            for i in 1..=j {
                if !self.coeffs[i].is_zero() {
                    acc += &self.coeffs[i] * &out[j - i];
                }
            }
            out[j] = -acc * &inv0;
        }
        Ok(QSeries { coeffs: out })
    }

    /// Same coefficients, truncated (or zero-padded) to a new order.
    pub fn with_order(&self, order: usize) -> Self {
        Self::from_coeffs(order, self.coeffs.iter().cloned())
    }

    fn add_unchecked(&self, other: &Self) -> Self {
        QSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        let n = self.order();
        let mut out = vec![Rational::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        QSeries { coeffs: out }
    }
}

impl Coefficient for QSeries {
    fn is_zero_coeff(&self) -> bool {
        QSeries::is_zero(self)
    }
    fn zero_like(&self) -> Self {
        QSeries::zero(self.order())
    }
    fn one_like(&self) -> Self {
        QSeries::one(self.order())
    }
    fn ring_add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.order(), other.order());
        self.add_unchecked(other)
    }
    fn ring_sub(&self, other: &Self) -> Self {
        debug_assert_eq!(self.order(), other.order());
        QSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
    fn ring_neg(&self) -> Self {
        QSeries {
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }
    fn ring_mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.order(), other.order());
        self.mul_unchecked(other)
    }
    fn scale(&self, factor: &Rational) -> Self {
        QSeries {
            coeffs: self.coeffs.iter().map(|a| a * factor).collect(),
        }
    }
    fn inverse(&self) -> Option<Self> {
        self.invert().ok()
    }
    fn from_rational_like(&self, value: Rational) -> Self {
        QSeries::constant(self.order(), value)
    }
    fn compatible(&self, other: &Self) -> bool {
        self.order() == other.order()
    }
}

impl fmt::Debug for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match j {
                0 => write!(f, "{}", rational_to_string(c))?,
                _ => write!(f, "({})q^{j}", rational_to_string(c))?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.order() + 1)
    }
}
