use super::Coefficient;
use crate::error::{Error, Result};

/// Power series in one formal variable `x`, truncated above `x^degree_cap`.
#[derive(Clone, Debug, PartialEq)]
pub struct UniSeries<R> {
    coeffs: Vec<R>,
}

impl<R: Coefficient> UniSeries<R> {
    /// Pads with zeros (shaped like the first coefficient) or truncates to `degree_cap + 1` entries.
    ///
    /// Panics if `coeffs` is empty, since the coefficient ring cannot be inferred.
    pub fn from_coeffs(degree_cap: usize, mut coeffs: Vec<R>) -> Self {
        let zero = coeffs
            .first()
            .expect("at least one coefficient is needed to infer the ring")
            .zero_like();
        coeffs.resize(degree_cap + 1, zero);
        UniSeries { coeffs }
    }

    pub fn constant(degree_cap: usize, c: R) -> Self {
        Self::from_coeffs(degree_cap, vec![c])
    }

    pub fn degree_cap(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, j: usize) -> &R {
        &self.coeffs[j]
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    /// True when every odd power has a zero coefficient.
    pub fn is_even(&self) -> bool {
        self.coeffs
            .iter()
            .skip(1)
            .step_by(2)
            .all(Coefficient::is_zero_coeff)
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.degree_cap() != other.degree_cap() {
            return Err(Error::OrderMismatch {
                left: self.degree_cap(),
                right: other.degree_cap(),
            });
        }
        if !self.coeffs[0].compatible(&other.coeffs[0]) {
            return Err(Error::Inconsistency(
                "series coefficients live in incompatible rings".into(),
            ));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(UniSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.ring_add(b))
                .collect(),
        })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let d = self.degree_cap();
        let mut out: Vec<R> = vec![self.coeffs[0].zero_like(); d + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero_coeff() {
                continue;
            }
            for (j, b) in other.coeffs[..=d - i].iter().enumerate() {
                if !b.is_zero_coeff() {
                    out[i + j] = out[i + j].ring_add(&a.ring_mul(b));
                }
            }
        }
        Ok(UniSeries { coeffs: out })
    }

    /// Inverse by long division; the constant coefficient must be a unit.
    pub fn invert(&self) -> Result<Self> {
        let inv0 = self.coeffs[0].inverse().ok_or(Error::NotUnit)?;
        let d = self.degree_cap();
        let mut out: Vec<R> = Vec::with_capacity(d + 1);
        out.push(inv0.clone());
        for j in 1..=d {
            let mut acc = self.coeffs[0].zero_like();
            for i in 1..=j {
                if !self.coeffs[i].is_zero_coeff() {
                    acc = acc.ring_add(&self.coeffs[i].ring_mul(&out[j - i]));
                }
            }
            out.push(acc.ring_neg().ring_mul(&inv0));
        }
        Ok(UniSeries { coeffs: out })
    }

    /// `f(c x)` for a rational `c`.
    pub fn rescale(&self, c: &super::Rational) -> Self {
        let mut power = super::int(1);
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            coeffs.push(a.scale(&power));
            power *= c;
        }
        UniSeries { coeffs }
    }

    /// `x * f(x)`, dropping the top coefficient.
    pub fn shift_up(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        coeffs.push(self.coeffs[0].zero_like());
        coeffs.extend(self.coeffs[..self.degree_cap()].iter().cloned());
        UniSeries { coeffs }
    }

    pub fn map_coeffs<S: Coefficient>(&self, f: impl Fn(&R) -> S) -> UniSeries<S> {
        UniSeries {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }
}
