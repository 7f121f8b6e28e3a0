use crate::error::Result;
use crate::ringcore::{rational_to_f64, Coefficient, QSeries, Rational, UniSeries};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Zero};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CharKind {
    Witten,
    AHat,
}

/// Even characteristic series in one Chern root `x`, with q-series coefficients.
///
/// The constant term is the series `1` and every odd power of `x` vanishes.
#[derive(Clone, Debug, PartialEq)]
pub struct CharSeries {
    pub kind: CharKind,
    pub series: UniSeries<QSeries>,
}

impl CharSeries {
    pub fn q_order(&self) -> usize {
        self.series.coeff(0).order()
    }

    pub fn x_cap(&self) -> usize {
        self.series.degree_cap()
    }

    /// Coefficient of `x^x_pow q^q_pow`.
    pub fn coeff(&self, x_pow: usize, q_pow: usize) -> &Rational {
        self.series.coeff(x_pow).coeff(q_pow)
    }

    /// Sums the truncated double series at a numeric point.
    pub fn evaluate(&self, x: Complex64, q: Complex64) -> Complex64 {
        let mut total = Complex64::new(0.0, 0.0);
        let mut xp = Complex64::new(1.0, 0.0);
        for a in 0..=self.x_cap() {
            let mut qp = Complex64::new(1.0, 0.0);
            let mut inner = Complex64::new(0.0, 0.0);
            for c in self.series.coeff(a).coeffs() {
                if !c.is_zero() {
                    inner += qp * rational_to_f64(c);
                }
                qp *= q;
            }
            total += xp * inner;
            xp *= x;
        }
        total
    }
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// `(x/2)/sinh(x/2)` truncated at `x^degree_cap`, over the rationals.
pub(crate) fn half_sinh_quotient(degree_cap: usize) -> UniSeries<Rational> {
    // sinh(x/2)/(x/2) = sum_m x^{2m} / (4^m (2m+1)!)
    let coeffs: Vec<Rational> = (0..=degree_cap)
        .map(|j| {
            if j % 2 == 1 {
                Rational::zero()
            } else {
                let m = j / 2;
                Rational::new(
                    BigInt::one(),
                    BigInt::from(4).pow(m as u32) * factorial(j + 1),
                )
            }
        })
        .collect();
    UniSeries::from_coeffs(degree_cap, coeffs)
        .invert()
        .expect("constant term is one")
}

fn exp_series(degree_cap: usize, q_order: usize, sign: i64) -> UniSeries<QSeries> {
    let coeffs = (0..=degree_cap)
        .map(|j| {
            let s = if sign < 0 && j % 2 == 1 { -1 } else { 1 };
            QSeries::constant(q_order, Rational::new(BigInt::from(s), factorial(j)))
        })
        .collect();
    UniSeries::from_coeffs(degree_cap, coeffs)
}

/// Witten characteristic series
/// `W(x) = (x/2)/sinh(x/2) * prod_{j>=1} (1-q^j)^2 / ((1 - q^j e^x)(1 - q^j e^{-x}))`,
/// truncated at `q^q_order` and `x^x_cap`.
///
/// This is `z theta'(0,tau) / theta(z,tau)` with `x = 2 pi i z`; the `q^{1/8}`
/// prefactors cancel, so no fractional powers of `q` appear.
pub fn witten_char_series(q_order: usize, x_cap: usize) -> Result<CharSeries> {
    let ahat = half_sinh_quotient(x_cap);
    let mut w: UniSeries<QSeries> = ahat.map_coeffs(|c| QSeries::constant(q_order, c.clone()));
    let e_plus = exp_series(x_cap, q_order, 1);
    let e_minus = exp_series(x_cap, q_order, -1);
    let e_sum = e_plus.try_add(&e_minus)?;
    for j in 1..=q_order {
        let qj = QSeries::monomial(q_order, j, Rational::one());
        let one_minus_qj = QSeries::one(q_order).ring_sub(&qj);
        // (1 - q^j e^x)(1 - q^j e^{-x}) = 1 + q^{2j} - q^j (e^x + e^{-x})
        let constant = QSeries::one(q_order).ring_add(&qj.ring_mul(&qj));
        let denom = UniSeries::constant(x_cap, constant)
            .try_add(&e_sum.map_coeffs(|c| c.ring_mul(&qj).ring_neg()))?;
        let numer = one_minus_qj.ring_mul(&one_minus_qj);
        let factor = denom.invert()?.map_coeffs(|c| c.ring_mul(&numer));
        w = w.try_mul(&factor)?;
    }
    Ok(CharSeries {
        kind: CharKind::Witten,
        series: w,
    })
}

/// `(x/2)/sinh(x/2)` as a characteristic series with q-order zero.
pub fn ahat_char_series(x_cap: usize) -> CharSeries {
    CharSeries {
        kind: CharKind::AHat,
        series: half_sinh_quotient(x_cap).map_coeffs(|c| QSeries::constant(0, c.clone())),
    }
}

/// Characteristic series as a rational one-variable series, when its q-order is zero.
pub fn rational_slice(cs: &CharSeries, q_pow: usize) -> UniSeries<Rational> {
    cs.series.map_coeffs(|c| c.coeff(q_pow).clone())
}
