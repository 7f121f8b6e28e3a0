//! Witten genus straight from its definition as `<Â(TY) ch(Theta), [Y]>`.
//!
//! `Theta = tensor_{m>=1} S_{q^m}(T_C Y - C^{dim})`, where the virtual bundle is
//! `V = sum_j (L_{C_j} + L_{-C_j} - 2) - sum_l (L_{E_l} + L_{-E_l} - 2)` by the
//! Euler sequence and adjunction. Characters of symmetric powers come from
//! Adams operations and Newton's identities. Nothing here touches theta
//! functions or the characteristic series of the main pipeline.

use super::model::CIModel;
use crate::error::{Error, Result};
use crate::ringcore::{compose_series, int, MPoly, QSeries, Rational, UniSeries};
use crate::toric::IntersectionTable;
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Largest q-order the oracle accepts.
pub const ORACLE_MAX_Q_ORDER: usize = 2;

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |a, k| a * BigInt::from(k))
}

/// `e^{a x}` truncated at `x^cap`.
fn exp_scaled(cap: usize, a: i64) -> UniSeries<Rational> {
    let coeffs = (0..=cap)
        .map(|j| Rational::new(BigInt::from(a).pow(j as u32), factorial(j)))
        .collect();
    UniSeries::from_coeffs(cap, coeffs)
}

/// `x / (e^{x/2} - e^{-x/2}) = e^{-x/2} * ((1 - e^{-x}) / x)^{-1}`.
fn ahat_series(cap: usize) -> Result<UniSeries<Rational>> {
    let quotient = (0..=cap)
        .map(|j| {
            let sign = if j % 2 == 0 { 1 } else { -1 };
            Rational::new(BigInt::from(sign), factorial(j + 1))
        })
        .collect();
    let half_exp: Vec<Rational> = (0..=cap)
        .map(|j| {
            let sign = if j % 2 == 0 { 1 } else { -1 };
            Rational::new(
                BigInt::from(sign),
                BigInt::from(2).pow(j as u32) * factorial(j),
            )
        })
        .collect();
    UniSeries::from_coeffs(cap, quotient)
        .invert()?
        .try_mul(&UniSeries::from_coeffs(cap, half_exp))
}

/// Witten genus through `q^q_order` from the Witten bundle, for `q_order <= 2`.
pub fn witten_bundle_oracle(
    ci: &CIModel,
    table: &IntersectionTable,
    q_order: usize,
) -> Result<QSeries> {
    if q_order > ORACLE_MAX_Q_ORDER {
        return Err(Error::Unsupported(format!(
            "bundle oracle is limited to q-order {ORACLE_MAX_Q_ORDER}, got {q_order}"
        )));
    }
    let n = ci.ambient_dim();
    let k = ci.picard_rank();
    let one = MPoly::constant(k, n, Rational::one());
    let forms: Vec<MPoly<Rational>> = ci
        .divisor_forms()
        .iter()
        .map(|r| ci.linear(r, &Rational::one()))
        .collect();
    let normals: Vec<MPoly<Rational>> = ci
        .degrees
        .iter()
        .map(|r| ci.linear(r, &Rational::one()))
        .collect();

    // Â(TY) * prod_l E_l, as a class on X.
    let ahat = ahat_series(n)?;
    let mut base = one.clone();
    for c in &forms {
        base = base.try_mul(&compose_series(&ahat, c)?)?;
    }
    for e in &normals {
        base = base.try_mul(&compose_series(&ahat, e)?.invert()?)?;
        base = base.try_mul(e)?;
    }

    // Adams power sums p_a = ch(psi^a V).
    let two = MPoly::constant(k, n, int(2));
    let pair = |x: &MPoly<Rational>, a: i64| -> Result<MPoly<Rational>> {
        compose_series(&exp_scaled(n, a), x)?
            .try_add(&compose_series(&exp_scaled(n, -a), x)?)?
            .try_sub(&two)
    };
    let mut power_sums = vec![MPoly::zero(k, n)];
    for a in 1..=q_order as i64 {
        let mut p = MPoly::zero(k, n);
        for c in &forms {
            p = p.try_add(&pair(c, a)?)?;
        }
        for e in &normals {
            p = p.try_sub(&pair(e, a)?)?;
        }
        power_sums.push(p);
    }

    // ch(S^j V) from j S^j = sum_{a=1}^j p_a S^{j-a}.
    let mut sym = vec![one.clone()];
    for j in 1..=q_order {
        let mut acc = MPoly::zero(k, n);
        for a in 1..=j {
            acc = acc.try_add(&power_sums[a].try_mul(&sym[j - a])?)?;
        }
        sym.push(acc.scale(&Rational::new(BigInt::one(), BigInt::from(j))));
    }

    // ch(Theta) by q-power: product over m of sum_j S^j q^{mj}.
    let mut theta: Vec<MPoly<Rational>> = vec![MPoly::zero(k, n); q_order + 1];
    theta[0] = one;
    for m in 1..=q_order {
        let mut next = vec![MPoly::zero(k, n); q_order + 1];
        for (t, cur) in theta.iter().enumerate() {
            if cur.is_zero() {
                continue;
            }
            for (j, s) in sym.iter().enumerate() {
                let deg = t + m * j;
                if deg > q_order {
                    break;
                }
                next[deg] = next[deg].try_add(&cur.try_mul(s)?)?;
            }
        }
        theta = next;
    }

    let mut out = QSeries::zero(q_order);
    for (t, th) in theta.iter().enumerate() {
        let v = table.integrate(&base.try_mul(th)?, &Rational::zero())?;
        out.set_coeff(t, v);
    }
    Ok(out)
}
