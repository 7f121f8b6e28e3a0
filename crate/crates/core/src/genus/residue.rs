//! Numeric global-residue check for Picard rank one.
//!
//! With one generator `h`, the genus integrand is
//! `F(h) = prod_l theta(d_l h)/theta'(0) / prod_j theta(m_j h)/theta'(0)`.
//! When the obstruction integers vanish `F` is doubly periodic, and the sum of
//! its residues over a period parallelogram is zero.

use super::model::CIModel;
use crate::error::{Error, Result};
use crate::theta::{theta_eval_numeric, theta_prime_zero, ThetaKind, DEFAULT_PRODUCT_TERMS};
use num_complex::Complex64;
use std::f64::consts::PI;

/// Ellipticity threshold on the relative deviation.
pub const ELLIPTIC_TOLERANCE: f64 = 1e-6;

#[derive(Clone, Debug, PartialEq)]
pub struct ResidueOptions {
    /// Radius of each residue contour.
    pub radius: f64,
    /// Trapezoid nodes per contour.
    pub nodes: usize,
    pub product_terms: usize,
    /// Offset of the period parallelogram, in units of `1` and `tau`.
    pub shift: (f64, f64),
}

impl Default for ResidueOptions {
    fn default() -> Self {
        ResidueOptions {
            radius: 0.25,
            nodes: 512,
            product_terms: DEFAULT_PRODUCT_TERMS,
            shift: (0.0137, 0.0211),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ResidueReport {
    pub is_elliptic: bool,
    /// Largest relative change of `F` under `h -> h + 1` and `h -> h + tau`.
    pub max_deviation: f64,
    /// Sum of the residues inside one period parallelogram.
    pub residue_sum: Complex64,
    pub poles: Vec<Complex64>,
}

struct Integrand {
    numer: Vec<i64>,
    denom: Vec<i64>,
    tau: Complex64,
    prime: Complex64,
    terms: usize,
}

impl Integrand {
    fn eval(&self, h: Complex64) -> Result<Complex64> {
        let mut v = Complex64::new(1.0, 0.0);
        for &d in &self.numer {
            v *= theta_eval_numeric(ThetaKind::Theta, h * d as f64, self.tau, self.terms)?
                / self.prime;
        }
        for &m in &self.denom {
            v /= theta_eval_numeric(ThetaKind::Theta, h * m as f64, self.tau, self.terms)?
                / self.prime;
        }
        Ok(v)
    }
}

/// Sample points away from the half-period lattice.
fn sample_points(tau: Complex64) -> Vec<Complex64> {
    [
        (0.113, 0.271),
        (0.347, 0.619),
        (0.781, 0.157),
        (0.529, 0.883),
        (0.233, 0.437),
    ]
    .iter()
    .map(|&(a, b)| Complex64::new(a, 0.0) + b * tau)
    .collect()
}

fn check_tau(tau: Complex64) -> Result<()> {
    if tau.im.is_nan() || tau.im <= 0.0 {
        return Err(Error::ThetaDomain(tau.im));
    }
    if tau.im < 1.0 {
        return Err(Error::Unsupported(format!(
            "residue demo needs Im(tau) >= 1, got {}",
            tau.im
        )));
    }
    Ok(())
}

/// Maximal relative deviation `|F(h + w) - F(h)| / |F(h)|` over `w in {1, tau}`.
pub fn ellipticity_deviation(
    numer: &[i64],
    denom: &[i64],
    tau: Complex64,
    terms: usize,
) -> Result<f64> {
    let f = Integrand {
        numer: numer.to_vec(),
        denom: denom.to_vec(),
        tau,
        prime: theta_prime_zero(tau, terms)?,
        terms,
    };
    let mut worst: f64 = 0.0;
    for h in sample_points(tau) {
        let base = f.eval(h)?;
        for w in [Complex64::new(1.0, 0.0), tau] {
            let dev = (f.eval(h + w)? - base).norm() / base.norm();
            worst = worst.max(if dev.is_finite() { dev } else { f64::INFINITY });
        }
    }
    Ok(worst)
}

/// `(1 / 2 pi i) * contour integral of f` around each centre, by the trapezoidal rule.
///
/// Fails with a conditioning error when another listed centre lies within `2 * radius`.
pub fn contour_residue_sum(
    f: impl Fn(Complex64) -> Result<Complex64>,
    centres: &[Complex64],
    radius: f64,
    nodes: usize,
) -> Result<Complex64> {
    for (a, p) in centres.iter().enumerate() {
        for q in &centres[a + 1..] {
            if (p - q).norm() < 2.0 * radius {
                return Err(Error::Conditioning(format!(
                    "poles {p} and {q} are closer than twice the contour radius {radius}"
                )));
            }
        }
    }
    let mut total = Complex64::new(0.0, 0.0);
    for &c in centres {
        let mut acc = Complex64::new(0.0, 0.0);
        for t in 0..nodes {
            let e = Complex64::from_polar(radius, 2.0 * PI * t as f64 / nodes as f64);
            acc += f(c + e)? * e;
        }
        total += acc / nodes as f64;
    }
    Ok(total)
}

/// Poles `(a + b tau)/mu` of `1/theta(mu h)` inside the shifted parallelogram.
fn poles_in_parallelogram(denom: &[i64], tau: Complex64, shift: (f64, f64)) -> Vec<Complex64> {
    let mut mults: Vec<i64> = denom.iter().map(|m| m.abs()).filter(|&m| m != 0).collect();
    mults.sort_unstable();
    mults.dedup();
    let inside = |x: f64, s: f64| x >= s - 0.5 && x < s + 0.5;
    let mut poles: Vec<(i64, i64, i64)> = Vec::new();
    for &mu in &mults {
        for a in -mu..=mu {
            for b in -mu..=mu {
                let (x, y) = (a as f64 / mu as f64, b as f64 / mu as f64);
                if inside(x, shift.0) && inside(y, shift.1) {
                    let g = num_integer::gcd(num_integer::gcd(a, b), mu);
                    poles.push((a / g, b / g, mu / g));
                }
            }
        }
    }
    poles.sort_unstable();
    poles.dedup();
    poles
        .into_iter()
        .map(|(a, b, mu)| (Complex64::new(a as f64, 0.0) + b as f64 * tau) / mu as f64)
        .collect()
}

/// Ellipticity check and residue sum for a rank-one model, at `lambda = 0`.
pub fn residue_sum_demo(
    ci: &CIModel,
    tau: Complex64,
    opts: &ResidueOptions,
) -> Result<ResidueReport> {
    if ci.picard_rank() != 1 {
        return Err(Error::Unsupported(format!(
            "residue demo needs Picard rank 1, got {}",
            ci.picard_rank()
        )));
    }
    check_tau(tau)?;
    let numer: Vec<i64> = ci.degrees.iter().map(|r| r[0]).collect();
    let denom: Vec<i64> = ci.divisor_forms().iter().map(|r| r[0]).collect();
    let max_deviation = ellipticity_deviation(&numer, &denom, tau, opts.product_terms)?;
    let f = Integrand {
        numer,
        denom: denom.clone(),
        tau,
        prime: theta_prime_zero(tau, opts.product_terms)?,
        terms: opts.product_terms,
    };
    let poles = poles_in_parallelogram(&denom, tau, opts.shift);
    let residue_sum = contour_residue_sum(|h| f.eval(h), &poles, opts.radius, opts.nodes)?;
    Ok(ResidueReport {
        is_elliptic: max_deviation < ELLIPTIC_TOLERANCE,
        max_deviation,
        residue_sum,
        poles,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::toric::projective_space;

    fn pn(n: usize, d: Vec<Vec<i64>>) -> CIModel {
        CIModel::from_fan(projective_space(n).unwrap(), d).unwrap()
    }

    fn tau2() -> Complex64 {
        Complex64::new(0.0, 2.0)
    }

    #[test]
    fn quadric_is_elliptic_with_zero_residue_sum() {
        let r =
            residue_sum_demo(&pn(3, vec![vec![2]]), tau2(), &ResidueOptions::default()).unwrap();
        assert!(r.is_elliptic, "{}", r.max_deviation);
        assert!(r.residue_sum.norm() < 1e-6, "{}", r.residue_sum);
        assert_eq!(r.poles, vec![Complex64::new(0.0, 0.0)]);
    }

    #[test]
    fn quartic_is_not_elliptic() {
        let r =
            residue_sum_demo(&pn(3, vec![vec![4]]), tau2(), &ResidueOptions::default()).unwrap();
        assert!(!r.is_elliptic);
        assert!(r.max_deviation > 1e-2);
    }

    #[test]
    fn residue_at_zero_matches_exact_genus() {
        use crate::genus::pipeline::witten_genus;
        use crate::ringcore::rational_to_f64;
        use crate::toric::intersection_table;
        let ci = pn(3, vec![vec![4]]);
        let r = residue_sum_demo(&ci, tau2(), &ResidueOptions::default()).unwrap();
        let table = intersection_table(&ci.fan, &ci.pd, 3).unwrap();
        let g = witten_genus(&ci, &table, 4).unwrap();
        let q = (2.0 * PI * Complex64::i() * tau2()).exp();
        let mut value = Complex64::new(0.0, 0.0);
        for (j, c) in g.coeffs().iter().enumerate() {
            value += rational_to_f64(c) * q.powu(j as u32);
        }
        let expected = (2.0 * PI * Complex64::i()).powi(2) * value;
        assert!(
            (r.residue_sum - expected).norm() < 1e-8 * expected.norm(),
            "{} vs {expected}",
            r.residue_sum
        );
    }

    #[test]
    fn zero_integrand_has_zero_sum() {
        let s = contour_residue_sum(
            |_| Ok(Complex64::new(0.0, 0.0)),
            &[Complex64::new(0.0, 0.0)],
            0.25,
            64,
        )
        .unwrap();
        assert_eq!(s, Complex64::new(0.0, 0.0));
    }

    #[test]
    fn close_poles_are_rejected() {
        let c = [Complex64::new(0.0, 0.0), Complex64::new(0.3, 0.0)];
        let err = contour_residue_sum(|_| Ok(Complex64::new(1.0, 0.0)), &c, 0.25, 16).unwrap_err();
        assert_eq!(err.code(), "conditioning");
    }

    #[test]
    fn other_models_run() {
        let r = residue_sum_demo(&pn(1, vec![]), tau2(), &ResidueOptions::default()).unwrap();
        assert!(r.residue_sum.norm().is_finite());
        let opts = ResidueOptions::default();
        let err =
            residue_sum_demo(&pn(3, vec![vec![2]]), Complex64::new(0.0, 0.5), &opts).unwrap_err();
        assert_eq!(err.code(), "unsupported");
        let err =
            residue_sum_demo(&pn(3, vec![vec![2]]), Complex64::new(0.0, -1.0), &opts).unwrap_err();
        assert_eq!(err.code(), "theta_domain");
    }
}
