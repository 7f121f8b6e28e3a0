use crate::error::{Error, Result};
use num_complex::Complex64;
use std::f64::consts::PI;

/// Product truncation used when callers do not pick one.
///
/// With `Im(tau) >= 1`, `|q| <= e^{-2 pi}` and the tail is far below `1e-12`.
pub const DEFAULT_PRODUCT_TERMS: usize = 60;

/// The four Jacobi theta functions in product form.
///
/// `Theta` is the odd function vanishing on the lattice; the others are its
/// half-period translates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ThetaKind {
    Theta,
    Theta1,
    Theta2,
    Theta3,
}

impl ThetaKind {
    pub const ALL: [ThetaKind; 4] = [
        ThetaKind::Theta,
        ThetaKind::Theta1,
        ThetaKind::Theta2,
        ThetaKind::Theta3,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ThetaKind::Theta => "theta",
            ThetaKind::Theta1 => "theta1",
            ThetaKind::Theta2 => "theta2",
            ThetaKind::Theta3 => "theta3",
        }
    }
}

fn i() -> Complex64 {
    Complex64::new(0.0, 1.0)
}

fn check_tau(tau: Complex64) -> Result<()> {
    if tau.im > 0.0 && tau.im.is_finite() && tau.re.is_finite() {
        Ok(())
    } else {
        Err(Error::ThetaDomain(tau.im))
    }
}

/// `e^{2 pi i tau t}` for a real exponent `t`, using the principal branch through `tau`.
fn nome_power(tau: Complex64, t: f64) -> Complex64 {
    (2.0 * PI * i() * tau * t).exp()
}

/// Evaluates a theta function from its truncated product with `terms` factors.
pub fn theta_eval_numeric(
    kind: ThetaKind,
    v: Complex64,
    tau: Complex64,
    terms: usize,
) -> Result<Complex64> {
    check_tau(tau)?;
    if terms == 0 {
        return Err(Error::Unsupported(
            "theta products need at least one term".into(),
        ));
    }
    let q = nome_power(tau, 1.0);
    let w = (2.0 * PI * i() * v).exp();
    let w_inv = (-2.0 * PI * i() * v).exp();
    let one = Complex64::new(1.0, 0.0);
    let (prefactor, sign, offset) = match kind {
        ThetaKind::Theta => (2.0 * nome_power(tau, 0.125) * (PI * v).sin(), -1.0, one),
        ThetaKind::Theta1 => (2.0 * nome_power(tau, 0.125) * (PI * v).cos(), 1.0, one),
        ThetaKind::Theta2 => (one, -1.0, nome_power(tau, -0.5)),
        ThetaKind::Theta3 => (one, 1.0, nome_power(tau, -0.5)),
    };
    let mut prod = prefactor;
    let mut qj = one;
    for _ in 1..=terms {
        qj *= q;
        let shifted = qj * offset;
        prod *= (one - qj) * (one + sign * w * shifted) * (one + sign * w_inv * shifted);
    }
    Ok(prod)
}

/// `theta'(0, tau) = 2 pi q^{1/8} prod (1 - q^j)^3`.
pub fn theta_prime_zero(tau: Complex64, terms: usize) -> Result<Complex64> {
    check_tau(tau)?;
    let q = nome_power(tau, 1.0);
    let one = Complex64::new(1.0, 0.0);
    let mut prod = 2.0 * PI * nome_power(tau, 0.125);
    let mut qj = one;
    for _ in 1..=terms {
        qj *= q;
        prod *= (one - qj).powi(3);
    }
    Ok(prod)
}

/// Multiplier `F` with `theta_kind(v + m + n tau) = F * theta_kind(v)`.
pub fn translation_factor(
    kind: ThetaKind,
    m: i64,
    n: i64,
    v: Complex64,
    tau: Complex64,
) -> Complex64 {
    let parity = |e: i64| if e.rem_euclid(2) == 0 { 1.0 } else { -1.0 };
    let (m_sign, n_sign) = match kind {
        ThetaKind::Theta => (parity(m), parity(n)),
        ThetaKind::Theta1 => (parity(m), 1.0),
        ThetaKind::Theta2 => (1.0, parity(n)),
        ThetaKind::Theta3 => (1.0, 1.0),
    };
    let nf = n as f64;
    let quasi = (-2.0 * PI * i() * nf * v - PI * i() * nf * nf * tau).exp();
    m_sign * n_sign * quasi
}

/// `|theta(v + m + n tau) - F * theta(v)|` for the lattice multiplier `F`.
pub fn translation_law_residual(
    kind: ThetaKind,
    v: Complex64,
    tau: Complex64,
    m: i64,
    n: i64,
    terms: usize,
) -> Result<f64> {
    let shifted = v + Complex64::new(m as f64, 0.0) + (n as f64) * tau;
    let lhs = theta_eval_numeric(kind, shifted, tau, terms)?;
    let rhs = translation_factor(kind, m, n, v, tau) * theta_eval_numeric(kind, v, tau, terms)?;
    Ok((lhs - rhs).norm())
}

/// `|theta'(0) - pi theta1(0) theta2(0) theta3(0)|`.
pub fn jacobi_identity_residual(tau: Complex64, terms: usize) -> Result<f64> {
    let zero = Complex64::new(0.0, 0.0);
    let lhs = theta_prime_zero(tau, terms)?;
    let rhs = PI
        * theta_eval_numeric(ThetaKind::Theta1, zero, tau, terms)?
        * theta_eval_numeric(ThetaKind::Theta2, zero, tau, terms)?
        * theta_eval_numeric(ThetaKind::Theta3, zero, tau, terms)?;
    Ok((lhs - rhs).norm())
}
