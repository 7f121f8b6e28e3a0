use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("truncation order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("series is not a unit: constant term is zero")]
    NotUnit,
    #[error(
        "polynomial shape mismatch: ({vars_a} vars, cap {cap_a}) vs ({vars_b} vars, cap {cap_b})"
    )]
    ShapeMismatch {
        vars_a: usize,
        cap_a: usize,
        vars_b: usize,
        cap_b: usize,
    },
    #[error("composition requires a polynomial with zero constant term")]
    CompositionDomain,
    #[error("theta functions need Im(tau) > 0, got Im(tau) = {0}")]
    ThetaDomain(f64),
    #[error("malformed fan: {0}")]
    MalformedFan(String),
    #[error("ray {index} is not primitive (gcd {gcd})")]
    NonPrimitiveRay { index: usize, gcd: i64 },
    #[error("cone {cone} references ray {ray}, but the fan has {rays} rays")]
    BadCone {
        cone: usize,
        ray: usize,
        rays: usize,
    },
    #[error("cone {cone} is not unimodular (determinant {det})")]
    NotSmooth { cone: usize, det: i64 },
    #[error("fan is not complete: {0}")]
    NotComplete(String),
    #[error("localization parameters are not generic: {0}")]
    NonGeneric(String),
    #[error("invalid complete-intersection model: {0}")]
    InvalidModel(String),
    #[error("unsupported request: {0}")]
    Unsupported(String),
    #[error("contour conditioning failure: {0}")]
    Conditioning(String),
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
}

impl Error {
    /// Stable machine-readable code for reports and exit handling.
    pub fn code(&self) -> &'static str {
        match self {
            Error::OrderMismatch { .. } => "order_mismatch",
            Error::NotUnit => "not_unit",
            Error::ShapeMismatch { .. } => "shape_mismatch",
            Error::CompositionDomain => "composition_domain",
            Error::ThetaDomain(_) => "theta_domain",
            Error::MalformedFan(_) => "malformed_fan",
            Error::NonPrimitiveRay { .. } => "non_primitive_ray",
            Error::BadCone { .. } => "bad_cone",
            Error::NotSmooth { .. } => "not_smooth",
            Error::NotComplete(_) => "not_complete",
            Error::NonGeneric(_) => "non_generic",
            Error::InvalidModel(_) => "invalid_model",
            Error::Unsupported(_) => "unsupported",
            Error::Conditioning(_) => "conditioning",
            Error::Inconsistency(_) => "inconsistency",
        }
    }

    /// True for errors that indicate a bug or an oracle disagreement rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Inconsistency(_))
    }
}
