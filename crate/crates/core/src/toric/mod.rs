//! Smooth complete toric varieties: fans, Picard data and localization.

pub mod fan;
pub mod localize;
pub mod picard;

pub use fan::{hirzebruch, product_projective, projective_space, validate_fan, Fan, ValidatedFan};
pub use localize::{
    fixed_point_restriction, integrate, integrate_monomial, intersection_table,
    monomials_of_degree, FixedPoint, IntersectionTable, LocalizationParams, Localizer,
};
pub use picard::{picard_data, PicardData};
