//! Complete intersections in toric varieties: characteristic classes, the
//! string check, the Witten genus and two independent oracles for it.
//!
//! Every genus is computed as an integral over the ambient variety `X` of a
//! class pushed forward from `Y`: the normal bundle contributes its Euler
//! class `E_l` and the inverse of its characteristic series.

pub mod classes;
pub mod model;
pub mod oracle;
pub mod pipeline;
pub mod residue;

pub use classes::{
    c1_y, chern_total_x, obstruction_integers, p1_y, string_check, w2_y, ObstructionReport,
    StringVerdict,
};
pub use model::CIModel;
pub use oracle::{witten_bundle_oracle, ORACLE_MAX_Q_ORDER};
pub use pipeline::{
    ahat_genus, genus_report, witten_genus, GenusMetadata, GenusReport, Timings, DEFAULT_SEED,
};
pub use residue::{
    contour_residue_sum, ellipticity_deviation, residue_sum_demo, ResidueOptions, ResidueReport,
};
