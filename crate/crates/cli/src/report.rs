//! Report files. Exact rationals are `"p/q"` strings; floats appear only for numeric checks.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use witgen_core::genus::{CIModel, ObstructionReport};
use witgen_core::ringcore::{rational_to_string, MPoly, QSeries, Rational};
use witgen_core::toric::IntersectionTable;

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportFile {
    pub command: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub model: Option<ModelSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub obstructions: Option<ObstructionSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub classes: Option<ClassSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witten: Option<WittenSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub theta: Option<ThetaSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub residue: Option<ResidueSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timings_ms: Option<BTreeMap<String, f64>>,
}

impl ReportFile {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelSection {
    pub fan_valid: bool,
    pub dim: usize,
    pub num_rays: usize,
    pub picard_rank: usize,
    pub complex_dim: usize,
    pub degrees: Vec<Vec<i64>>,
    pub basis_rays: Vec<usize>,
    pub m_matrix: Vec<Vec<i64>>,
    pub reorder_map: Vec<usize>,
}

impl ModelSection {
    pub fn new(ci: &CIModel) -> Self {
        ModelSection {
            fan_valid: true,
            dim: ci.ambient_dim(),
            num_rays: ci.fan.num_rays(),
            picard_rank: ci.picard_rank(),
            complex_dim: ci.complex_dim(),
            degrees: ci.degrees.clone(),
            basis_rays: ci.pd.basis_rays.clone(),
            m_matrix: ci.pd.m_matrix.clone(),
            reorder_map: ci.pd.reorder_map.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ObstructionSection {
    pub verdict: String,
    pub offdiag: Vec<Vec<i64>>,
    pub diag: Vec<i64>,
    pub parity: Vec<i64>,
    pub spin_certified: bool,
}

impl From<&ObstructionReport> for ObstructionSection {
    fn from(r: &ObstructionReport) -> Self {
        ObstructionSection {
            verdict: r.verdict.as_str().into(),
            offdiag: r.offdiag.clone(),
            diag: r.diag.clone(),
            parity: r.parity.clone(),
            spin_certified: r.spin_certified(),
        }
    }
}

/// One monomial `coeff * h^exponent`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Term {
    pub exponent: Vec<u32>,
    pub coeff: String,
}

pub fn terms(p: &MPoly<Rational>) -> Vec<Term> {
    p.terms()
        .map(|(e, c)| Term {
            exponent: e.clone(),
            coeff: rational_to_string(c),
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClassSection {
    pub c1: Vec<Term>,
    pub w2: Vec<Term>,
    pub p1: Vec<Term>,
}

pub fn coefficients(s: &QSeries) -> Vec<String> {
    s.coeffs().iter().map(rational_to_string).collect()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OracleSection {
    pub q_order: usize,
    pub coefficients: Vec<String>,
    pub agrees: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableEntry {
    pub exponent: Vec<u32>,
    pub value: String,
}

pub fn table_entries(t: &IntersectionTable) -> Vec<TableEntry> {
    t.entries
        .iter()
        .map(|(e, v)| TableEntry {
            exponent: e.clone(),
            value: rational_to_string(v),
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WittenSection {
    pub q_order: usize,
    pub seed: u64,
    /// Coefficients of `q^0 .. q^q_order`.
    pub coefficients: Vec<String>,
    pub ahat: String,
    /// False when the real dimension of `Y` is not a multiple of four.
    pub real_dim_divisible_by_four: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub table: Option<Vec<TableEntry>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TranslationResidual {
    pub kind: String,
    pub m: i64,
    pub n: i64,
    pub residual: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ThetaEntry {
    /// `[re, im]`.
    pub tau: [f64; 2],
    pub jacobi_residual: f64,
    pub max_translation_residual: f64,
    pub translations: Vec<TranslationResidual>,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ThetaSection {
    pub tol: f64,
    pub entries: Vec<ThetaEntry>,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ResidueSection {
    pub tau: [f64; 2],
    pub is_elliptic: bool,
    pub max_deviation: f64,
    pub residue_sum: [f64; 2],
    pub poles: Vec<[f64; 2]>,
}
