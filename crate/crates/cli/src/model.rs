//! JSON model files.
//!
//! ```json
//! {
//!   "builtin": { "kind": "product_projective", "params": { "dims": [3, 3] } },
//!   "degrees": [[2, 0], [0, 2]],
//!   "options": { "q_order": 4, "seed": 17 }
//! }
//! ```
//!
//! An explicit fan replaces `builtin` with
//! `"fan": { "dim": 2, "rays": [[1,0],[0,1],[-1,-1]], "max_cones": [[0,1],[1,2],[2,0]] }`.

use crate::error::CliError;
use serde::{Deserialize, Serialize};
use witgen_core::genus::CIModel;
use witgen_core::toric::{
    hirzebruch, picard_data, product_projective, projective_space, Fan, PicardData,
};
use witgen_core::Error;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(
    tag = "kind",
    content = "params",
    rename_all = "snake_case",
    deny_unknown_fields
)]
pub enum Builtin {
    ProjectiveSpace { n: usize },
    ProductProjective { dims: Vec<usize> },
    Hirzebruch { a: i64 },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FanSpec {
    pub dim: usize,
    pub rays: Vec<Vec<i64>>,
    pub max_cones: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelOptions {
    pub q_order: Option<usize>,
    pub seed: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub builtin: Option<Builtin>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fan: Option<FanSpec>,
    #[serde(default)]
    pub degrees: Vec<Vec<i64>>,
    #[serde(default)]
    pub options: ModelOptions,
}

impl ModelFile {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let file: ModelFile = serde_json::from_str(text).map_err(|e| CliError::parse(&e))?;
        match (&file.builtin, &file.fan) {
            (Some(_), None) | (None, Some(_)) => Ok(file),
            _ => Err(CliError::validation(
                "invalid_model",
                "model must give exactly one of \"builtin\" and \"fan\"",
            )),
        }
    }

    /// Validates the fan, extracts Picard data and builds the complete intersection.
    pub fn build(&self) -> Result<CIModel, CliError> {
        let (fan, pd) = match (&self.builtin, &self.fan) {
            (Some(b), None) => build_builtin(b)?,
            (None, Some(spec)) => {
                let fan =
                    Fan::new(spec.dim, spec.rays.clone(), spec.max_cones.clone())?.validate()?;
                let pd = picard_data(&fan)?;
                (fan, pd)
            }
            _ => unreachable!("checked in parse"),
        };
        Ok(CIModel::new(fan, pd, self.degrees.clone())?)
    }
}

fn build_builtin(b: &Builtin) -> Result<(witgen_core::toric::ValidatedFan, PicardData), CliError> {
    match b {
        Builtin::ProjectiveSpace { n } => block(&[*n]),
        Builtin::ProductProjective { dims } => block(dims),
        Builtin::Hirzebruch { a } => {
            let fan = hirzebruch(*a)?;
            let pd = picard_data(&fan)?;
            Ok((fan, pd))
        }
    }
}

/// Products of projective spaces use the block matrix directly, checked against extraction.
fn block(dims: &[usize]) -> Result<(witgen_core::toric::ValidatedFan, PicardData), CliError> {
    if dims.contains(&0) {
        return Err(
            Error::MalformedFan("projective factors need dimension at least 1".into()).into(),
        );
    }
    let fan = if dims.len() == 1 {
        projective_space(dims[0])?
    } else {
        product_projective(dims)?
    };
    let pd = PicardData::product_projective_block(dims);
    if picard_data(&fan)? != pd {
        return Err(
            Error::Inconsistency("builtin block matrix disagrees with extraction".into()).into(),
        );
    }
    Ok((fan, pd))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_builtin() {
        let m = ModelFile::parse(
            r#"{"builtin":{"kind":"projective_space","params":{"n":3}},"degrees":[[2]]}"#,
        )
        .unwrap();
        assert_eq!(m.builtin, Some(Builtin::ProjectiveSpace { n: 3 }));
        let ci = m.build().unwrap();
        assert_eq!(ci.complex_dim(), 2);
    }

    #[test]
    fn parses_explicit_fan() {
        let m = ModelFile::parse(
            r#"{"fan":{"dim":2,"rays":[[1,0],[0,1],[-1,-1]],"max_cones":[[0,1],[1,2],[2,0]]},
               "options":{"q_order":2,"seed":5}}"#,
        )
        .unwrap();
        assert_eq!(m.options.q_order, Some(2));
        assert_eq!(m.build().unwrap().picard_rank(), 1);
    }

    #[test]
    fn parse_errors_are_positioned() {
        let err = ModelFile::parse("{\n  \"builtin\": 3\n}").unwrap_err();
        assert_eq!(err.code, "parse_error");
        assert!(err.message.contains("line 2"), "{}", err.message);
    }

    #[test]
    fn needs_exactly_one_source() {
        assert_eq!(
            ModelFile::parse(r#"{"degrees":[]}"#).unwrap_err().code,
            "invalid_model"
        );
    }

    #[test]
    fn bad_cone_code() {
        let m = ModelFile::parse(r#"{"fan":{"dim":1,"rays":[[1],[-1]],"max_cones":[[0],[5]]}}"#)
            .unwrap();
        assert_eq!(m.build().unwrap_err().code, "bad_cone");
    }
}
