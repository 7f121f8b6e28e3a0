use serde::Serialize;
use thiserror::Error;

/// Exit status for malformed input or failed validation.
pub const EXIT_VALIDATION: u8 = 2;
/// Exit status for internal inconsistencies, including oracle disagreement.
pub const EXIT_INCONSISTENCY: u8 = 3;

#[derive(Clone, Debug, PartialEq, Serialize, Error)]
#[error("{code}: {message}")]
pub struct CliError {
    pub code: String,
    pub message: String,
    #[serde(skip)]
    pub exit: u8,
}

impl CliError {
    pub fn validation(code: &str, message: impl Into<String>) -> Self {
        CliError {
            code: code.into(),
            message: message.into(),
            exit: EXIT_VALIDATION,
        }
    }

    pub fn inconsistency(message: impl Into<String>) -> Self {
        CliError {
            code: "inconsistency".into(),
            message: message.into(),
            exit: EXIT_INCONSISTENCY,
        }
    }

    pub fn parse(e: &serde_json::Error) -> Self {
        Self::validation(
            "parse_error",
            format!("line {}, column {}: {e}", e.line(), e.column()),
        )
    }

    /// `{"error": {"code": ..., "message": ...}}`.
    pub fn to_json(&self) -> String {
        serde_json::json!({ "error": self }).to_string()
    }
}

impl From<witgen_core::Error> for CliError {
    fn from(e: witgen_core::Error) -> Self {
        CliError {
            code: e.code().into(),
            message: e.to_string(),
            exit: if e.is_internal() {
                EXIT_INCONSISTENCY
            } else {
                EXIT_VALIDATION
            },
        }
    }
}
