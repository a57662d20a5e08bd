use std::fmt;

use serde_json::{json, Value};

/// Failure of one invocation. Domain errors exit 2, plumbing errors exit 3.
#[derive(Debug)]
pub enum CliError {
    Domain(pseudoherm::Error),
    /// A result was produced but failed its own acceptance threshold.
    Threshold { what: &'static str, value: f64, limit: f64 },
    Parse { field: String, message: String },
    Usage(String),
    Io { path: String, message: String },
}

impl CliError {
    pub fn parse(field: impl Into<String>, message: impl fmt::Display) -> Self {
        CliError::Parse {
            field: field.into(),
            message: message.to_string(),
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Domain(_) | CliError::Threshold { .. } => 2,
            CliError::Parse { .. } | CliError::Usage(_) | CliError::Io { .. } => 3,
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            CliError::Domain(e) => {
                let mut v = json!({ "error": e.kind(), "message": e.to_string() });
                if let pseudoherm::Error::NotClassifiable { diagnostics } = e {
                    v["diagnostics"] = serde_json::to_value(diagnostics).unwrap_or(Value::Null);
                }
                v
            }
            CliError::Threshold { what, value, limit } => json!({
                "error": "ThresholdExceeded",
                "message": format!("{what} {value:e} exceeds {limit:e}"),
                "value": value,
                "limit": limit,
            }),
            CliError::Parse { field, message } => json!({ "error": "ParseError", "field": field, "message": message }),
            CliError::Usage(m) => json!({ "error": "UsageError", "message": m }),
            CliError::Io { path, message } => json!({ "error": "IoError", "path": path, "message": message }),
        }
    }
}

impl From<pseudoherm::Error> for CliError {
    fn from(e: pseudoherm::Error) -> Self {
        CliError::Domain(e)
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;
