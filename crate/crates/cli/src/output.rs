use std::fs;
use std::io::Write;
use std::path::Path;

use serde_json::Value;

use crate::error::{CliError, CliResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

#[derive(Debug)]
pub struct Body {
    pub json: Value,
    pub table: Option<Table>,
    pub default: Format,
}

impl Body {
    pub fn json(json: Value) -> Self {
        Body {
            json,
            table: None,
            default: Format::Json,
        }
    }

    pub fn render(&self, format: Option<Format>) -> CliResult<String> {
        match format.unwrap_or(self.default) {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).map_err(|e| CliError::Usage(e.to_string()))?;
                s.push('\n');
                Ok(s)
            }
            Format::Csv => match &self.table {
                Some(t) => csv_text(t),
                None => Err(CliError::Usage("this command has no CSV form".into())),
            },
        }
    }
}

/// A result plus an optional failure that should still exit non-zero.
#[derive(Debug)]
pub struct Outcome {
    pub body: Body,
    pub failure: Option<CliError>,
}

impl From<Body> for Outcome {
    fn from(body: Body) -> Self {
        Outcome { body, failure: None }
    }
}

/// 17 significant digits, locale independent.
pub fn num(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.16e}")
    } else {
        x.to_string()
    }
}

pub fn opt_num(x: Option<f64>) -> String {
    x.map(num).unwrap_or_default()
}

fn csv_text(t: &Table) -> CliResult<String> {
    let mut w = csv::Writer::from_writer(vec![]);
    let err = |e: csv::Error| CliError::Usage(e.to_string());
    w.write_record(&t.header).map_err(err)?;
    for r in &t.rows {
        w.write_record(r).map_err(err)?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Usage(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| CliError::Usage(e.to_string()))
}

pub fn emit(text: &str, path: Option<&Path>) -> CliResult<()> {
    let io = |p: &str, e: std::io::Error| CliError::Io {
        path: p.to_string(),
        message: e.to_string(),
    };
    match path {
        Some(p) => fs::write(p, text).map_err(|e| io(&p.display().to_string(), e)),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes()).and_then(|_| out.flush()).map_err(|e| io("-", e))
        }
    }
}
