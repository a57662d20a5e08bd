use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use pseudoherm::{CMat2, C64};
use serde::de::DeserializeOwned;
use serde_json::Value;

use crate::error::{CliError, CliResult};

/// `re,im` or a bare real number.
pub fn parse_c64(s: &str) -> Result<C64, String> {
    let num = |t: &str| {
        t.trim()
            .parse::<f64>()
            .ok()
            .filter(|x| x.is_finite())
            .ok_or_else(|| format!("{t:?} is not a finite number"))
    };
    match s.split_once(',') {
        Some((re, im)) => Ok(C64::new(num(re)?, num(im)?)),
        None => Ok(C64::new(num(s)?, 0.0)),
    }
}

/// `name=value` with a complex value.
pub fn parse_param(s: &str) -> Result<(String, C64), String> {
    let (k, v) = s.split_once('=').ok_or_else(|| format!("expected name=value, got {s:?}"))?;
    Ok((k.trim().to_string(), parse_c64(v)?))
}

pub fn params_map(list: &[(String, C64)]) -> CliResult<BTreeMap<String, C64>> {
    let mut map = BTreeMap::new();
    for (k, v) in list {
        if map.insert(k.clone(), *v).is_some() {
            return Err(CliError::parse("param", format!("{k} given twice")));
        }
    }
    Ok(map)
}

pub fn read_file(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| CliError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

/// Deserializes `value`, reporting the JSON path of the first bad field under `field`.
pub fn decode<T: DeserializeOwned>(field: &str, value: Value) -> CliResult<T> {
    serde_path_to_error::deserialize(value).map_err(|e| {
        let path = e.path().to_string();
        let name = match path.as_str() {
            "." => field.to_string(),
            p if p.starts_with('[') => format!("{field}{p}"),
            p => format!("{field}.{p}"),
        };
        CliError::parse(name, e.into_inner())
    })
}

pub fn json_value(field: &str, text: &str) -> CliResult<Value> {
    serde_json::from_str(text).map_err(|e| CliError::parse(field, e))
}

pub fn matrix(field: &str, text: &str) -> CliResult<CMat2> {
    decode(field, json_value(field, text)?)
}

/// The Hamiltonian from `--h` or from `--input`; a file may hold the bare
/// matrix or any object with an `h` or `hamiltonian` member.
pub fn hamiltonian(inline: Option<&str>, file: Option<&Path>) -> CliResult<CMat2> {
    match (inline, file) {
        (Some(t), None) => matrix("h", t),
        (None, Some(p)) => {
            let v = json_value("input", &read_file(p)?)?;
            match v {
                Value::Object(mut o) => {
                    let key = ["h", "hamiltonian"].into_iter().find(|k| o.contains_key(*k));
                    match key {
                        Some(k) => decode(k, o.remove(k).unwrap_or(Value::Null)),
                        None => Err(CliError::parse("h", "input object has no h or hamiltonian member")),
                    }
                }
                other => decode("input", other),
            }
        }
        (None, None) => Err(CliError::Usage("a Hamiltonian is required: pass --h JSON or --input FILE".into())),
        (Some(_), Some(_)) => Err(CliError::Usage("--h and --input are mutually exclusive".into())),
    }
}
