use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Deserialize;
use serde_json::Value;

use crate::CliError;

/// Environment variable naming an alternative manifest file.
pub const MANIFEST_ENV: &str = "RSLAB_MANIFEST";

/// The checked-in manifest, compiled into the binary.
pub const DEFAULT_MANIFEST: &str = include_str!("../data/reference_values.toml");

#[derive(Debug, Clone, Deserialize)]
pub struct Manifest {
    #[serde(rename = "entry")]
    pub entries: Vec<Entry>,
}

/// One reference value: run `command`, follow the JSON pointer `path` into
/// its results, compare with `expected`.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Entry {
    pub id: String,
    pub command: String,
    pub path: String,
    pub expected: toml::Value,
    pub citation: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub id: String,
    pub command: String,
    pub path: String,
    pub citation: String,
    pub expected: Value,
    pub actual: Option<Value>,
    pub error: Option<String>,
    pub pass: bool,
}

pub fn parse(text: &str) -> Result<Manifest, CliError> {
    let m: Manifest = toml::from_str(text).map_err(|e| CliError::Usage(format!("malformed manifest: {e}")))?;
    let mut ids = BTreeSet::new();
    for e in &m.entries {
        if !ids.insert(e.id.as_str()) {
            return Err(CliError::Usage(format!("duplicate manifest id {:?}", e.id)));
        }
        if e.citation.trim().is_empty() {
            return Err(CliError::Usage(format!("manifest entry {:?} has no citation", e.id)));
        }
        if e.command.split_whitespace().next() == Some("verify-paper") {
            return Err(CliError::Usage(format!("manifest entry {:?} cannot run verify-paper", e.id)));
        }
    }
    Ok(m)
}

/// The manifest named by `RSLAB_MANIFEST`, or the built-in one. Returns the
/// source label with it.
pub fn load() -> Result<(String, Manifest), CliError> {
    match std::env::var_os(MANIFEST_ENV) {
        Some(path) => {
            let text = std::fs::read_to_string(&path)
                .map_err(|e| CliError::Usage(format!("cannot read manifest {}: {e}", path.to_string_lossy())))?;
            Ok((path.to_string_lossy().into_owned(), parse(&text)?))
        }
        None => Ok(("built-in".into(), parse(DEFAULT_MANIFEST)?)),
    }
}

fn evaluate(e: &Entry) -> Outcome {
    let expected = serde_json::to_value(&e.expected).unwrap_or(Value::Null);
    let mut args = vec!["rslab"];
    args.extend(e.command.split_whitespace());
    let (actual, error) = match crate::run_args(&args) {
        Ok(report) => match report.envelope.results.pointer(&e.path) {
            Some(v) => (Some(v.clone()), None),
            None => (None, Some(format!("no value at {}", e.path))),
        },
        Err(err) => (None, Some(err.to_string())),
    };
    let pass = actual.as_ref() == Some(&expected);
    Outcome {
        id: e.id.clone(),
        command: e.command.clone(),
        path: e.path.clone(),
        citation: e.citation.clone(),
        expected,
        actual,
        error,
        pass,
    }
}

/// Run the selected entries in parallel; the result keeps manifest order.
pub fn run_manifest(m: &Manifest, filter: Option<&str>) -> Vec<Outcome> {
    let selected: Vec<&Entry> = m.entries.iter().filter(|e| filter.is_none_or(|f| e.id.contains(f))).collect();
    selected.par_iter().map(|e| evaluate(e)).collect()
}

pub fn render(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}
