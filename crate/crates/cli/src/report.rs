//! Checks, suite results and the report envelope.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{CliError, CliResult};

pub const SCHEMA_VERSION: u32 = 1;

/// One verified quantity.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub operation: String,
    pub inputs: Value,
    pub expected: Value,
    pub actual: Value,
    pub tolerance: Option<f64>,
    pub pass: bool,
}

impl Check {
    /// `|actual - expected| < tol`.
    pub fn close(
        name: &str,
        operation: &str,
        inputs: Value,
        expected: f64,
        actual: f64,
        tol: f64,
    ) -> Check {
        Check {
            name: name.into(),
            operation: operation.into(),
            inputs,
            expected: json!(expected),
            actual: json!(actual),
            tolerance: Some(tol),
            pass: (actual - expected).abs() < tol,
        }
    }

    /// A residual that should be below `tol`.
    pub fn residual(name: &str, operation: &str, inputs: Value, residual: f64, tol: f64) -> Check {
        Check {
            name: name.into(),
            operation: operation.into(),
            inputs,
            expected: json!(0.0),
            actual: json!(residual),
            tolerance: Some(tol),
            pass: residual < tol,
        }
    }

    /// Exact structural equality.
    pub fn equal<T: Serialize>(
        name: &str,
        operation: &str,
        inputs: Value,
        expected: T,
        actual: T,
    ) -> Check {
        let expected = serde_json::to_value(expected).unwrap_or(Value::Null);
        let actual = serde_json::to_value(actual).unwrap_or(Value::Null);
        Check {
            name: name.into(),
            operation: operation.into(),
            inputs,
            pass: expected == actual,
            expected,
            actual,
            tolerance: None,
        }
    }

    /// A step that did not produce a value.
    pub fn failed(
        name: &str,
        operation: &str,
        inputs: Value,
        err: &dyn std::fmt::Display,
    ) -> Check {
        Check {
            name: name.into(),
            operation: operation.into(),
            inputs,
            expected: Value::Null,
            actual: json!({ "error": err.to_string() }),
            tolerance: None,
            pass: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteResult {
    pub suite: String,
    pub passed: usize,
    pub failed: usize,
    pub pass: bool,
    pub checks: Vec<Check>,
}

impl SuiteResult {
    pub fn new(suite: &str, checks: Vec<Check>) -> SuiteResult {
        let passed = checks.iter().filter(|c| c.pass).count();
        SuiteResult {
            suite: suite.into(),
            passed,
            failed: checks.len() - passed,
            pass: passed == checks.len(),
            checks,
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CacheStatus {
    Hit,
    Miss,
    Disabled,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Timing {
    pub total_ms: f64,
}

/// What every command writes. Only `body` is deterministic.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Envelope {
    pub schema_version: u32,
    pub command: String,
    pub cache: CacheStatus,
    pub timing: Timing,
    pub body: Value,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

fn cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// CSV rows: `body.rows` for sweeps, otherwise every check of every suite.
pub fn to_csv(body: &Value) -> CliResult<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let csv_err = |e: csv::Error| CliError::Io(e.to_string());
    if let Some(rows) = body.get("rows").and_then(Value::as_array) {
        let header: Vec<String> = match rows.first().and_then(Value::as_object) {
            Some(obj) => obj.keys().cloned().collect(),
            None => Vec::new(),
        };
        w.write_record(&header).map_err(csv_err)?;
        for row in rows {
            w.write_record(header.iter().map(|k| cell(&row[k])))
                .map_err(csv_err)?;
        }
    } else if let Some(suites) = body.get("suites").and_then(Value::as_array) {
        w.write_record([
            "suite",
            "name",
            "operation",
            "inputs",
            "expected",
            "actual",
            "tolerance",
            "pass",
        ])
        .map_err(csv_err)?;
        for s in suites {
            let suite: SuiteResult = serde_json::from_value(s.clone())?;
            for c in &suite.checks {
                w.write_record([
                    suite.suite.clone(),
                    c.name.clone(),
                    c.operation.clone(),
                    cell(&c.inputs),
                    cell(&c.expected),
                    cell(&c.actual),
                    c.tolerance.map(|t| format!("{t:e}")).unwrap_or_default(),
                    c.pass.to_string(),
                ])
                .map_err(csv_err)?;
            }
        }
    } else {
        return Err(CliError::Input(
            "csv output is available for `sweep` and `verify` only".into(),
        ));
    }
    let bytes = w.into_inner().map_err(|e| CliError::Io(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| CliError::Io(e.to_string()))
}
