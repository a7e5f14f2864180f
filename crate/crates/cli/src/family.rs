//! Selecting a local operator from command-line arguments.

use std::path::PathBuf;

use clap::{Args, ValueEnum};
use qca_zeta::matrix::Matrix;
use qca_zeta::qca::{local_domany_kinzel, local_qca1, local_qca2, local_tensor, LocalOperator};
use qca_zeta::scalar::{Angle, Scalar};
use serde::Serialize;
use serde_json::{json, Value};

use crate::angle::{angle_label, parse_angle};
use crate::error::{CliError, CliResult};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Qca1,
    Qca2,
    Tensor,
    /// Domany-Kinzel-type stochastic rule.
    Dk,
    /// A 4x4 matrix read from `--matrix`.
    Custom,
}

#[derive(Clone, Debug, Args)]
pub struct FamilyArgs {
    #[arg(long, value_enum, default_value = "tensor")]
    pub family: Family,
    /// First angle (qca1, qca2); also accepted for tensor.
    #[arg(long, allow_hyphen_values = true)]
    pub xi1: Option<String>,
    /// Second angle (qca1, qca2).
    #[arg(long, allow_hyphen_values = true)]
    pub xi2: Option<String>,
    /// Angle of the tensor model; defaults to pi/2.
    #[arg(long, allow_hyphen_values = true)]
    pub xi: Option<String>,
    #[arg(long, default_value_t = 0.5)]
    pub p1: f64,
    #[arg(long, default_value_t = 0.5)]
    pub p2: f64,
    /// JSON file with a 4x4 array; integers and `{"num": n, "den": d}` stay exact.
    #[arg(long)]
    pub matrix: Option<PathBuf>,
}

impl Default for FamilyArgs {
    fn default() -> Self {
        FamilyArgs {
            family: Family::Tensor,
            xi1: None,
            xi2: None,
            xi: None,
            p1: 0.5,
            p2: 0.5,
            matrix: None,
        }
    }
}

/// A resolved operator together with the parameters that produced it.
#[derive(Clone, Debug)]
pub struct Selection {
    pub family: Family,
    pub local: LocalOperator,
    pub echo: Value,
    /// Tensor model at exactly `pi/2`, where the closed forms apply.
    pub tensor_quarter: bool,
}

fn angle_arg(v: Option<&String>, default: &str) -> CliResult<Angle> {
    parse_angle(v.map_or(default, String::as_str)).map_err(CliError::Input)
}

fn scalar_from_json(v: &Value) -> CliResult<Scalar> {
    if let Some(i) = v.as_i64() {
        return Ok(Scalar::int(i));
    }
    serde_json::from_value(v.clone()).map_err(|e| CliError::Input(format!("matrix entry {v}: {e}")))
}

pub fn read_matrix(path: &PathBuf) -> CliResult<Matrix> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    let rows: Vec<Vec<Value>> = serde_json::from_str(&text)?;
    let rows = rows
        .iter()
        .map(|r| {
            r.iter()
                .map(scalar_from_json)
                .collect::<CliResult<Vec<_>>>()
        })
        .collect::<CliResult<Vec<_>>>()?;
    Ok(Matrix::from_real_rows(&rows)?)
}

impl FamilyArgs {
    pub fn tensor(xi: &str) -> Self {
        FamilyArgs {
            xi: Some(xi.to_string()),
            ..FamilyArgs::default()
        }
    }

    pub fn qca(family: Family, xi1: &str, xi2: &str) -> Self {
        FamilyArgs {
            family,
            xi1: Some(xi1.to_string()),
            xi2: Some(xi2.to_string()),
            ..FamilyArgs::default()
        }
    }

    pub fn select(&self) -> CliResult<Selection> {
        match self.family {
            Family::Qca1 | Family::Qca2 => {
                let a = angle_arg(self.xi1.as_ref(), "0")?;
                let b = angle_arg(self.xi2.as_ref(), "0")?;
                let local = if self.family == Family::Qca1 {
                    local_qca1(a, b)
                } else {
                    local_qca2(a, b)
                };
                Ok(Selection {
                    family: self.family,
                    local,
                    echo: json!({"family": self.family, "xi1": angle_label(a), "xi2": angle_label(b)}),
                    tensor_quarter: false,
                })
            }
            Family::Tensor => {
                let xi = angle_arg(self.xi.as_ref().or(self.xi1.as_ref()), "pi/2")?;
                Ok(Selection {
                    family: self.family,
                    local: local_tensor(xi),
                    echo: json!({"family": self.family, "xi": angle_label(xi)}),
                    tensor_quarter: xi == Angle::QuarterTurns(1),
                })
            }
            Family::Dk => {
                for p in [self.p1, self.p2] {
                    if !(0.0..=1.0).contains(&p) {
                        return Err(CliError::Input(format!("probability {p} outside [0, 1]")));
                    }
                }
                Ok(Selection {
                    family: self.family,
                    local: local_domany_kinzel(self.p1, self.p2),
                    echo: json!({"family": self.family, "p1": self.p1, "p2": self.p2}),
                    tensor_quarter: false,
                })
            }
            Family::Custom => {
                let path = self
                    .matrix
                    .as_ref()
                    .ok_or_else(|| CliError::Input("--family custom needs --matrix".into()))?;
                let m = read_matrix(path)?;
                let local = LocalOperator::new(m)?;
                Ok(Selection {
                    family: self.family,
                    echo: json!({"family": self.family, "matrix": local.matrix()}),
                    local,
                    tensor_quarter: false,
                })
            }
        }
    }
}
