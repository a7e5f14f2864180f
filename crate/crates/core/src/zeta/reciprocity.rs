//! Reciprocity of determinant zetas under `u -> 1/u`, evaluated through
//! log-determinants so that `u^{2^N}` never overflows.

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::qca::{classify, GlobalOperator, DEFAULT_CLASSIFY_TOL};

/// A determinant as `exp(log_abs) * phase` with `|phase| = 1`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LogDet {
    pub log_abs: f64,
    pub phase: Complex64,
}

impl LogDet {
    pub fn value(self) -> Complex64 {
        self.phase * self.log_abs.exp()
    }
}

/// `log|det m|` and phase by LU with partial pivoting.
pub fn log_det(m: &DMatrix<Complex64>) -> Result<LogDet> {
    if !m.is_square() {
        return Err(Error::InvalidInput(
            "determinant of a non-square matrix".into(),
        ));
    }
    let lu = m.clone().lu();
    let mut log_abs = 0.0;
    let mut phase = lu.p().determinant::<Complex64>();
    for z in lu.u().diagonal().iter() {
        let r = z.norm();
        if r == 0.0 {
            return Err(Error::Singular);
        }
        log_abs += r.ln();
        phase *= z / r;
    }
    Ok(LogDet { log_abs, phase })
}

/// `det(I - u A)`.
fn log_det_shifted(a: &DMatrix<Complex64>, u: f64) -> Result<LogDet> {
    let n = a.nrows();
    let shifted = DMatrix::<Complex64>::identity(n, n) - a * Complex64::new(u, 0.0);
    log_det(&shifted).map_err(|e| match e {
        Error::Singular => Error::Pole(format!("u = {u} is a reciprocal eigenvalue")),
        other => other,
    })
}

/// `|lhs / rhs - 1|` for two values in log form.
fn relative_gap(lhs: LogDet, rhs: LogDet) -> f64 {
    let ratio = (lhs.phase / rhs.phase) * (lhs.log_abs - rhs.log_abs).exp();
    (ratio - Complex64::new(1.0, 0.0)).norm()
}

/// Residual of `zeta_A(1/u) = (-u)^M det(A)^{-1} zeta_{A^{-1}}(u)`.
///
/// The left side is `1 / det(I - A/u)`, the right side uses `det A` and
/// `det(I - u A^{-1})`; neither is derived from the other.
pub fn general_reciprocity_check(a: &DMatrix<Complex64>, u: f64) -> Result<f64> {
    if u == 0.0 {
        return Err(Error::Domain("u must be nonzero".into()));
    }
    let m = a.nrows();
    let det_a = log_det(a)?;
    let inv = a.clone().try_inverse().ok_or(Error::Singular)?;
    let lhs_det = log_det_shifted(a, 1.0 / u)?;
    let lhs = LogDet {
        log_abs: -lhs_det.log_abs,
        phase: lhs_det.phase.conj(),
    };
    let rhs_det = log_det_shifted(&inv, u)?;
    let minus_u_sign = if u > 0.0 && m % 2 == 1 { -1.0 } else { 1.0 };
    let rhs = LogDet {
        log_abs: m as f64 * u.abs().ln() - det_a.log_abs - rhs_det.log_abs,
        phase: (det_a.phase * rhs_det.phase).conj() * minus_u_sign,
    };
    Ok(relative_gap(lhs, rhs))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Theorem2Report {
    pub sites: usize,
    /// `det Q` snapped to `+1` or `-1`.
    pub det: i8,
    pub det_residual: f64,
    pub max_residual: f64,
    pub samples: Vec<f64>,
}

/// Draw from `(0.05, 0.45)` or `(1.6, 3.0)` with equal probability.
pub fn sample_u(rng: &mut impl Rng) -> f64 {
    if rng.random_bool(0.5) {
        rng.random_range(0.05..0.45)
    } else {
        rng.random_range(1.6..3.0)
    }
}

/// Check `zeta_N(1/u) = det(Q) u^{2^N} zeta_N(u)` for an orthogonal global
/// operator at seeded sample points.
pub fn verify_theorem2(
    global: &GlobalOperator,
    samples: usize,
    seed: u64,
) -> Result<Theorem2Report> {
    let dense = global.dense()?;
    if !classify(dense, DEFAULT_CLASSIFY_TOL).orthogonal {
        return Err(Error::Precondition(
            "global operator is not orthogonal".into(),
        ));
    }
    let q = dense.to_c64();
    let det = log_det(&q)?.value();
    let snapped: i8 = if det.re >= 0.0 { 1 } else { -1 };
    let det_residual = (det - Complex64::new(f64::from(snapped), 0.0)).norm();
    let dim = q.nrows() as f64;

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points = Vec::with_capacity(samples);
    let mut max_residual: f64 = 0.0;
    while points.len() < samples {
        let u = sample_u(&mut rng);
        // Reciprocal eigenvalue moduli are 1 for orthogonal Q.
        if (u - 1.0).abs() < 1e-3 {
            continue;
        }
        let inner = log_det_shifted(&q, 1.0 / u)?;
        let outer = log_det_shifted(&q, u)?;
        let lhs = LogDet {
            log_abs: -inner.log_abs,
            phase: inner.phase.conj(),
        };
        let rhs = LogDet {
            log_abs: dim * u.ln() - outer.log_abs,
            phase: outer.phase.conj() * f64::from(snapped),
        };
        max_residual = max_residual.max(relative_gap(lhs, rhs));
        points.push(u);
    }
    Ok(Theorem2Report {
        sites: global.sites(),
        det: snapped,
        det_residual,
        max_residual,
        samples: points,
    })
}
