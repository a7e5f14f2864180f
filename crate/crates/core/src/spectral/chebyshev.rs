use std::f64::consts::FRAC_1_SQRT_2;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Residual allowed when snapping `B_N` to an integer.
pub const INTEGRALITY_TOL: f64 = 1e-6;

/// Chebyshev polynomial of the first kind, by the three-term recurrence
/// `T_{n+1} = 2x T_n - T_{n-1}`.
pub fn chebyshev_t(n: usize, x: f64) -> Result<f64> {
    if !(-1.0..=1.0).contains(&x) {
        return Err(Error::Domain(format!(
            "Chebyshev T_n needs |x| <= 1, got {x}"
        )));
    }
    let (mut prev, mut cur) = (1.0, x);
    if n == 0 {
        return Ok(prev);
    }
    for _ in 1..n {
        (prev, cur) = (cur, 2.0 * x * cur - prev);
    }
    Ok(cur)
}

/// Eigenvalue multiplicities of the tensor model at `xi = pi/2`:
/// `c_plus` copies of `+1` and `c_minus` copies of `-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiplicityPrediction {
    pub sites: usize,
    pub c_plus: u64,
    pub c_minus: u64,
    /// `B_N = 2^{(N+1)/2} T_{N-1}(sqrt(2)/2) = c_plus - c_minus`.
    pub b: i64,
}

impl MultiplicityPrediction {
    pub fn dim(&self) -> u64 {
        self.c_plus + self.c_minus
    }
}

/// `B_N` in floating point, snapped to the nearest integer.
pub fn b_coefficient(sites: usize) -> Result<i64> {
    if sites == 0 {
        return Err(Error::InvalidInput("N must be at least 1".into()));
    }
    let raw = ((sites as f64 + 1.0) / 2.0).exp2() * chebyshev_t(sites - 1, FRAC_1_SQRT_2)?;
    let snapped = raw.round();
    let residual = (raw - snapped).abs();
    if residual >= INTEGRALITY_TOL {
        return Err(Error::Integrality {
            value: raw,
            residual,
        });
    }
    Ok(snapped as i64)
}

pub fn predicted_multiplicities(sites: usize) -> Result<MultiplicityPrediction> {
    if sites == 0 || sites > 62 {
        return Err(Error::InvalidInput(format!(
            "N = {sites} out of range 1..=62"
        )));
    }
    let b = b_coefficient(sites)?;
    let dim = 1i64 << sites;
    if (dim + b) % 2 != 0 || b.abs() > dim {
        return Err(Error::Integrality {
            value: b as f64,
            residual: 1.0,
        });
    }
    Ok(MultiplicityPrediction {
        sites,
        c_plus: ((dim + b) / 2) as u64,
        c_minus: ((dim - b) / 2) as u64,
        b,
    })
}
