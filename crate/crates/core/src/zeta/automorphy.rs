use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::zeta::form::CanonicalAbsForm;

/// Relative residual below which a form is certified.
pub const AUTOMORPHY_TOL: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AutomorphyCertificate {
    #[serde(rename = "C")]
    pub sign: i8,
    #[serde(rename = "D")]
    pub weight: i64,
    pub verified: bool,
    pub max_residual: f64,
    pub samples: usize,
}

/// `|f(1/x) - C x^{-D} f(x)| / |f(1/x)|`.
pub fn automorphy_residual(form: &CanonicalAbsForm, x: f64) -> f64 {
    let lhs = form.eval_f(1.0 / x);
    let rhs = f64::from(form.sign()) * x.powf(-form.weight() as f64) * form.eval_f(x);
    (lhs - rhs).abs() / lhs.abs()
}

/// Weight, sign, and the largest residual over `samples` seeded points in `(1, 3)`.
pub fn automorphy(form: &CanonicalAbsForm, samples: usize, seed: u64) -> AutomorphyCertificate {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let max_residual = (0..samples)
        .map(|_| automorphy_residual(form, rng.random_range(1.0..3.0)))
        .fold(0.0, f64::max);
    AutomorphyCertificate {
        sign: form.sign(),
        weight: form.weight(),
        verified: max_residual < AUTOMORPHY_TOL,
        max_residual,
        samples,
    }
}

/// `f(1/x) x^D == C f(x)` in exact rational arithmetic.
/// `None` if the form has an odd monomial exponent or `x` is a pole.
pub fn automorphy_exact(form: &CanonicalAbsForm, x: &BigRational) -> Option<bool> {
    if x.is_zero() {
        return None;
    }
    let lhs = form.eval_f_exact(&x.recip())?;
    let rhs = form.eval_f_exact(x)?;
    let d = form.weight();
    let xd = if d >= 0 {
        num_traits::pow(x.clone(), d as usize)
    } else {
        num_traits::pow(x.recip(), d.unsigned_abs() as usize)
    };
    let c = if form.sign() > 0 {
        BigRational::one()
    } else {
        -BigRational::one()
    };
    Some(lhs * xd == c * rhs)
}
