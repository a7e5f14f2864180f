use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::spectral::Spectrum;

/// Distance of `1 - lambda u` from zero treated as a pole.
const POLE_TOL: f64 = 1e-14;

/// Which power of `det(I - uQ)^{-1}` is meant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RootExponent {
    /// `det(I - uQ)^{-1}`.
    Full,
    /// The interacting-particle-system normalization `det(I - uQ)^{-1/2^N}`.
    IpsRoot { sites: u32 },
}

impl RootExponent {
    pub fn value(self) -> f64 {
        match self {
            RootExponent::Full => 1.0,
            RootExponent::IpsRoot { sites } => (-f64::from(sites)).exp2(),
        }
    }
}

/// `prod (1 - lambda u)^{-mult * rho}` over a spectrum.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpectralZeta {
    pub spectrum: Spectrum,
    pub root: RootExponent,
}

/// `ln|prod (1 - lambda u)^mult|` and the product's phase.
pub(crate) fn log_reciprocal_det(spec: &Spectrum, u: f64) -> Result<(f64, Complex64)> {
    let mut log_abs = 0.0;
    let mut phase = Complex64::new(1.0, 0.0);
    for e in &spec.eigs {
        let factor = Complex64::new(1.0, 0.0) - e.value() * u;
        let r = factor.norm();
        if r < POLE_TOL {
            return Err(Error::Pole(format!(
                "u = {u} is the reciprocal of eigenvalue {}",
                e.value()
            )));
        }
        log_abs += e.mult as f64 * r.ln();
        phase *= (factor / r).powu(e.mult as u32);
    }
    Ok((log_abs, phase))
}

impl SpectralZeta {
    pub fn new(spectrum: Spectrum, root: RootExponent) -> Self {
        SpectralZeta { spectrum, root }
    }

    pub fn full(spectrum: Spectrum) -> Self {
        SpectralZeta::new(spectrum, RootExponent::Full)
    }

    /// IPS-type zeta; the root is `1/dim`.
    pub fn ips(spectrum: Spectrum) -> Self {
        let sites = spectrum.dim.trailing_zeros();
        SpectralZeta::new(spectrum, RootExponent::IpsRoot { sites })
    }

    /// Evaluate at real `u`. Conjugate pairs make the determinant real; the
    /// fractional root is only taken where it is positive.
    pub fn eval(&self, u: f64) -> Result<f64> {
        let (log_abs, phase) = log_reciprocal_det(&self.spectrum, u)?;
        let sign = if phase.re >= 0.0 { 1.0 } else { -1.0 };
        match self.root {
            RootExponent::Full => Ok(sign * (-log_abs).exp()),
            RootExponent::IpsRoot { .. } => {
                if sign < 0.0 {
                    return Err(Error::Branch(-(log_abs.exp())));
                }
                Ok((-log_abs * self.root.value()).exp())
            }
        }
    }
}

pub fn zeta_eval(z: &SpectralZeta, u: f64) -> Result<f64> {
    z.eval(u)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectral::Origin;

    fn pm(plus: usize, minus: usize) -> Spectrum {
        Spectrum::new(
            vec![
                (Complex64::new(1.0, 0.0), plus),
                (Complex64::new(-1.0, 0.0), minus),
            ],
            Origin::Exact,
        )
    }

    #[test]
    fn single_site_value() {
        let z = SpectralZeta::full(pm(2, 0));
        assert!((z.eval(0.5).unwrap() - 4.0).abs() < 1e-14);
    }

    #[test]
    fn unity_at_origin() {
        assert_eq!(SpectralZeta::full(pm(3, 5)).eval(0.0).unwrap(), 1.0);
        assert_eq!(SpectralZeta::ips(pm(3, 5)).eval(0.0).unwrap(), 1.0);
    }

    #[test]
    fn four_four_at_half() {
        let z = SpectralZeta::full(pm(4, 4));
        let expected = 0.5f64.powi(-4) * 1.5f64.powi(-4);
        assert!((z.eval(0.5).unwrap() / expected - 1.0).abs() < 1e-14);
    }

    #[test]
    fn pole_and_branch() {
        let z = SpectralZeta::full(pm(1, 1));
        assert!(matches!(z.eval(1.0), Err(Error::Pole(_))));
        // det(I - 2Q) = (1 - 2)(1 + 2) < 0
        assert!(matches!(
            SpectralZeta::ips(pm(1, 1)).eval(2.0),
            Err(Error::Branch(_))
        ));
    }

    #[test]
    fn negative_determinant_keeps_sign() {
        let z = SpectralZeta::full(pm(1, 1));
        assert!((z.eval(2.0).unwrap() - 1.0 / -3.0).abs() < 1e-15);
    }
}
