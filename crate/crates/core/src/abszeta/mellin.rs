//! Direct Mellin integral for the absolute Hurwitz zeta
//! `Z_f(w, s) = Gamma(w)^{-1} int_0^inf f(e^t) e^{-st} t^{w-1} dt`.

use num_complex::Complex64;

use crate::abszeta::omega::{EvalResult, Method};
use crate::abszeta::quad::integrate;
use crate::abszeta::special::recip_gamma;
use crate::error::{Error, Result};
use crate::zeta::CanonicalAbsForm;

const REL_TOL: f64 = 1e-12;

/// `ln(e^y - 1)` for `y > 0` without overflow.
fn ln_expm1(y: f64) -> f64 {
    if y > 30.0 {
        y + (-(-y).exp()).ln_1p()
    } else {
        y.exp_m1().ln()
    }
}

/// `ln f(e^t)` for `t > 0`; `f(e^t) > 0` there.
fn ln_f_exp(form: &CanonicalAbsForm, t: f64) -> f64 {
    let num: f64 = form.m.iter().map(|&e| ln_expm1(e as f64 * t)).sum();
    let den: f64 = form.n.iter().map(|&e| ln_expm1(e as f64 * t)).sum();
    form.ell as f64 * t / 2.0 + num - den
}

/// `Z_f(w, s)` for the form without its sign `kappa`.
pub fn mellin_z(form: &CanonicalAbsForm, w: Complex64, s: Complex64) -> Result<EvalResult> {
    // Near 0, f(e^t) ~ t^{a-b}; the integrand behaves like t^p.
    let p = w.re - 1.0 + form.a() as f64 - form.b() as f64;
    if p <= -1.0 {
        return Err(Error::ConvergenceRegion(format!(
            "Mellin integral diverges at 0: needs Re w > {}",
            form.b() as f64 - form.a() as f64
        )));
    }
    let decay = s.re - form.deg_f();
    if decay <= 0.0 {
        return Err(Error::ConvergenceRegion(format!(
            "Mellin integral diverges at infinity: needs Re s > {}",
            form.deg_f()
        )));
    }
    let integrand = |t: f64| -> Complex64 {
        (Complex64::new(ln_f_exp(form, t), 0.0) - s * t + (w - 1.0) * t.ln()).exp()
    };

    // [0, 1] with t = v^{1/(p+1)}, which flattens the t^p endpoint behaviour.
    let power = 1.0 / (p + 1.0);
    let head = integrate(
        |v| {
            if v <= 0.0 {
                return Complex64::new(0.0, 0.0);
            }
            let t = v.powf(power);
            integrand(t) * (t * power / v)
        },
        0.0,
        1.0,
        1e-300,
        REL_TOL,
    )?;
    // [1, inf) with t = 1 + ln(1/(1-v)) / kappa.
    let kappa = decay / 2.0;
    let tail = integrate(
        |v| {
            if v >= 1.0 {
                return Complex64::new(0.0, 0.0);
            }
            let t = 1.0 - (-v).ln_1p() / kappa;
            integrand(t) / (kappa * (1.0 - v))
        },
        0.0,
        1.0,
        1e-300,
        REL_TOL,
    )?;
    let rg = recip_gamma(w);
    Ok(EvalResult {
        value: (head.value + tail.value) * rg,
        abs_error: (head.abs_error + tail.abs_error) * rg.norm(),
        method: Method::Integral,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn damping_at_large_s() {
        let f = CanonicalAbsForm::new(1, 0, vec![], vec![1, 1]).unwrap();
        // zeta_2(3, s + 2, (1,1)) ~ 1 / s for large s.
        let mut last = f64::INFINITY;
        for s in [5.0, 50.0, 500.0, 5000.0] {
            let v = mellin_z(&f, Complex64::new(3.0, 0.0), Complex64::new(s, 0.0)).unwrap();
            assert!(v.value.re < last && v.value.re * s < 1.0);
            last = v.value.re;
        }
    }

    #[test]
    fn region_errors() {
        let f = CanonicalAbsForm::new(1, 0, vec![], vec![1, 1]).unwrap();
        assert!(mellin_z(&f, Complex64::new(1.0, 0.0), Complex64::new(3.0, 0.0)).is_err());
        assert!(mellin_z(&f, Complex64::new(3.0, 0.0), Complex64::new(-2.5, 0.0)).is_err());
    }
}
