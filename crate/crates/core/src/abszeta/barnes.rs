//! Multiple Hurwitz zeta, multiple gamma and multiple sine functions.
//!
//! Two independent routes to `zeta_r(s, x, w) = sum_n (n.w + x)^{-s}`:
//!
//! * [`multi_hurwitz_series`] groups lattice points by `k = n.w`. The count
//!   of points at level `k` is a quasi-polynomial in `k` with period
//!   `lcm(w)`; past a direct head sum, each residue class is rewritten as a
//!   finite combination of Hurwitz zeta values.
//! * [`multi_hurwitz_continued`] uses the Mellin integral of
//!   `h(t) = e^{-xt} / prod (1 - e^{-w_j t})`, split at `tau`: the piece on
//!   `[0, tau]` is integrated termwise from the Laurent expansion of `h`, the
//!   rest by adaptive quadrature.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::abszeta::omega::{EvalResult, Method, OmegaVector, SignedLog};
use crate::abszeta::quad::integrate;
use crate::abszeta::special::{
    bernoulli_scaled, hurwitz_zeta, recip_gamma, BERNOULLI_TABLE, EULER_GAMMA,
};
use crate::error::{Error, Result};

/// Largest order accepted by the series route.
pub const SERIES_MAX_ORDER: usize = 16;
/// Largest order accepted by the continuation route.
pub const CONTINUATION_MAX_ORDER: usize = 10;
/// Default tolerance of the series route.
pub const SERIES_TOL: f64 = 1e-12;

const QUAD_REL_TOL: f64 = 1e-13;
const INTEGER_SNAP: f64 = 1e-12;

fn check_x(x: f64) -> Result<()> {
    if !(x > 0.0 && x.is_finite()) {
        return Err(Error::Domain(format!("x must be positive, got {x}")));
    }
    Ok(())
}

/// Number of `n in N^r` with `n.w = k`, for `k < len`.
pub fn lattice_counts(omega: &OmegaVector, len: usize) -> Vec<BigInt> {
    let mut c = vec![BigInt::zero(); len];
    if len > 0 {
        c[0] = BigInt::one();
    }
    for &w in omega.periods() {
        let w = w as usize;
        for k in w..len {
            let prev = c[k - w].clone();
            c[k] += prev;
        }
    }
    c
}

/// Polynomial (coefficients of `y^i`) through `values[j]` at `j = 0..n`,
/// rewritten in the variable `y = j + q`.
fn shifted_interpolant(values: &[BigInt], q: &BigRational) -> Vec<BigRational> {
    let n = values.len();
    // Forward differences at j = 0.
    let mut diffs: Vec<BigRational> = values
        .iter()
        .cloned()
        .map(BigRational::from_integer)
        .collect();
    let mut newton = Vec::with_capacity(n);
    for k in 0..n {
        newton.push(diffs[0].clone());
        for i in 0..n - 1 - k {
            diffs[i] = &diffs[i + 1] - &diffs[i];
        }
    }
    // sum_k newton_k / k! prod_{t<k} (y - q - t)
    let mut out = vec![BigRational::zero(); n];
    let mut falling = vec![BigRational::one()];
    let mut fact = BigRational::one();
    for (k, dk) in newton.iter().enumerate() {
        if k > 0 {
            fact *= BigRational::from_integer(BigInt::from(k));
            let root = q + BigRational::from_integer(BigInt::from(k - 1));
            let mut next = vec![BigRational::zero(); falling.len() + 1];
            for (i, c) in falling.iter().enumerate() {
                next[i + 1] += c;
                next[i] -= c * &root;
            }
            falling = next;
        }
        let scale = dk / &fact;
        for (i, c) in falling.iter().enumerate() {
            out[i] += c * &scale;
        }
    }
    out
}

fn ln_power(base: f64, s: Complex64) -> Complex64 {
    (-s * base.ln()).exp()
}

/// `zeta_r(s, x, w)` by lattice-level summation, for `Re s > r`.
///
/// `tol` bounds the error estimate absolutely for `|value| <= 1` and
/// relatively above that.
pub fn multi_hurwitz_series(
    s: Complex64,
    x: f64,
    omega: &OmegaVector,
    tol: f64,
) -> Result<EvalResult> {
    check_x(x)?;
    let r = omega.order();
    if r > SERIES_MAX_ORDER {
        return Err(Error::Capability(format!(
            "series evaluation supports order <= {SERIES_MAX_ORDER}, got {r}"
        )));
    }
    if s.re <= r as f64 {
        return Err(Error::ConvergenceRegion(format!(
            "series needs Re s > {r}, got {}",
            s.re
        )));
    }
    let period = omega.lcm() as usize;
    let x_exact =
        BigRational::from_float(x).ok_or_else(|| Error::Domain("x is not finite".into()))?;
    let period_q = BigRational::from_integer(BigInt::from(period));

    let mut blocks = (200f64.max(20.0 * x) / period as f64).ceil().max(1.0) as usize;
    loop {
        let head_len = blocks * period;
        let counts = lattice_counts(omega, head_len.max(period * (r + 1)));
        let mut head = Complex64::new(0.0, 0.0);
        let mut scale: f64 = 0.0;
        for (k, c) in counts.iter().take(head_len).enumerate() {
            if c.is_zero() {
                continue;
            }
            let term = ln_power(k as f64 + x, s) * c.to_f64().unwrap_or(f64::INFINITY);
            scale = scale.max(term.norm());
            head += term;
        }

        let mut tail = Complex64::new(0.0, 0.0);
        let mut err = 0.0;
        let period_pow = ln_power(period as f64, s);
        for rho in 0..period {
            let values: Vec<BigInt> = (0..=r).map(|j| counts[period * j + rho].clone()).collect();
            let q = (BigRational::from_integer(BigInt::from(rho)) + &x_exact) / &period_q;
            let coeffs = shifted_interpolant(&values[..r], &q);
            debug_assert_eq!(
                {
                    let y = &q + BigRational::from_integer(BigInt::from(r));
                    coeffs
                        .iter()
                        .rev()
                        .fold(BigRational::zero(), |acc, c| acc * &y + c)
                },
                BigRational::from_integer(values[r].clone()),
                "lattice counts are quasi-polynomial of degree < r"
            );
            let start = blocks as f64 + q.to_f64().unwrap_or(f64::NAN);
            for (i, b) in coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let b = b.to_f64().unwrap_or(f64::NAN);
                let (z, e) = hurwitz_zeta(s - i as f64, start)?;
                let term = period_pow * z * b;
                scale = scale.max(term.norm());
                tail += term;
                err += (period_pow.norm() * b.abs()) * e;
            }
        }
        let value = head + tail;
        let abs_error = err + 64.0 * f64::EPSILON * scale.max(value.norm());
        let target = tol * value.norm().max(1.0);
        if abs_error < target || blocks > 1 << 14 {
            if abs_error >= target {
                return Err(Error::Capability(format!(
                    "series tolerance {tol:e} not reached (estimate {abs_error:e})"
                )));
            }
            return Ok(EvalResult {
                value,
                abs_error,
                method: Method::Series,
            });
        }
        blocks *= 2;
    }
}

/// Laurent expansion `h(t) = sum_{k >= -r} c_k t^k`.
#[derive(Clone, Debug)]
pub struct Laurent {
    pub order: usize,
    /// `coeffs[i]` is `c_{i - order}`.
    pub coeffs: Vec<f64>,
}

impl Laurent {
    pub fn new(x: f64, omega: &OmegaVector, terms: usize) -> Laurent {
        let r = omega.order();
        let len = terms + r;
        // prod_j sum_n b_n^+ w_j^n t^n, with b_n^+ = B_n(1) / n!.
        let mut d = vec![0.0; len];
        d[0] = 1.0;
        for &w in omega.periods() {
            let w = w as f64;
            let series: Vec<f64> = (0..len)
                .map(|n| {
                    let b = if n == 1 { 0.5 } else { bernoulli_scaled(n) };
                    b * w.powi(n as i32)
                })
                .collect();
            d = convolve(&d, &series, len);
        }
        let mut exp_series = vec![1.0; len];
        for n in 1..len {
            exp_series[n] = exp_series[n - 1] * (-x) / n as f64;
        }
        let prod_w: f64 = omega.periods().iter().map(|&w| w as f64).product();
        let coeffs = convolve(&d, &exp_series, len)
            .into_iter()
            .map(|c| c / prod_w)
            .collect();
        Laurent { order: r, coeffs }
    }

    /// `c_k`.
    pub fn coeff(&self, k: i64) -> f64 {
        let i = k + self.order as i64;
        if i < 0 {
            0.0
        } else {
            self.coeffs.get(i as usize).copied().unwrap_or(f64::NAN)
        }
    }

    pub fn ks(&self) -> impl Iterator<Item = (i64, f64)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .map(move |(i, &c)| (i as i64 - self.order as i64, c))
    }
}

fn convolve(a: &[f64], b: &[f64], len: usize) -> Vec<f64> {
    let mut out = vec![0.0; len];
    for (i, ai) in a.iter().enumerate().take(len) {
        if *ai == 0.0 {
            continue;
        }
        for (j, bj) in b.iter().enumerate().take(len - i) {
            out[i + j] += ai * bj;
        }
    }
    out
}

/// `e^{-xt} / prod (1 - e^{-w_j t})` for `t > 0`.
pub fn mellin_kernel(t: f64, x: f64, omega: &OmegaVector) -> f64 {
    let den: f64 = omega
        .periods()
        .iter()
        .map(|&w| -(-(w as f64) * t).exp_m1())
        .product();
    (-x * t).exp() / den
}

/// Split point: inside the Laurent disc (radius `2 pi / max w`) with room
/// to spare, and short enough that `e^{-x tau}` expands without cancellation.
fn split_point(x: f64, omega: &OmegaVector) -> f64 {
    1f64.min(std::f64::consts::PI / omega.max() as f64)
        .min(2.0 / x)
}

/// Number of Laurent terms so that the neglected tail at `tau` is below
/// `1e-18` of the largest kept term.
fn laurent_for(x: f64, omega: &OmegaVector, tau: f64) -> (Laurent, f64) {
    let terms = BERNOULLI_TABLE - omega.order();
    let full = Laurent::new(x, omega, terms);
    let sizes: Vec<f64> = full
        .ks()
        .map(|(k, c)| (c * tau.powi(k as i32)).abs())
        .collect();
    let peak = sizes.iter().copied().fold(0.0, f64::max);
    let mut keep = sizes.len();
    for i in (omega.order() + 4)..sizes.len() {
        if sizes[i..(i + 4).min(sizes.len())]
            .iter()
            .all(|&v| v < 1e-18 * peak)
        {
            keep = i;
            break;
        }
    }
    let tail = 2.0 * sizes.get(keep).copied().unwrap_or(sizes[sizes.len() - 1]);
    let mut truncated = full;
    truncated.coeffs.truncate(keep);
    (truncated, tail + f64::EPSILON * peak * 8.0)
}

/// `int_tau^inf t^{p} h(t) dt` for complex `p`, via `t = tau + ln(1/(1-v)) / kappa`.
fn tail_integral(
    p: Complex64,
    x: f64,
    omega: &OmegaVector,
    tau: f64,
    abs_tol: f64,
) -> Result<(Complex64, f64)> {
    let kappa = x / 2.0;
    let r = integrate(
        |v| {
            if v >= 1.0 {
                return Complex64::new(0.0, 0.0);
            }
            let t = tau - (-v).ln_1p() / kappa;
            let jac = 1.0 / (kappa * (1.0 - v));
            let h = mellin_kernel(t, x, omega) * jac;
            if h == 0.0 {
                return Complex64::new(0.0, 0.0);
            }
            (p * t.ln()).exp() * h
        },
        0.0,
        1.0,
        abs_tol,
        QUAD_REL_TOL,
    )?;
    Ok((r.value, r.abs_error))
}

fn nearest_integer(s: Complex64) -> Option<i64> {
    let n = s.re.round();
    ((s.re - n).abs() < INTEGER_SNAP && s.im.abs() < INTEGER_SNAP).then_some(n as i64)
}

/// `zeta_r(s, x, w)` continued to all `s` except the poles `1..=r`.
pub fn multi_hurwitz_continued(s: Complex64, x: f64, omega: &OmegaVector) -> Result<EvalResult> {
    check_x(x)?;
    let r = omega.order();
    if r > CONTINUATION_MAX_ORDER {
        return Err(Error::Capability(format!(
            "continuation supports order <= {CONTINUATION_MAX_ORDER}, got {r}"
        )));
    }
    let tau = split_point(x, omega);
    let (laurent, laurent_err) = laurent_for(x, omega, tau);
    let scale = laurent
        .ks()
        .map(|(k, c)| (c * tau.powi(k as i32)).abs())
        .fold(0.0, f64::max);

    if let Some(n) = nearest_integer(s) {
        if n <= 0 {
            // 1/Gamma(s) ~ (-1)^m m! (s + m) cancels the pole of c_m / (s + m).
            let m = (-n) as usize;
            let c = laurent.coeff(m as i64);
            if c.is_nan() {
                return Err(Error::Capability(format!(
                    "Laurent order {m} not available"
                )));
            }
            let fact: f64 = (1..=m).map(|i| i as f64).product();
            let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
            return Ok(EvalResult {
                value: Complex64::new(sign * fact * c, 0.0),
                abs_error: fact * 64.0 * f64::EPSILON * scale,
                method: Method::Continued,
            });
        }
        if n as usize <= r && laurent.coeff(-n).abs() > 1e-14 * scale {
            return Err(Error::Pole(format!("zeta_{r} has a pole at s = {n}")));
        }
    }

    let mut head = Complex64::new(0.0, 0.0);
    let ln_tau = tau.ln();
    for (k, c) in laurent.ks() {
        if c == 0.0 {
            continue;
        }
        let e = s + k as f64;
        if e.norm() < INTEGER_SNAP {
            // Removable: c_k vanishes to rounding at this pole candidate.
            continue;
        }
        head += ((e * ln_tau).exp() / e) * c;
    }
    let (tail, tail_err) = tail_integral(s - 1.0, x, omega, tau, 1e-15 * scale.max(1.0))?;
    let rg = recip_gamma(s);
    let value = (head + tail) * rg;
    Ok(EvalResult {
        value,
        abs_error: rg.norm()
            * (tail_err + laurent_err * tau.powf(s.re) + 16.0 * f64::EPSILON * scale),
        method: Method::Continued,
    })
}

fn ln_multi_gamma_positive(x: f64, omega: &OmegaVector) -> Result<SignedLog> {
    let r = omega.order();
    if r > CONTINUATION_MAX_ORDER {
        return Err(Error::Capability(format!(
            "multiple gamma supports order <= {CONTINUATION_MAX_ORDER}, got {r}"
        )));
    }
    let tau = split_point(x, omega);
    let (laurent, laurent_err) = laurent_for(x, omega, tau);
    let scale = laurent
        .ks()
        .map(|(k, c)| (c * tau.powi(k as i32)).abs())
        .fold(0.0, f64::max);
    let mut g0 = 0.0;
    for (k, c) in laurent.ks() {
        g0 += if k == 0 {
            c * tau.ln()
        } else {
            c * tau.powi(k as i32) / k as f64
        };
    }
    let (tail, tail_err) = tail_integral(
        Complex64::new(-1.0, 0.0),
        x,
        omega,
        tau,
        1e-15 * scale.max(1.0),
    )?;
    Ok(SignedLog {
        ln_abs: EULER_GAMMA * laurent.coeff(0) + g0 + tail.re,
        sign: 1,
        ln_error: tail_err + laurent_err + 16.0 * f64::EPSILON * scale,
        method: Method::Continued,
    })
}

/// `true` if `x = -(n.w)` for some lattice point `n`, i.e. a pole of `Gamma_r`.
fn is_lattice_pole(x: f64, omega: &OmegaVector) -> bool {
    if x > 0.0 {
        return false;
    }
    let n = (-x).round();
    if (x + n).abs() > INTEGER_SNAP {
        return false;
    }
    !lattice_counts(omega, n as usize + 1)[n as usize].is_zero()
}

/// `ln |Gamma_r(x, w)|` with sign. Nonpositive `x` off the poles is reached
/// through `Gamma_r(x) = Gamma_r(x + w_1) Gamma_{r-1}(x, w without w_1)`,
/// ending at `Gamma_0(x) = 1/x`.
pub fn ln_multi_gamma(x: f64, omega: &OmegaVector) -> Result<SignedLog> {
    if !x.is_finite() {
        return Err(Error::Domain(format!("x must be finite, got {x}")));
    }
    if x > 0.0 {
        return ln_multi_gamma_positive(x, omega);
    }
    if is_lattice_pole(x, omega) {
        return Err(Error::Pole(format!(
            "Gamma_{} has a pole at x = {x}",
            omega.order()
        )));
    }
    let up = ln_multi_gamma(x + omega.periods()[0] as f64, omega)?;
    let lower = match omega.without(0) {
        Some(rest) => ln_multi_gamma(x, &rest)?,
        None => SignedLog {
            ln_abs: -x.abs().ln(),
            sign: if x < 0.0 { -1 } else { 1 },
            ln_error: 0.0,
            method: Method::Continued,
        },
    };
    Ok(up.mul(&lower))
}

/// `Gamma_r(x, w) = exp(d/ds zeta_r(s, x, w) at s = 0)` for `x > 0`.
pub fn multi_gamma(x: f64, omega: &OmegaVector) -> Result<EvalResult> {
    check_x(x)?;
    Ok(ln_multi_gamma_positive(x, omega)?.to_eval())
}

/// `ln |S_r(x, w)|` with sign, for any `x` where both gamma factors are finite.
pub fn ln_multi_sine(x: f64, omega: &OmegaVector) -> Result<SignedLog> {
    let g = ln_multi_gamma(x, omega)?;
    let reflected = ln_multi_gamma(omega.sum() as f64 - x, omega)?;
    let exponent = if omega.order() % 2 == 0 { 1 } else { -1 };
    Ok(g.powi(-1).mul(&reflected.powi(exponent)))
}

/// `S_r(x, w) = Gamma_r(x)^{-1} Gamma_r(|w| - x)^{(-1)^r}` for `0 < x < |w|`.
pub fn multi_sine(x: f64, omega: &OmegaVector) -> Result<EvalResult> {
    let total = omega.sum() as f64;
    if !(x > 0.0 && x < total) {
        return Err(Error::Domain(format!(
            "multiple sine needs 0 < x < {total}, got {x}"
        )));
    }
    Ok(ln_multi_sine(x, omega)?.to_eval())
}

/// Decay length cut for the contour integral: `e^{-SINE_DECAY}` is below
/// double precision.
const SINE_DECAY: f64 = 40.0;

/// `e^{xt} / (t prod (e^{w_j t} - 1))`, rewritten for large `Re t` so
/// nothing overflows.
fn sine_integrand(t: Complex64, x: f64, omega: &OmegaVector) -> Complex64 {
    let one = Complex64::new(1.0, 0.0);
    if t.re > 0.0 {
        let den = omega
            .periods()
            .iter()
            .fold(t, |acc, &w| acc * (one - (-(w as f64) * t).exp()));
        ((x - omega.sum() as f64) * t).exp() / den
    } else {
        let den = omega
            .periods()
            .iter()
            .fold(t, |acc, &w| acc * ((w as f64 * t).exp() - one));
        (x * t).exp() / den
    }
}

/// `ln S_r(x, w)` for `0 < x < |w|` from the contour integral of
/// [`sine_integrand`] along `Im t = pi / max(w)`, which passes above the
/// pole at the origin and below every other pole. The real part of
/// `(-1)^r` times the integral is `ln S_r`, and `S_r > 0` there.
fn ln_multi_sine_contour(x: f64, omega: &OmegaVector) -> Result<SignedLog> {
    let total = omega.sum() as f64;
    let height = std::f64::consts::PI / omega.max() as f64;
    let left = -SINE_DECAY / x;
    let right = SINE_DECAY / (total - x);
    let f = |u: f64| sine_integrand(Complex64::new(u, height), x, omega);
    let mut value = 0.0;
    let mut err = 0.0;
    // Unit-width pieces near the origin carry most of the mass.
    let cuts = [left, left.max(-1.0), 0.0, right.min(1.0), right];
    for w in cuts.windows(2) {
        if w[1] > w[0] {
            let r = integrate(f, w[0], w[1], 1e-15, QUAD_REL_TOL)?;
            value += r.value.re;
            err += r.abs_error;
        }
    }
    let sign = if omega.order() % 2 == 0 { 1.0 } else { -1.0 };
    Ok(SignedLog {
        ln_abs: sign * value,
        sign: 1,
        ln_error: err,
        method: Method::Integral,
    })
}

/// `ln |S_r(x, w)|` with sign, without any multiple gamma value: a contour
/// integral on `(0, |w|)`, moved there by
/// `S_r(x + w_1) = S_r(x) / S_{r-1}(x, w without w_1)` with `S_0 = -1`.
pub fn ln_multi_sine_integral(x: f64, omega: &OmegaVector) -> Result<SignedLog> {
    if !x.is_finite() {
        return Err(Error::Domain(format!("x must be finite, got {x}")));
    }
    let total = omega.sum() as f64;
    let w1 = omega.periods()[0] as f64;
    if omega.order() == 1 && ((x / w1).round() - x / w1).abs() < INTEGER_SNAP {
        return Err(Error::Pole(format!("S_1 vanishes at x = {x}")));
    }
    let lower = |y: f64| match omega.without(0) {
        Some(rest) => ln_multi_sine_integral(y, &rest),
        None => Ok(SignedLog {
            ln_abs: 0.0,
            sign: -1,
            ln_error: 0.0,
            method: Method::Integral,
        }),
    };
    if x >= total - INTEGER_SNAP {
        let base = ln_multi_sine_integral(x - w1, omega)?;
        return Ok(base.mul(&lower(x - w1)?.powi(-1)));
    }
    if x <= INTEGER_SNAP {
        let up = ln_multi_sine_integral(x + w1, omega)?;
        return Ok(up.mul(&lower(x)?));
    }
    ln_multi_sine_contour(x, omega)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abszeta::special::{ln_gamma, LN_SQRT_2PI};
    use std::f64::consts::PI;

    fn c(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    fn om(v: &[u64]) -> OmegaVector {
        OmegaVector::new(v.to_vec()).unwrap()
    }

    #[test]
    fn counts_for_one_two() {
        // partitions into parts 1 and 2: floor(k/2) + 1
        let got: Vec<_> = lattice_counts(&om(&[1, 2]), 8)
            .into_iter()
            .map(|v| v.to_u64().unwrap())
            .collect();
        assert_eq!(got, [1, 1, 2, 2, 3, 3, 4, 4]);
    }

    #[test]
    fn basel() {
        let r = multi_hurwitz_series(c(2.0), 1.0, &om(&[1]), 1e-10).unwrap();
        assert!((r.value.re - PI * PI / 6.0).abs() < 1e-12);
        assert!(r.abs_error < 1e-10);
    }

    #[test]
    fn series_rejects_outside_region() {
        assert!(matches!(
            multi_hurwitz_series(c(2.0), 1.0, &om(&[1, 1]), 1e-10),
            Err(Error::ConvergenceRegion(_))
        ));
        let big = OmegaVector::repeated(1, 17).unwrap();
        assert!(matches!(
            multi_hurwitz_series(c(20.0), 1.0, &big, 1e-10),
            Err(Error::Capability(_))
        ));
    }

    #[test]
    fn laurent_leading_terms() {
        // h(t) for w = (1), x: e^{-xt}/(1 - e^{-t}) = 1/t + (1/2 - x) + ...
        let l = Laurent::new(0.3, &om(&[1]), 10);
        assert!((l.coeff(-1) - 1.0).abs() < 1e-15);
        assert!((l.coeff(0) - 0.2).abs() < 1e-15);
    }

    #[test]
    fn hurwitz_at_zero() {
        for x in [0.3, 1.0, 2.5] {
            let v = multi_hurwitz_continued(c(0.0), x, &om(&[1])).unwrap();
            assert!((v.value.re - (0.5 - x)).abs() < 1e-13);
        }
    }

    #[test]
    fn continuation_matches_hurwitz() {
        for s in [0.5, -0.7, 2.5, 4.0] {
            let v = multi_hurwitz_continued(c(s), 1.3, &om(&[1])).unwrap();
            let (h, _) = hurwitz_zeta(c(s), 1.3).unwrap();
            assert!((v.value - h).norm() < 1e-11 * h.norm().max(1.0), "s = {s}");
        }
    }

    #[test]
    fn pole_detection() {
        let o = om(&[1, 1]);
        assert!(matches!(
            multi_hurwitz_continued(c(2.0), 0.4, &o),
            Err(Error::Pole(_))
        ));
        assert!(matches!(
            multi_hurwitz_continued(c(1.0), 0.4, &o),
            Err(Error::Pole(_))
        ));
        let near = multi_hurwitz_continued(c(2.0 + 1e-6), 0.4, &o).unwrap();
        assert!(near.value.norm() > 1e5);
    }

    #[test]
    fn lerch() {
        for x in [0.5, 1.0, 2.5] {
            let g = ln_multi_gamma(x, &om(&[1])).unwrap();
            let expected = ln_gamma(c(x)).re - LN_SQRT_2PI;
            assert!((g.ln_abs - expected).abs() < 1e-12, "x = {x}");
        }
    }

    #[test]
    fn negative_arguments_follow_gamma() {
        // Gamma_1(x, (1)) = Gamma(x) / sqrt(2 pi) also for x < 0.
        let g = ln_multi_gamma(-0.7, &om(&[1])).unwrap();
        assert_eq!(g.sign, -1);
        assert!((g.ln_abs - (ln_gamma(c(-0.7)).re - LN_SQRT_2PI)).abs() < 1e-12);
        assert!(matches!(
            ln_multi_gamma(-2.0, &om(&[1])),
            Err(Error::Pole(_))
        ));
        assert!(matches!(ln_multi_gamma(-1.0, &om(&[2, 2])), Ok(_)));
        assert!(matches!(
            ln_multi_gamma(-2.0, &om(&[2, 2])),
            Err(Error::Pole(_))
        ));
    }

    #[test]
    fn contour_sine_order_one_and_two() {
        for x in [0.2, 0.5, 0.9, 1.7, -0.4] {
            let v = ln_multi_sine_integral(x, &om(&[1])).unwrap();
            let want = 2.0 * (PI * x).sin();
            assert!((v.value() - want).abs() < 1e-11, "x = {x}");
        }
        // S_2(x, (1, 1)): S_2(1/2) = sqrt 2, S_2(1) = 1.
        let half = ln_multi_sine_integral(0.5, &om(&[1, 1])).unwrap();
        assert!((half.value() - 2f64.sqrt()).abs() < 1e-11);
        let one = ln_multi_sine_integral(1.0, &om(&[1, 1])).unwrap();
        assert!((one.value() - 1.0).abs() < 1e-11);
        assert!(matches!(
            ln_multi_sine_integral(2.0, &om(&[1])),
            Err(Error::Pole(_))
        ));
    }

    #[test]
    fn contour_sine_matches_gamma_ratio() {
        for w in [&[1, 1][..], &[1, 1, 2], &[2, 2, 2, 2], &[1, 2, 3]] {
            let o = om(w);
            for x in [0.3, 1.1, 2.7, 3.4, 5.5] {
                let a = ln_multi_sine_integral(x, &o).unwrap();
                let b = ln_multi_sine(x, &o).unwrap();
                assert!(
                    a.relative_gap(&b) < 1e-9,
                    "w = {w:?}, x = {x}: {a:?} vs {b:?}"
                );
            }
        }
    }

    #[test]
    fn sine_of_order_one() {
        let v = multi_sine(0.5, &om(&[1])).unwrap();
        assert!((v.value.re - 2.0).abs() < 1e-12);
        let v = multi_sine(0.3, &om(&[1])).unwrap();
        assert!((v.value.re - 2.0 * (PI * 0.3).sin()).abs() < 1e-12);
        assert!(multi_sine(1.5, &om(&[1])).is_err());
    }
}
