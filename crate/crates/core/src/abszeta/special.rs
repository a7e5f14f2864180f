//! Gamma, Bernoulli numbers and the Hurwitz zeta function.

use std::f64::consts::PI;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Euler-Mascheroni constant.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_860_606_512_090_082;
/// `ln sqrt(2 pi)`.
pub const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_741_780_329_736_406;

/// Number of tabulated Bernoulli numbers.
pub const BERNOULLI_TABLE: usize = 160;

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

fn bernoulli_exact(n_max: usize) -> Vec<BigRational> {
    // Akiyama-Tanigawa; yields B_1 = +1/2, fixed up below.
    let mut a: Vec<BigRational> = Vec::with_capacity(n_max + 1);
    let mut out = Vec::with_capacity(n_max + 1);
    for m in 0..=n_max {
        a.push(BigRational::new(BigInt::one(), BigInt::from(m + 1)));
        for j in (1..=m).rev() {
            let diff = &a[j - 1] - &a[j];
            a[j - 1] = diff * BigRational::from_integer(BigInt::from(j));
        }
        out.push(a[0].clone());
    }
    if n_max >= 1 {
        out[1] = -out[1].clone();
    }
    out
}

struct Tables {
    /// `B_n` with `B_1 = -1/2`.
    bernoulli: Vec<f64>,
    /// `B_n / n!`.
    scaled: Vec<f64>,
}

fn tables() -> &'static Tables {
    static T: OnceLock<Tables> = OnceLock::new();
    T.get_or_init(|| {
        let exact = bernoulli_exact(BERNOULLI_TABLE);
        let mut fact = BigRational::one();
        let mut scaled = Vec::with_capacity(exact.len());
        for (n, b) in exact.iter().enumerate() {
            if n > 0 {
                fact *= BigRational::from_integer(BigInt::from(n));
            }
            scaled.push(if b.is_zero() {
                0.0
            } else {
                (b / &fact).to_f64().unwrap_or(0.0)
            });
        }
        Tables {
            bernoulli: exact
                .iter()
                .map(|b| b.to_f64().unwrap_or(f64::NAN))
                .collect(),
            scaled,
        }
    })
}

/// `B_n` (with `B_1 = -1/2`) for `n <= BERNOULLI_TABLE`.
pub fn bernoulli(n: usize) -> f64 {
    tables().bernoulli[n]
}

/// `B_n / n!` for `n <= BERNOULLI_TABLE`.
pub fn bernoulli_scaled(n: usize) -> f64 {
    tables().scaled[n]
}

/// Principal-branch-free `ln Gamma(z)`: only `exp` of the result and its
/// real part are meaningful.
pub fn ln_gamma(z: Complex64) -> Complex64 {
    if z.re < 0.5 {
        // Reflection: Gamma(z) Gamma(1 - z) = pi / sin(pi z).
        let s = (z * PI).sin();
        return Complex64::new(PI.ln(), 0.0) - s.ln() - ln_gamma(Complex64::new(1.0, 0.0) - z);
    }
    let z = z - 1.0;
    let mut acc = Complex64::new(LANCZOS[0], 0.0);
    for (i, c) in LANCZOS.iter().enumerate().skip(1) {
        acc += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    Complex64::new(LN_SQRT_2PI, 0.0) + (z + 0.5) * t.ln() - t + acc.ln()
}

/// `1 / Gamma(z)`, exactly zero at the poles.
pub fn recip_gamma(z: Complex64) -> Complex64 {
    if z.im == 0.0 && z.re <= 0.0 && z.re.fract() == 0.0 {
        return Complex64::new(0.0, 0.0);
    }
    (-ln_gamma(z)).exp()
}

/// `ln |Gamma(x)|` and the sign of `Gamma(x)` for real `x` off the poles.
pub fn ln_gamma_signed(x: f64) -> Result<(f64, i8)> {
    if x <= 0.0 && x.fract() == 0.0 {
        return Err(Error::Pole(format!("Gamma has a pole at {x}")));
    }
    let v = ln_gamma(Complex64::new(x, 0.0)).re;
    let sign = if x > 0.0 || (-x).ceil() as i64 % 2 == 0 {
        1
    } else {
        -1
    };
    Ok((v, sign))
}

/// Hurwitz zeta `sum_{k >= 0} (k + a)^{-s}` continued to all `s != 1`, by
/// Euler-Maclaurin summation. Returns the value and an error estimate.
pub fn hurwitz_zeta(s: Complex64, a: f64) -> Result<(Complex64, f64)> {
    if a <= 0.0 {
        return Err(Error::Domain(format!("Hurwitz zeta needs a > 0, got {a}")));
    }
    if (s - 1.0).norm() < 1e-14 {
        return Err(Error::Pole("Hurwitz zeta at s = 1".into()));
    }
    let shift = (s.norm() + 20.0 - a).ceil().max(0.0) as usize;
    let mut sum = Complex64::new(0.0, 0.0);
    let mut scale: f64 = 0.0;
    for k in 0..shift {
        let term = (-s * (k as f64 + a).ln()).exp();
        scale = scale.max(term.norm());
        sum += term;
    }
    let big = shift as f64 + a;
    let ln_big = big.ln();
    let head = (-s * ln_big).exp();
    sum += ((Complex64::new(1.0, 0.0) - s) * ln_big).exp() / (s - 1.0);
    sum += head * 0.5;
    scale = scale.max(head.norm());

    // Correction terms B_{2j}/(2j)! (s)_{2j-1} big^{-s-2j+1}.
    let mut rising = s; // (s)_{2j-1}
    let mut power = head / big; // big^{-s-1}
    let mut err = f64::INFINITY;
    for j in 1..=(BERNOULLI_TABLE / 2 - 1) {
        let term = rising * power * bernoulli_scaled(2 * j);
        let size = term.norm();
        sum += term;
        err = size;
        if size <= 1e-17 * sum.norm().max(1e-300) {
            break;
        }
        rising *= (s + (2 * j - 1) as f64) * (s + (2 * j) as f64);
        power /= big * big;
    }
    Ok((
        sum,
        err + 4.0 * f64::EPSILON * (scale * shift as f64).max(sum.norm()),
    ))
}
