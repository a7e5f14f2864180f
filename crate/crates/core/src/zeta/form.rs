//! Canonical absolute forms `kappa * x^{l/2} prod (x^{m_i} - 1) / prod (x^{n_j} - 1)`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::qca::GlobalOperator;
use crate::spectral::{
    default_max_order, exact_char_poly_capped, numeric_spectrum, predicted_multiplicities,
    roots_of_unity_profile, IntPoly, RootProfile, Spectrum, DEFAULT_CLUSTER_TOL, DEFAULT_EXACT_CAP,
};
use crate::zeta::cyclotomic::{binomial_exponents, factor_cyclotomic};
use crate::zeta::spectral_zeta::log_reciprocal_det;

/// Tolerance for matching numeric eigenvalues to roots of unity.
pub const ROOT_MATCH_TOL: f64 = 1e-8;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CanonicalAbsForm {
    pub kappa: i8,
    /// Twice the exponent of the monomial `x^{l/2}`.
    pub ell: i64,
    pub m: Vec<u64>,
    pub n: Vec<u64>,
}

impl CanonicalAbsForm {
    pub fn new(kappa: i8, ell: i64, mut m: Vec<u64>, mut n: Vec<u64>) -> Result<Self> {
        if kappa != 1 && kappa != -1 {
            return Err(Error::InvalidInput(format!(
                "kappa must be +-1, got {kappa}"
            )));
        }
        if m.iter().chain(&n).any(|&e| e == 0) {
            return Err(Error::InvalidInput("orders must be positive".into()));
        }
        m.sort_unstable();
        n.sort_unstable();
        Ok(CanonicalAbsForm { kappa, ell, m, n })
    }

    pub fn a(&self) -> usize {
        self.m.len()
    }

    pub fn b(&self) -> usize {
        self.n.len()
    }

    fn order_balance(&self) -> i64 {
        self.m.iter().sum::<u64>() as i64 - self.n.iter().sum::<u64>() as i64
    }

    /// `2 deg f = l + 2 (sum m - sum n)`.
    pub fn deg_f_twice(&self) -> i64 {
        self.ell + 2 * self.order_balance()
    }

    pub fn deg_f(&self) -> f64 {
        self.deg_f_twice() as f64 / 2.0
    }

    /// Weight `D = l + sum m - sum n`.
    pub fn weight(&self) -> i64 {
        self.ell + self.order_balance()
    }

    /// Sign `C = (-1)^{a - b}`.
    pub fn sign(&self) -> i8 {
        if (self.a() + self.b()) % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// `f(x)` without the sign `kappa`.
    pub fn eval_f(&self, x: f64) -> f64 {
        let num: f64 = self.m.iter().map(|&e| x.powi(e as i32) - 1.0).product();
        let den: f64 = self.n.iter().map(|&e| x.powi(e as i32) - 1.0).product();
        x.powf(self.ell as f64 / 2.0) * num / den
    }

    /// `kappa * f(x)`, the value compared against the spectral zeta.
    pub fn eval(&self, x: f64) -> f64 {
        f64::from(self.kappa) * self.eval_f(x)
    }

    /// Exact `f(x)` at a rational point. `None` if `l` is odd or `x` is a pole.
    pub fn eval_f_exact(&self, x: &BigRational) -> Option<BigRational> {
        if self.ell % 2 != 0 {
            return None;
        }
        let pow = |e: i64| -> BigRational {
            if e >= 0 {
                num_traits::pow(x.clone(), e as usize)
            } else {
                num_traits::pow(x.recip(), (-e) as usize)
            }
        };
        let one = BigRational::one();
        let num = self
            .m
            .iter()
            .fold(one.clone(), |acc, &e| acc * (pow(e as i64) - &one));
        let den = self
            .n
            .iter()
            .fold(one.clone(), |acc, &e| acc * (pow(e as i64) - &one));
        if den.is_zero() {
            return None;
        }
        Some(pow(self.ell / 2) * num / den)
    }
}

impl fmt::Display for CanonicalAbsForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let factors = |orders: &[u64]| -> String {
            if orders.is_empty() {
                return "1".into();
            }
            let mut grouped: BTreeMap<u64, usize> = BTreeMap::new();
            for &e in orders {
                *grouped.entry(e).or_default() += 1;
            }
            grouped
                .into_iter()
                .map(|(e, k)| {
                    let base = if e == 1 {
                        "(x-1)".to_string()
                    } else {
                        format!("(x^{e}-1)")
                    };
                    if k == 1 {
                        base
                    } else {
                        format!("{base}^{k}")
                    }
                })
                .collect::<Vec<_>>()
                .join("")
        };
        let sign = if self.kappa < 0 { "-" } else { "" };
        let mono = match self.ell {
            0 => String::new(),
            l if l % 2 == 0 => format!("x^{} ", l / 2),
            l => format!("x^({l}/2) "),
        };
        write!(f, "{sign}{mono}{} / {}", factors(&self.m), factors(&self.n))
    }
}

/// Which of the three tensor-model shapes a form has.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TensorCase {
    A,
    B,
    C,
}

impl TensorCase {
    pub fn label(self) -> &'static str {
        match self {
            TensorCase::A => "a",
            TensorCase::B => "b",
            TensorCase::C => "c",
        }
    }
}

/// Form as emitted in reports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FormRecord {
    pub kappa: i8,
    pub ell: i64,
    pub m: Vec<u64>,
    pub n: Vec<u64>,
    #[serde(rename = "D")]
    pub weight: i64,
    #[serde(rename = "C")]
    pub sign: i8,
    pub case: String,
}

impl FormRecord {
    pub fn new(form: &CanonicalAbsForm, case: Option<TensorCase>) -> Self {
        FormRecord {
            kappa: form.kappa,
            ell: form.ell,
            m: form.m.clone(),
            n: form.n.clone(),
            weight: form.weight(),
            sign: form.sign(),
            case: case.map_or("general", TensorCase::label).to_string(),
        }
    }
}

/// Build `f` from cyclotomic multiplicities `det(I - uQ) = ±prod Phi_d^{m_d}`.
/// The sign is fixed later; here `kappa = 1`.
fn unsigned_form(mults: &BTreeMap<u64, usize>) -> CanonicalAbsForm {
    let mut exps: BTreeMap<u64, i64> = BTreeMap::new();
    for (&d, &md) in mults {
        for (e, mu) in binomial_exponents(d) {
            *exps.entry(e).or_default() -= md as i64 * mu;
        }
    }
    let mut m = Vec::new();
    let mut n = Vec::new();
    for (e, k) in exps {
        let target = if k > 0 { &mut m } else { &mut n };
        target.extend(std::iter::repeat(e).take(k.unsigned_abs() as usize));
    }
    CanonicalAbsForm {
        kappa: 1,
        ell: 0,
        m,
        n,
    }
}

/// Choose `kappa` so that `kappa f(1/2)` has the sign of `reference`.
fn fix_sign(mut form: CanonicalAbsForm, reference: f64) -> CanonicalAbsForm {
    let f = form.eval_f(0.5);
    form.kappa = if f * reference < 0.0 { -1 } else { 1 };
    form
}

/// Canonical form of `prod (1 - lambda u)^{-mult}` over a root-of-unity spectrum.
pub fn canonical_form(spec: &Spectrum) -> Result<CanonicalAbsForm> {
    let classes = match roots_of_unity_profile(spec, default_max_order(spec.dim), ROOT_MATCH_TOL) {
        RootProfile::Matched { classes } => classes,
        RootProfile::NotRootsOfUnity { re, im } => {
            return Err(Error::NotAbsoluteForm(format!(
                "eigenvalue {re}{im:+}i is not a root of unity"
            )))
        }
    };
    let mut mults = BTreeMap::new();
    for (d, class) in &classes {
        let k = class.uniform_multiplicity().ok_or_else(|| {
            Error::NotAbsoluteForm(format!(
                "primitive roots of order {d} are not uniformly occupied"
            ))
        })?;
        mults.insert(*d, k);
    }
    let (log_abs, phase) = log_reciprocal_det(spec, 0.5)?;
    let reference = phase.re.signum() * (-log_abs).exp();
    Ok(fix_sign(unsigned_form(&mults), reference))
}

/// Canonical form of `1 / p(u)` for an exact `p(u) = det(I - uQ)`.
pub fn canonical_form_from_poly(p: &IntPoly) -> Result<CanonicalAbsForm> {
    let (_, mults) = factor_cyclotomic(p).ok_or_else(|| {
        Error::NotAbsoluteForm("characteristic polynomial is not a product of cyclotomics".into())
    })?;
    Ok(fix_sign(unsigned_form(&mults), 1.0 / p.eval_f64(0.5)))
}

/// Where a form came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FormSource {
    Exact,
    Numeric,
}

/// Canonical form of `zeta_N` for an assembled operator. The exact
/// characteristic polynomial is used when the entries are exact and the size
/// is within `exact_cap`; otherwise the clustered numeric spectrum.
pub fn canonical_form_of(
    global: &GlobalOperator,
    exact_cap: usize,
) -> Result<(CanonicalAbsForm, FormSource)> {
    if global.local().is_exact() && global.sites() <= exact_cap {
        let p = exact_char_poly_capped(global, exact_cap)?;
        return Ok((canonical_form_from_poly(&p)?, FormSource::Exact));
    }
    let spec = numeric_spectrum(global, DEFAULT_CLUSTER_TOL)?;
    Ok((canonical_form(&spec)?, FormSource::Numeric))
}

pub fn canonical_form_default(global: &GlobalOperator) -> Result<(CanonicalAbsForm, FormSource)> {
    canonical_form_of(global, DEFAULT_EXACT_CAP)
}

/// Case and form of the tensor model at `xi = pi/2` from the predicted
/// multiplicities alone.
pub fn tensor_case_form(sites: usize) -> Result<(TensorCase, CanonicalAbsForm)> {
    let p = predicted_multiplicities(sites)?;
    let (plus, minus) = (p.c_plus as usize, p.c_minus as usize);
    let kappa = if plus % 2 == 0 { 1 } else { -1 };
    let twos = vec![2; minus];
    let (case, m, n) = match plus.cmp(&minus) {
        std::cmp::Ordering::Greater => {
            let mut n = vec![1; plus - minus];
            n.extend(twos);
            (TensorCase::A, Vec::new(), n)
        }
        std::cmp::Ordering::Equal => (TensorCase::B, Vec::new(), twos),
        std::cmp::Ordering::Less => (TensorCase::C, vec![1; minus - plus], twos),
    };
    Ok((case, CanonicalAbsForm::new(kappa, 0, m, n)?))
}

/// Exact `kappa * f(x)` as a rational, for cross-checks against integer
/// polynomials.
pub fn eval_exact(form: &CanonicalAbsForm, x: &BigRational) -> Option<BigRational> {
    let f = form.eval_f_exact(x)?;
    Some(if form.kappa < 0 { -f } else { f })
}

/// `1 / p(x)` as an exact rational.
pub fn reciprocal_poly_exact(p: &IntPoly, x: &BigRational) -> Option<BigRational> {
    let v = p.coeffs().iter().rev().fold(BigRational::zero(), |acc, c| {
        acc * x + BigRational::from_integer(c.clone())
    });
    (!v.is_zero()).then(|| v.recip())
}

/// Shorthand for a small rational.
pub fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}
