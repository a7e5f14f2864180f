use num_complex::Complex64;
use num_integer::Integer;
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};

/// Periods `(w_1, ..., w_r)` of a multiple Hurwitz zeta function.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct OmegaVector(Vec<u64>);

impl OmegaVector {
    pub fn new(periods: Vec<u64>) -> Result<Self> {
        if periods.is_empty() {
            return Err(Error::InvalidInput(
                "omega vector needs at least one period".into(),
            ));
        }
        if periods.contains(&0) {
            return Err(Error::InvalidInput("periods must be positive".into()));
        }
        Ok(OmegaVector(periods))
    }

    /// `(w, w, ..., w)` of length `r`.
    pub fn repeated(w: u64, r: usize) -> Result<Self> {
        OmegaVector::new(vec![w; r])
    }

    pub fn periods(&self) -> &[u64] {
        &self.0
    }

    pub fn order(&self) -> usize {
        self.0.len()
    }

    pub fn sum(&self) -> u64 {
        self.0.iter().sum()
    }

    pub fn max(&self) -> u64 {
        *self.0.iter().max().expect("nonempty")
    }

    pub fn lcm(&self) -> u64 {
        self.0.iter().fold(1, |acc, w| acc.lcm(w))
    }

    /// The vector with entry `j` removed; `None` if that leaves it empty.
    pub fn without(&self, j: usize) -> Option<OmegaVector> {
        if self.0.len() <= 1 || j >= self.0.len() {
            return None;
        }
        let mut rest = self.0.clone();
        rest.remove(j);
        Some(OmegaVector(rest))
    }
}

impl TryFrom<Vec<u64>> for OmegaVector {
    type Error = Error;
    fn try_from(v: Vec<u64>) -> Result<Self> {
        OmegaVector::new(v)
    }
}

impl From<OmegaVector> for Vec<u64> {
    fn from(o: OmegaVector) -> Self {
        o.0
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Series,
    Continued,
    Integral,
}

/// A numerical value with an error estimate and the method that produced it.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EvalResult {
    pub value: Complex64,
    pub abs_error: f64,
    pub method: Method,
}

impl EvalResult {
    pub fn real(&self) -> f64 {
        self.value.re
    }
}

impl Serialize for EvalResult {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("EvalResult", 4)?;
        st.serialize_field("re", &self.value.re)?;
        st.serialize_field("im", &self.value.im)?;
        st.serialize_field("abs_error", &self.abs_error)?;
        st.serialize_field("method", &self.method)?;
        st.end()
    }
}

/// `sign * exp(ln_abs)` for values that overflow `f64`, with the error
/// estimate on `ln_abs`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SignedLog {
    pub ln_abs: f64,
    pub sign: i8,
    pub ln_error: f64,
    pub method: Method,
}

impl SignedLog {
    pub fn value(&self) -> f64 {
        f64::from(self.sign) * self.ln_abs.exp()
    }

    /// `self^k` for an integer `k`.
    pub fn powi(&self, k: i64) -> SignedLog {
        SignedLog {
            ln_abs: self.ln_abs * k as f64,
            sign: if self.sign < 0 && k % 2 != 0 { -1 } else { 1 },
            ln_error: self.ln_error * k.unsigned_abs() as f64,
            method: self.method,
        }
    }

    pub fn mul(&self, other: &SignedLog) -> SignedLog {
        SignedLog {
            ln_abs: self.ln_abs + other.ln_abs,
            sign: self.sign * other.sign,
            ln_error: self.ln_error + other.ln_error,
            method: self.method,
        }
    }

    pub fn one(method: Method) -> SignedLog {
        SignedLog {
            ln_abs: 0.0,
            sign: 1,
            ln_error: 0.0,
            method,
        }
    }

    /// `|self / other - 1|`, computed without leaving the log domain.
    pub fn relative_gap(&self, other: &SignedLog) -> f64 {
        let ratio = (self.ln_abs - other.ln_abs).exp() * f64::from(self.sign * other.sign);
        (ratio - 1.0).abs()
    }

    pub fn to_eval(&self) -> EvalResult {
        let v = self.value();
        EvalResult {
            value: Complex64::new(v, 0.0),
            abs_error: v.abs() * self.ln_error.exp_m1().abs(),
            method: self.method,
        }
    }
}
