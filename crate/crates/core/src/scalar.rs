//! Matrix entry arithmetic.
//!
//! Entries of the local operators are sines and cosines of angles. When every
//! angle is a multiple of pi/2 those values lie in {-1, 0, 1}, and the whole
//! pipeline (global operator, characteristic polynomial, evolution) can stay
//! in exact rational arithmetic. Any other angle produces floats, and mixing
//! the two demotes to float.

use std::cmp::Ordering;
use std::f64::consts::{FRAC_PI_2, TAU};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Rem, Sub};

use num_complex::{Complex, Complex64};
use num_rational::Rational64;
use num_traits::{CheckedAdd, CheckedDiv, CheckedMul, CheckedSub, Num, One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A real matrix entry: exact rational or double.
#[derive(Clone, Copy, Debug)]
pub enum Scalar {
    Exact(Rational64),
    Float(f64),
}

/// A complex matrix entry whose real and imaginary parts are [`Scalar`]s.
pub type Entry = Complex<Scalar>;

impl Scalar {
    pub fn int(v: i64) -> Self {
        Scalar::Exact(Rational64::from_integer(v))
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        Scalar::Exact(Rational64::new(num, den))
    }

    pub fn to_f64(self) -> f64 {
        match self {
            Scalar::Exact(r) => *r.numer() as f64 / *r.denom() as f64,
            Scalar::Float(f) => f,
        }
    }

    pub fn is_exact(self) -> bool {
        matches!(self, Scalar::Exact(_))
    }

    pub fn as_exact(self) -> Option<Rational64> {
        match self {
            Scalar::Exact(r) => Some(r),
            Scalar::Float(_) => None,
        }
    }

    pub fn abs(self) -> Self {
        match self {
            Scalar::Exact(r) => Scalar::Exact(if r < Rational64::zero() { -r } else { r }),
            Scalar::Float(f) => Scalar::Float(f.abs()),
        }
    }

    /// Apply an exact operation, falling back to floats when it overflows.
    fn combine(
        self,
        rhs: Self,
        exact: impl FnOnce(&Rational64, &Rational64) -> Option<Rational64>,
        float: impl FnOnce(f64, f64) -> f64,
    ) -> Self {
        if let (Scalar::Exact(a), Scalar::Exact(b)) = (self, rhs) {
            if let Some(r) = exact(&a, &b) {
                return Scalar::Exact(r);
            }
        }
        Scalar::Float(float(self.to_f64(), rhs.to_f64()))
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Scalar::Exact(a), Scalar::Exact(b)) => a == b,
            _ => self.to_f64() == other.to_f64(),
        }
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match (self, other) {
            (Scalar::Exact(a), Scalar::Exact(b)) => a.partial_cmp(b),
            _ => self.to_f64().partial_cmp(&other.to_f64()),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Exact(r) => write!(f, "{r}"),
            Scalar::Float(x) => write!(f, "{x}"),
        }
    }
}

impl From<i64> for Scalar {
    fn from(v: i64) -> Self {
        Scalar::int(v)
    }
}

impl From<f64> for Scalar {
    fn from(v: f64) -> Self {
        Scalar::Float(v)
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Self) -> Self {
        self.combine(rhs, |a, b| a.checked_add(b), |a, b| a + b)
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Self) -> Self {
        self.combine(rhs, |a, b| a.checked_sub(b), |a, b| a - b)
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Self) -> Self {
        // Zero times anything stays exact zero so that structural zeros survive
        // mixed arithmetic.
        if self.as_exact().is_some_and(|r| r.is_zero())
            || rhs.as_exact().is_some_and(|r| r.is_zero())
        {
            return Scalar::int(0);
        }
        self.combine(rhs, |a, b| a.checked_mul(b), |a, b| a * b)
    }
}

impl Div for Scalar {
    type Output = Scalar;
    fn div(self, rhs: Self) -> Self {
        self.combine(rhs, |a, b| a.checked_div(b), |a, b| a / b)
    }
}

impl Rem for Scalar {
    type Output = Scalar;
    fn rem(self, rhs: Self) -> Self {
        self.combine(
            rhs,
            |a, b| if b.is_zero() { None } else { Some(a % b) },
            |a, b| a % b,
        )
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Self {
        match self {
            Scalar::Exact(r) => Scalar::Exact(-r),
            Scalar::Float(f) => Scalar::Float(-f),
        }
    }
}

impl Zero for Scalar {
    fn zero() -> Self {
        Scalar::int(0)
    }
    fn is_zero(&self) -> bool {
        match self {
            Scalar::Exact(r) => r.is_zero(),
            Scalar::Float(f) => *f == 0.0,
        }
    }
}

impl One for Scalar {
    fn one() -> Self {
        Scalar::int(1)
    }
}

impl Num for Scalar {
    type FromStrRadixErr = String;

    fn from_str_radix(s: &str, radix: u32) -> Result<Self, Self::FromStrRadixErr> {
        if let Ok(r) = Rational64::from_str_radix(s, radix) {
            return Ok(Scalar::Exact(r));
        }
        if radix == 10 {
            return s
                .parse::<f64>()
                .map(Scalar::Float)
                .map_err(|e| e.to_string());
        }
        Err(format!("cannot parse {s:?} in radix {radix}"))
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum ScalarRepr {
    Exact { num: i64, den: i64 },
    Float(f64),
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Scalar::Exact(r) => ScalarRepr::Exact {
                num: *r.numer(),
                den: *r.denom(),
            },
            Scalar::Float(f) => ScalarRepr::Float(*f),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        match ScalarRepr::deserialize(deserializer)? {
            ScalarRepr::Exact { den: 0, .. } => Err(serde::de::Error::custom("zero denominator")),
            ScalarRepr::Exact { num, den } => Ok(Scalar::ratio(num, den)),
            ScalarRepr::Float(f) => Ok(Scalar::Float(f)),
        }
    }
}

pub fn entry(re: Scalar) -> Entry {
    Complex::new(re, Scalar::zero())
}

pub fn entry_to_c64(e: &Entry) -> Complex64 {
    Complex64::new(e.re.to_f64(), e.im.to_f64())
}

pub fn entry_is_exact(e: &Entry) -> bool {
    e.re.is_exact() && e.im.is_exact()
}

/// An angle in radians, kept exact when it is a whole number of quarter turns.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Angle {
    /// `k * pi/2`, with `k` reduced mod 4.
    QuarterTurns(u8),
    Radians(f64),
}

impl Angle {
    /// Distance from a quarter-turn multiple below which a float angle is
    /// treated as exact.
    pub const SNAP: f64 = 1e-12;

    pub fn radians(self) -> f64 {
        match self {
            Angle::QuarterTurns(k) => f64::from(k) * FRAC_PI_2,
            Angle::Radians(x) => x,
        }
    }

    /// Snap to a quarter-turn multiple when within `tol`, otherwise keep the
    /// float value reduced to `[0, 2pi)`.
    pub fn from_radians_snapped(x: f64, tol: f64) -> Self {
        let reduced = x.rem_euclid(TAU);
        let k = (reduced / FRAC_PI_2).round();
        if (reduced - k * FRAC_PI_2).abs() <= tol {
            Angle::QuarterTurns((k as i64).rem_euclid(4) as u8)
        } else {
            Angle::Radians(reduced)
        }
    }

    pub fn is_exact(self) -> bool {
        matches!(self, Angle::QuarterTurns(_))
    }

    pub fn sin(self) -> Scalar {
        match self {
            Angle::QuarterTurns(k) => Scalar::int([0, 1, 0, -1][usize::from(k % 4)]),
            Angle::Radians(x) => Scalar::Float(x.sin()),
        }
    }

    pub fn cos(self) -> Scalar {
        match self {
            Angle::QuarterTurns(k) => Scalar::int([1, 0, -1, 0][usize::from(k % 4)]),
            Angle::Radians(x) => Scalar::Float(x.cos()),
        }
    }
}

impl From<f64> for Angle {
    fn from(x: f64) -> Self {
        Angle::from_radians_snapped(x, Angle::SNAP)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_closed_under_ring_ops() {
        let a = Scalar::int(-1);
        let b = Scalar::ratio(1, 2);
        assert!((a * b + b).is_exact());
        assert_eq!(a * a, Scalar::int(1));
    }

    #[test]
    fn mixed_demotes_to_float() {
        let s = Scalar::int(1) + Scalar::Float(0.5);
        assert!(!s.is_exact());
        assert_eq!(s.to_f64(), 1.5);
    }

    #[test]
    fn exact_zero_absorbs_float() {
        assert!((Scalar::int(0) * Scalar::Float(0.3)).is_exact());
    }

    #[test]
    fn overflow_demotes() {
        let big = Scalar::int(i64::MAX / 2);
        let s = big * Scalar::int(4);
        assert!(!s.is_exact());
    }

    #[test]
    fn quarter_turn_detection() {
        assert_eq!(Angle::from(FRAC_PI_2), Angle::QuarterTurns(1));
        assert_eq!(Angle::from(3.0 * FRAC_PI_2), Angle::QuarterTurns(3));
        assert_eq!(Angle::from(TAU), Angle::QuarterTurns(0));
        assert!(matches!(Angle::from(1.0), Angle::Radians(_)));
        assert_eq!(Angle::QuarterTurns(1).sin(), Scalar::int(1));
        assert_eq!(Angle::QuarterTurns(2).cos(), Scalar::int(-1));
    }

    #[test]
    fn json_forms() {
        let v = serde_json::to_string(&[Scalar::ratio(-1, 2), Scalar::Float(0.25)]).unwrap();
        assert_eq!(v, r#"[{"num":-1,"den":2},0.25]"#);
        let back: Vec<Scalar> = serde_json::from_str(&v).unwrap();
        assert_eq!(back[0], Scalar::ratio(-1, 2));
        assert!(back[0].is_exact());
    }
}
