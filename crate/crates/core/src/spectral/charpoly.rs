//! Exact `det(I - uQ)` by the Samuelson-Berkowitz algorithm.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::qca::GlobalOperator;

/// Default largest N for the exact characteristic polynomial.
pub const DEFAULT_EXACT_CAP: usize = 6;

/// Integer polynomial in `u`, constant term first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntPoly(pub Vec<BigInt>);

impl IntPoly {
    pub fn from_i64(coeffs: &[i64]) -> Self {
        let mut p = IntPoly(coeffs.iter().map(|&c| BigInt::from(c)).collect());
        p.trim();
        p
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn trim(&mut self) {
        while self.0.len() > 1 && self.0.last().is_some_and(Zero::is_zero) {
            self.0.pop();
        }
    }

    pub fn eval_f64(&self, u: f64) -> f64 {
        self.0
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * u + c.to_f64().unwrap_or(f64::NAN))
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        let mut out = vec![BigInt::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        let mut p = IntPoly(out);
        p.trim();
        p
    }

    pub fn pow(&self, e: usize) -> IntPoly {
        (0..e).fold(IntPoly::from_i64(&[1]), |acc, _| acc.mul(self))
    }

    /// Exact division by a polynomial whose leading coefficient is +-1.
    /// Returns `None` if the division leaves a remainder.
    pub fn div_exact(&self, divisor: &IntPoly) -> Option<IntPoly> {
        let lead = divisor.0.last()?.clone();
        if !(lead.is_one() || lead == -BigInt::one()) {
            return None;
        }
        let dd = divisor.degree();
        if self.degree() < dd {
            return if self.0.iter().all(Zero::is_zero) {
                Some(IntPoly::from_i64(&[0]))
            } else {
                None
            };
        }
        let mut rem = self.0.clone();
        let mut quot = vec![BigInt::zero(); self.degree() - dd + 1];
        for k in (0..quot.len()).rev() {
            let q = &rem[k + dd] * &lead;
            if !q.is_zero() {
                for (j, d) in divisor.0.iter().enumerate() {
                    rem[k + j] -= &q * d;
                }
            }
            quot[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        let mut p = IntPoly(quot);
        p.trim();
        Some(p)
    }
}

impl Serialize for IntPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = s.serialize_seq(Some(self.0.len()))?;
        for c in &self.0 {
            match c.to_i64() {
                Some(v) => seq.serialize_element(&v)?,
                None => seq.serialize_element(&c.to_string())?,
            }
        }
        seq.end()
    }
}

fn integer_entries(m: &Matrix) -> Result<Vec<Vec<BigInt>>> {
    let mut rows = Vec::with_capacity(m.rows());
    for r in 0..m.rows() {
        let mut row = Vec::with_capacity(m.cols());
        for c in 0..m.cols() {
            let e = m[(r, c)];
            let (re, im) = match (e.re.as_exact(), e.im.as_exact()) {
                (Some(re), Some(im)) => (re, im),
                _ => return Err(Error::InexactEntries),
            };
            if !im.is_zero() {
                return Err(Error::InexactEntries);
            }
            if !re.is_integer() {
                return Err(Error::InvalidInput(
                    "exact characteristic polynomial needs integer entries".into(),
                ));
            }
            row.push(BigInt::from(re.to_integer()));
        }
        rows.push(row);
    }
    Ok(rows)
}

/// Coefficients of `det(lambda I - A)`, highest power first, by Berkowitz's
/// Toeplitz recursion over trailing principal submatrices.
fn berkowitz(a: &[Vec<BigInt>]) -> Vec<BigInt> {
    let n = a.len();
    if n == 0 {
        return vec![BigInt::one()];
    }
    // Characteristic polynomial of the trailing 1x1 block.
    let mut poly = vec![BigInt::one(), -a[n - 1][n - 1].clone()];
    for top in (0..n - 1).rev() {
        // Block [[alpha, R], [C, A]] with A the trailing block below `top`.
        let m = n - 1 - top;
        let sub = |i: usize, j: usize| &a[top + 1 + i][top + 1 + j];
        let row: Vec<BigInt> = (0..m).map(|j| a[top][top + 1 + j].clone()).collect();
        let col: Vec<BigInt> = (0..m).map(|i| a[top + 1 + i][top].clone()).collect();

        // First Toeplitz column: 1, -alpha, -R C, -R A C, ..., -R A^{m-1} C.
        let mut toeplitz = Vec::with_capacity(m + 2);
        toeplitz.push(BigInt::one());
        toeplitz.push(-a[top][top].clone());
        let mut v = col;
        for k in 0..m {
            let rc: BigInt = row
                .iter()
                .zip(&v)
                .filter(|(r, x)| !r.is_zero() && !x.is_zero())
                .map(|(r, x)| r * x)
                .sum();
            toeplitz.push(-rc);
            if k + 1 < m {
                v = (0..m)
                    .map(|i| {
                        (0..m)
                            .filter(|&j| !sub(i, j).is_zero() && !v[j].is_zero())
                            .map(|j| sub(i, j) * &v[j])
                            .sum()
                    })
                    .collect();
            }
        }

        let mut next = vec![BigInt::zero(); m + 2];
        for (i, out) in next.iter_mut().enumerate() {
            for (j, p) in poly.iter().enumerate().take(i + 1) {
                if !p.is_zero() && !toeplitz[i - j].is_zero() {
                    *out += &toeplitz[i - j] * p;
                }
            }
        }
        poly = next;
    }
    poly
}

/// `det(I - uM)` for a square integer matrix, constant term first.
pub fn reciprocal_char_poly(m: &Matrix) -> Result<IntPoly> {
    if !m.is_square() {
        return Err(Error::InvalidInput("matrix is not square".into()));
    }
    // Coefficient of u^k in det(I - uM) is the coefficient of lambda^{n-k}
    // in det(lambda I - M), i.e. the Berkowitz output read top-down.
    let mut p = IntPoly(berkowitz(&integer_entries(m)?));
    p.trim();
    Ok(p)
}

pub fn exact_char_poly(global: &GlobalOperator) -> Result<IntPoly> {
    exact_char_poly_capped(global, DEFAULT_EXACT_CAP)
}

pub fn exact_char_poly_capped(global: &GlobalOperator, cap: usize) -> Result<IntPoly> {
    if global.sites() > cap {
        return Err(Error::CapExceeded {
            what: "exact characteristic polynomial",
            n: global.sites(),
            cap,
        });
    }
    if !global.local().is_exact() {
        return Err(Error::InexactEntries);
    }
    reciprocal_char_poly(global.dense()?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;

    fn int_matrix(rows: &[&[i64]]) -> Matrix {
        Matrix::from_real_rows(
            &rows
                .iter()
                .map(|r| r.iter().map(|&v| Scalar::int(v)).collect())
                .collect::<Vec<_>>(),
        )
        .unwrap()
    }

    #[test]
    fn two_by_two() {
        let m = int_matrix(&[&[1, 2], &[3, 4]]);
        // det(I - uM) = 1 - 5u - 2u^2
        assert_eq!(
            reciprocal_char_poly(&m).unwrap(),
            IntPoly::from_i64(&[1, -5, -2])
        );
    }

    #[test]
    fn three_by_three_against_cofactor_expansion() {
        let m = int_matrix(&[&[2, -1, 0], &[1, 3, 4], &[0, 5, -2]]);
        // trace 3; sum of principal 2x2 minors (7) + (-4) + (-26) = -23; det = -54.
        // det(I - uM) = 1 - tr u + e2 u^2 - det u^3
        assert_eq!(
            reciprocal_char_poly(&m).unwrap(),
            IntPoly::from_i64(&[1, -3, -23, 54])
        );
    }

    #[test]
    fn singular_matrix_drops_degree() {
        let m = int_matrix(&[&[1, 1], &[1, 1]]);
        assert_eq!(
            reciprocal_char_poly(&m).unwrap(),
            IntPoly::from_i64(&[1, -2])
        );
    }

    #[test]
    fn float_entries_rejected() {
        let m = Matrix::from_real_rows(&[vec![Scalar::Float(0.5)]]).unwrap();
        assert_eq!(reciprocal_char_poly(&m), Err(Error::InexactEntries));
    }

    #[test]
    fn exact_division() {
        let p = IntPoly::from_i64(&[-1, 0, 1]); // u^2 - 1
        let q = p.div_exact(&IntPoly::from_i64(&[-1, 1])).unwrap();
        assert_eq!(q, IntPoly::from_i64(&[1, 1]));
        assert!(p.div_exact(&IntPoly::from_i64(&[2, 1])).is_none());
    }
}
