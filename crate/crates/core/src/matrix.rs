//! Dense row-major matrices over [`Entry`], plus conversions to `nalgebra`
//! for the floating-point kernels.

use nalgebra::DMatrix;
use num_complex::{Complex, Complex64};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{entry_is_exact, entry_to_c64, Entry, Scalar};

#[derive(Clone, Debug, PartialEq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Entry>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Entry::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Entry::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Entry) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Real matrix from row slices of scalars.
    pub fn from_real_rows(rows: &[Vec<Scalar>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::InvalidInput("ragged rows".into()));
        }
        Ok(Matrix::from_fn(rows.len(), cols, |r, c| {
            Complex::new(rows[r][c], Scalar::zero())
        }))
    }

    pub fn from_c64(m: &DMatrix<Complex64>) -> Self {
        Matrix::from_fn(m.nrows(), m.ncols(), |r, c| {
            let z = m[(r, c)];
            Complex::new(Scalar::Float(z.re), Scalar::Float(z.im))
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[Entry] {
        &self.data
    }

    pub fn is_exact(&self) -> bool {
        self.data.iter().all(entry_is_exact)
    }

    pub fn is_real(&self) -> bool {
        self.data.iter().all(|e| e.im.is_zero())
    }

    pub fn mul(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                actual: rhs.rows,
            });
        }
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] = out[(i, j)] + a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn kron(&self, rhs: &Matrix) -> Matrix {
        Matrix::from_fn(self.rows * rhs.rows, self.cols * rhs.cols, |r, c| {
            self[(r / rhs.rows, c / rhs.cols)] * rhs[(r % rhs.rows, c % rhs.cols)]
        })
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |r, c| self[(c, r)])
    }

    pub fn apply(&self, v: &[Entry]) -> Result<Vec<Entry>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                actual: v.len(),
            });
        }
        Ok((0..self.rows)
            .map(|r| {
                (0..self.cols).fold(Entry::zero(), |acc, c| {
                    let a = self[(r, c)];
                    if a.is_zero() || v[c].is_zero() {
                        acc
                    } else {
                        acc + a * v[c]
                    }
                })
            })
            .collect())
    }

    pub fn to_c64(&self) -> DMatrix<Complex64> {
        DMatrix::from_fn(self.rows, self.cols, |r, c| entry_to_c64(&self[(r, c)]))
    }

    /// Real part as a float matrix; `None` if any imaginary part is nonzero.
    pub fn to_real_f64(&self) -> Option<DMatrix<f64>> {
        if !self.is_real() {
            return None;
        }
        Some(DMatrix::from_fn(self.rows, self.cols, |r, c| {
            self[(r, c)].re.to_f64()
        }))
    }

    pub fn max_abs_diff(&self, other: &Matrix) -> f64 {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (entry_to_c64(a) - entry_to_c64(b)).norm())
            .fold(0.0, f64::max)
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Entry;
    fn index(&self, (r, c): (usize, usize)) -> &Entry {
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Entry {
        &mut self.data[r * self.cols + c]
    }
}

/// Wire form: `{ "rows": r, "cols": c, "entries": [[re, im], ...] }`, row-major,
/// each part either a JSON number or `{ "num": p, "den": q }`.
#[derive(Serialize, Deserialize)]
struct MatrixRepr {
    rows: usize,
    cols: usize,
    entries: Vec<[Scalar; 2]>,
}

impl Serialize for Matrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MatrixRepr {
            rows: self.rows,
            cols: self.cols,
            entries: self.data.iter().map(|e| [e.re, e.im]).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Matrix {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = MatrixRepr::deserialize(d)?;
        if repr.entries.len() != repr.rows * repr.cols {
            return Err(serde::de::Error::custom(format!(
                "expected {} entries for a {}x{} matrix, found {}",
                repr.rows * repr.cols,
                repr.rows,
                repr.cols,
                repr.entries.len()
            )));
        }
        Ok(Matrix {
            rows: repr.rows,
            cols: repr.cols,
            data: repr
                .entries
                .into_iter()
                .map(|[re, im]| Complex::new(re, im))
                .collect(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kron_with_identity_blocks() {
        let a = Matrix::from_real_rows(&[
            vec![Scalar::int(1), Scalar::int(2)],
            vec![Scalar::int(3), Scalar::int(4)],
        ])
        .unwrap();
        let k = Matrix::identity(2).kron(&a);
        assert_eq!(k[(2, 3)], a[(0, 1)]);
        assert!(k[(0, 2)].is_zero());
        assert!(k.is_exact());
    }

    #[test]
    fn json_roundtrip_keeps_exactness() {
        let m = Matrix::from_real_rows(&[
            vec![Scalar::int(0), Scalar::ratio(1, 3)],
            vec![Scalar::Float(0.5), Scalar::int(-1)],
        ])
        .unwrap();
        let text = serde_json::to_string(&m).unwrap();
        assert!(text.contains(r#"{"num":1,"den":3}"#));
        let back: Matrix = serde_json::from_str(&text).unwrap();
        assert_eq!(back, m);
        assert!(back[(0, 1)].re.is_exact());
        assert!(!back[(1, 0)].re.is_exact());
    }

    #[test]
    fn json_rejects_wrong_entry_count() {
        let bad = r#"{"rows":2,"cols":2,"entries":[[1,0],[0,0],[0,0]]}"#;
        assert!(serde_json::from_str::<Matrix>(bad).is_err());
    }
}
