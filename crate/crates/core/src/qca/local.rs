use num_traits::Zero;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::{entry, Angle, Entry, Scalar};

/// The 4x4 nearest-neighbour transition-weight matrix.
///
/// Rows are indexed by the output pair `kl`, columns by the input pair `ij`,
/// both in the basis order `00, 01, 10, 11` (left site is the high bit). The
/// entry at row `kl`, column `ij` is the weight `a^{ij}_{kl}` of the
/// transition `(i, j) -> (k, l)`. The right site never changes, so every
/// entry with `j != l` is zero.
#[derive(Clone, Debug, PartialEq)]
pub struct LocalOperator {
    matrix: Matrix,
}

#[inline]
pub(crate) fn pair_index(left: u8, right: u8) -> usize {
    usize::from(left) * 2 + usize::from(right)
}

impl LocalOperator {
    /// Wrap a 4x4 matrix, rejecting it unless the eight entries that would
    /// change the right site are exactly zero.
    pub fn new(matrix: Matrix) -> Result<Self> {
        if matrix.rows() != 4 || matrix.cols() != 4 {
            return Err(Error::InvalidInput(format!(
                "local operator must be 4x4, got {}x{}",
                matrix.rows(),
                matrix.cols()
            )));
        }
        for (row, col) in forbidden_positions() {
            if !matrix[(row, col)].is_zero() {
                return Err(Error::InvalidInput(format!(
                    "entry ({row}, {col}) changes the right site but is nonzero"
                )));
            }
        }
        Ok(LocalOperator { matrix })
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    /// `a^{ij}_{kl}`.
    pub fn weight(&self, i: u8, j: u8, k: u8, l: u8) -> Entry {
        self.matrix[(pair_index(k, l), pair_index(i, j))]
    }

    pub fn is_exact(&self) -> bool {
        self.matrix.is_exact()
    }

    pub fn identity() -> Self {
        LocalOperator {
            matrix: Matrix::identity(4),
        }
    }

    /// Build from the eight allowed weights, column by column:
    /// `[a00_00, a00_10, a01_01, a01_11, a10_00, a10_10, a11_01, a11_11]`.
    pub fn from_weights(w: [Scalar; 8]) -> Self {
        let mut m = Matrix::zeros(4, 4);
        let [a0000, a0010, a0101, a0111, a1000, a1010, a1101, a1111] = w;
        m[(0, 0)] = entry(a0000);
        m[(2, 0)] = entry(a0010);
        m[(1, 1)] = entry(a0101);
        m[(3, 1)] = entry(a0111);
        m[(0, 2)] = entry(a1000);
        m[(2, 2)] = entry(a1010);
        m[(1, 3)] = entry(a1101);
        m[(3, 3)] = entry(a1111);
        LocalOperator { matrix: m }
    }
}

/// The `(row, col)` positions where `j != l`.
pub fn forbidden_positions() -> impl Iterator<Item = (usize, usize)> {
    (0..4)
        .flat_map(|row| (0..4).map(move |col| (row, col)))
        .filter(|(row, col)| row & 1 != col & 1)
}

/// First rotation family: independent rotations of the left site, one for
/// each right-site value.
pub fn local_qca1(xi1: impl Into<Angle>, xi2: impl Into<Angle>) -> LocalOperator {
    let (a, b) = (xi1.into(), xi2.into());
    let (c1, s1, c2, s2) = (a.cos(), a.sin(), b.cos(), b.sin());
    LocalOperator::from_weights([c1, s1, c2, s2, -s1, c1, -s2, c2])
}

/// Second family; `(0, 0)` is Wolfram's Rule 90.
pub fn local_qca2(xi1: impl Into<Angle>, xi2: impl Into<Angle>) -> LocalOperator {
    let (a, b) = (xi1.into(), xi2.into());
    let (c1, s1, c2, s2) = (a.cos(), a.sin(), b.cos(), b.sin());
    LocalOperator::from_weights([c1, s1, -s2, c2, -s1, c1, c2, s2])
}

/// `sigma(xi) = [[-sin xi, cos xi], [cos xi, sin xi]]`, an involution.
pub fn sigma(xi: impl Into<Angle>) -> Matrix {
    let xi = xi.into();
    let (c, s) = (xi.cos(), xi.sin());
    Matrix::from_real_rows(&[vec![-s, c], vec![c, s]]).expect("2x2")
}

/// Tensor-type model `I2 (x) E00 + sigma(xi) (x) E11`: the left site is
/// untouched when the right site is 0 and mixed by `sigma(xi)` when it is 1.
pub fn local_tensor(xi: impl Into<Angle>) -> LocalOperator {
    let one = Scalar::int(1);
    let zero = Scalar::int(0);
    let e00 = Matrix::from_real_rows(&[vec![one, zero], vec![zero, zero]]).expect("2x2");
    let e11 = Matrix::from_real_rows(&[vec![zero, zero], vec![zero, one]]).expect("2x2");
    let a = Matrix::identity(2).kron(&e00);
    let b = sigma(xi).kron(&e11);
    let m = Matrix::from_fn(4, 4, |r, c| a[(r, c)] + b[(r, c)]);
    LocalOperator::new(m).expect("tensor model preserves the right site")
}

/// Domany-Kinzel-type stochastic rule: a vacant pair stays vacant, a pair
/// with one particle produces one at the left site with probability `p1`,
/// a full pair with probability `p2`.
pub fn local_domany_kinzel(p1: f64, p2: f64) -> LocalOperator {
    let f = Scalar::Float;
    LocalOperator::from_weights([
        Scalar::int(1),
        Scalar::int(0),
        f(1.0 - p1),
        f(p1),
        f(1.0 - p1),
        f(p1),
        f(1.0 - p2),
        f(p2),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, PI};

    fn assert_right_site_preserved(q: &LocalOperator) {
        for (r, c) in forbidden_positions() {
            assert!(q.matrix()[(r, c)].is_zero(), "({r},{c})");
        }
    }

    #[test]
    fn forbidden_positions_are_eight() {
        assert_eq!(forbidden_positions().count(), 8);
    }

    #[test]
    fn qca1_at_zero_is_identity() {
        let q = local_qca1(0.0, 0.0);
        assert_eq!(q, LocalOperator::identity());
        assert!(q.is_exact());
    }

    #[test]
    fn qca1_quarter_turns() {
        let q = local_qca1(FRAC_PI_2, FRAC_PI_2);
        assert!(q.is_exact());
        assert_eq!(q.weight(0, 0, 0, 0).re, Scalar::int(0));
        assert_eq!(q.weight(0, 0, 1, 0).re, Scalar::int(1));
        assert_eq!(q.weight(1, 0, 0, 0).re, Scalar::int(-1));
    }

    #[test]
    fn qca2_rule90() {
        let q = local_qca2(0.0, 0.0);
        // Rule 90 on the left site: k = i xor j.
        for i in 0..2u8 {
            for j in 0..2u8 {
                for k in 0..2u8 {
                    let expected = i64::from(k == i ^ j);
                    assert_eq!(q.weight(i, j, k, j).re, Scalar::int(expected));
                }
            }
        }
    }

    #[test]
    fn tensor_quarter_turn_is_diagonal() {
        let q = local_tensor(FRAC_PI_2);
        let diag: Vec<_> = (0..4).map(|i| q.matrix()[(i, i)].re).collect();
        assert_eq!(diag, [1, -1, 1, 1].map(Scalar::int));
        assert_eq!(q, local_qca2(0.0, FRAC_PI_2));
    }

    #[test]
    fn tensor_equals_qca2_with_zero_first_angle() {
        for k in 0..8 {
            let xi = 0.1 + k as f64 * PI / 4.3;
            let t = local_tensor(xi);
            let q = local_qca2(0.0, xi);
            assert!(t.matrix().max_abs_diff(q.matrix()) < 1e-15, "xi = {xi}");
        }
    }

    #[test]
    fn sigma_is_involution() {
        for xi in [0.0, 0.3, FRAC_PI_2, 2.0, 5.5] {
            let s = sigma(xi);
            let sq = s.mul(&s).unwrap();
            assert!(sq.max_abs_diff(&Matrix::identity(2)) < 1e-15);
        }
    }

    #[test]
    fn constructors_preserve_right_site() {
        for xi in [0.0, 0.7, FRAC_PI_2, 4.0] {
            assert_right_site_preserved(&local_qca1(xi, 1.0 - xi));
            assert_right_site_preserved(&local_qca2(xi, xi * 0.5));
            assert_right_site_preserved(&local_tensor(xi));
        }
        assert_right_site_preserved(&local_domany_kinzel(0.3, 0.8));
    }

    #[test]
    fn rejects_right_site_flip() {
        let mut m = Matrix::identity(4);
        m[(1, 0)] = entry(Scalar::int(1));
        assert!(LocalOperator::new(m).is_err());
    }
}
