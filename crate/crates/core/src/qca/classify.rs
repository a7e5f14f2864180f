use serde::{Deserialize, Serialize};

use crate::matrix::Matrix;

pub const DEFAULT_CLASSIFY_TOL: f64 = 1e-10;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct OperatorClass {
    pub unitary: bool,
    pub orthogonal: bool,
    pub transposed_stochastic: bool,
    pub permutation: bool,
    pub tol: f64,
}

/// Classify a square matrix.
///
/// * unitary: `max |M* M - I| < tol`
/// * orthogonal: unitary with every imaginary part below `tol`
/// * transposed stochastic: real entries in `[0, 1]`, every column summing to 1
/// * permutation: entries within `tol` of 0 or 1, one 1 per row and column
///
/// Snapping to {0, 1} is used only for the permutation test.
pub fn classify(m: &Matrix, tol: f64) -> OperatorClass {
    assert!(m.is_square(), "classify needs a square matrix");
    let a = m.to_c64();
    let n = a.nrows();

    let gram = a.adjoint() * &a;
    let mut defect: f64 = 0.0;
    for r in 0..n {
        for c in 0..n {
            let target = if r == c { 1.0 } else { 0.0 };
            defect = defect.max((gram[(r, c)].re - target).abs().max(gram[(r, c)].im.abs()));
        }
    }
    let unitary = defect < tol;
    let real = a.iter().all(|z| z.im.abs() < tol);
    let orthogonal = unitary && real;

    let in_unit_interval = a.iter().all(|z| z.re >= -tol && z.re <= 1.0 + tol);
    let columns_sum_to_one = (0..n).all(|c| {
        let s: f64 = (0..n).map(|r| a[(r, c)].re).sum();
        (s - 1.0).abs() < tol
    });
    let transposed_stochastic = real && in_unit_interval && columns_sum_to_one;

    let zero_one = a
        .iter()
        .all(|z| z.im.abs() < tol && (z.re.abs() < tol || (z.re - 1.0).abs() < tol));
    let ones = |it: &mut dyn Iterator<Item = f64>| it.filter(|x| (x - 1.0).abs() < tol).count();
    let one_per_line = (0..n).all(|i| {
        ones(&mut (0..n).map(|j| a[(i, j)].re)) == 1 && ones(&mut (0..n).map(|j| a[(j, i)].re)) == 1
    });
    let permutation = zero_one && one_per_line && orthogonal && transposed_stochastic;

    OperatorClass {
        unitary,
        orthogonal,
        transposed_stochastic,
        permutation,
        tol,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qca::local::{local_domany_kinzel, local_qca1, local_qca2, local_tensor};
    use crate::scalar::Scalar;
    use num_complex::Complex;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_3};

    #[test]
    fn rule90_is_everything() {
        let c = classify(local_qca2(0.0, 0.0).matrix(), DEFAULT_CLASSIFY_TOL);
        assert!(c.unitary && c.orthogonal && c.transposed_stochastic && c.permutation);
    }

    #[test]
    fn tensor_quarter_turn_orthogonal_not_stochastic() {
        let c = classify(local_tensor(FRAC_PI_2).matrix(), DEFAULT_CLASSIFY_TOL);
        assert!(c.orthogonal);
        assert!(!c.transposed_stochastic);
        assert!(!c.permutation);
    }

    #[test]
    fn generic_rotation_orthogonal() {
        let q = local_qca1(FRAC_PI_3, 0.0);
        assert!(!q.is_exact());
        let m = q.matrix().to_c64();
        let defect = (m.transpose() * &m - nalgebra::DMatrix::identity(4, 4))
            .iter()
            .map(|z| z.norm())
            .fold(0.0, f64::max);
        assert!(defect < 1e-12);
        let c = classify(q.matrix(), DEFAULT_CLASSIFY_TOL);
        assert!(c.orthogonal && !c.transposed_stochastic);
    }

    #[test]
    fn qca2_quarter_turns_orthogonal_not_stochastic() {
        let c = classify(
            local_qca2(FRAC_PI_2, FRAC_PI_2).matrix(),
            DEFAULT_CLASSIFY_TOL,
        );
        assert!(c.orthogonal && !c.transposed_stochastic);
    }

    #[test]
    fn domany_kinzel_stochastic_not_unitary() {
        let c = classify(local_domany_kinzel(0.3, 0.6).matrix(), DEFAULT_CLASSIFY_TOL);
        assert!(c.transposed_stochastic);
        assert!(!c.unitary && !c.orthogonal && !c.permutation);
    }

    #[test]
    fn complex_phase_unitary_not_orthogonal() {
        let mut m = Matrix::identity(2);
        m[(1, 1)] = Complex::new(Scalar::int(0), Scalar::int(1));
        let c = classify(&m, DEFAULT_CLASSIFY_TOL);
        assert!(c.unitary && !c.orthogonal);
    }
}
