use std::f64::consts::FRAC_PI_2;

use num_complex::Complex64;
use num_traits::{One, Zero};
use proptest::prelude::*;
use qca_zeta::matrix::Matrix;
use qca_zeta::qca::{
    assemble_global, classify, local_domany_kinzel, local_qca1, local_qca2, local_tensor,
    Configuration, LocalOperator, StateVector, DEFAULT_CLASSIFY_TOL,
};
use qca_zeta::scalar::{entry_to_c64, Entry, Scalar};

fn random_local(w: [f64; 8]) -> LocalOperator {
    LocalOperator::from_weights(w.map(Scalar::Float))
}

fn layer_product(local: &LocalOperator, n: usize) -> Matrix {
    let g = assemble_global(local, n).unwrap();
    g.layers()
        .into_iter()
        .fold(Matrix::identity(1 << n), |acc, l| {
            acc.mul(&l.dense(local, n)).unwrap()
        })
}

fn angle() -> impl Strategy<Value = f64> {
    0.0..std::f64::consts::TAU
}

fn weights() -> impl Strategy<Value = [f64; 8]> {
    prop::array::uniform8(-1.0..1.0f64)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn unitary_locals_give_unitary_globals(x1 in angle(), x2 in angle(), second in any::<bool>(), n in 2usize..=5) {
        let q = if second { local_qca2(x1, x2) } else { local_qca1(x1, x2) };
        let local_class = classify(q.matrix(), DEFAULT_CLASSIFY_TOL);
        prop_assert!(local_class.orthogonal);
        let g = assemble_global(&q, n).unwrap();
        let c = classify(g.dense().unwrap(), DEFAULT_CLASSIFY_TOL);
        prop_assert!(c.unitary && c.orthogonal);
    }

    #[test]
    fn stochastic_locals_give_stochastic_globals(p1 in 0.0..=1.0f64, p2 in 0.0..=1.0f64, n in 2usize..=5) {
        let q = local_domany_kinzel(p1, p2);
        prop_assert!(classify(q.matrix(), DEFAULT_CLASSIFY_TOL).transposed_stochastic);
        let g = assemble_global(&q, n).unwrap();
        prop_assert!(classify(g.dense().unwrap(), DEFAULT_CLASSIFY_TOL).transposed_stochastic);
    }

    #[test]
    fn layers_match_dense(w in weights(), n in 2usize..=6) {
        let q = random_local(w);
        let g = assemble_global(&q, n).unwrap();
        prop_assert!(layer_product(&q, n).max_abs_diff(g.dense().unwrap()) < 1e-12);
    }

    #[test]
    fn transition_weights_match_dense_entries(w in weights()) {
        let q = random_local(w);
        let g = assemble_global(&q, 3).unwrap();
        let dense = g.dense().unwrap();
        for from in Configuration::all(3) {
            for to in Configuration::all(3) {
                let tw = entry_to_c64(&g.transition_weight(from, to).unwrap());
                let d = entry_to_c64(&dense[(to.index(), from.index())]);
                prop_assert!((tw - d).norm() < 1e-12, "{:?} -> {:?}", from, to);
            }
        }
    }

    #[test]
    fn evolution_preserves_norm(x1 in angle(), x2 in angle(), start in 0u64..32, steps in 0usize..6) {
        let g = assemble_global(&local_qca2(x1, x2), 5).unwrap();
        let s = g.evolve(&StateVector::basis(Configuration::from_index(start, 5).unwrap()), steps).unwrap();
        prop_assert!((s.norm() - 1.0).abs() < 1e-12);
    }
}

/// The four branches of `|001>` at three sites, each a product of two
/// local weights.
fn expected_branches(q: &LocalOperator) -> Vec<(u64, Entry)> {
    let a = |i, j, k, l| q.weight(i, j, k, l);
    vec![
        (0b001, a(0, 0, 0, 0) * a(0, 1, 0, 1)),
        (0b011, a(0, 0, 0, 0) * a(0, 1, 1, 1)),
        (0b101, a(0, 0, 1, 0) * a(0, 1, 0, 1)),
        (0b111, a(0, 0, 1, 0) * a(0, 1, 1, 1)),
    ]
}

#[test]
fn three_site_branching_exact() {
    let q = local_tensor(FRAC_PI_2);
    let g = assemble_global(&q, 3).unwrap();
    let start = Configuration::from_bits(&[0, 0, 1]).unwrap();
    let out = g.evolve(&StateVector::basis(start), 1).unwrap();
    let expected = expected_branches(&q);
    for c in Configuration::all(3) {
        let want = expected
            .iter()
            .find(|(idx, _)| *idx as usize == c.index())
            .map(|(_, v)| *v)
            .unwrap_or_else(Entry::zero);
        assert_eq!(out.amplitude(c), want, "{c:?}");
    }
    // sigma(pi/2) is diagonal, so the basis state only picks up a sign.
    assert_eq!(out.support().len(), 1);
    assert_eq!(out.support()[0].0, start);
    assert!((-out.amplitude(start)).is_one());
}

#[test]
fn three_site_branching_random() {
    let weights = [
        [0.3, -0.7, 0.9, 0.2, -0.4, 0.6, 0.1, -0.8],
        [-0.5, 0.25, 0.75, -0.125, 0.5, 0.9, -0.3, 0.4],
    ];
    for w in weights {
        let q = random_local(w);
        let g = assemble_global(&q, 3).unwrap();
        let out = g
            .evolve(
                &StateVector::basis(Configuration::from_index(1, 3).unwrap()),
                1,
            )
            .unwrap();
        let mut seen = Complex64::zero();
        for (idx, v) in expected_branches(&q) {
            let c = Configuration::from_index(idx, 3).unwrap();
            let d = entry_to_c64(&out.amplitude(c)) - entry_to_c64(&v);
            assert!(d.norm() < 1e-12);
            seen += entry_to_c64(&out.amplitude(c)).norm_sqr();
        }
        let total: f64 = out.to_c64().iter().map(|z| z.norm_sqr()).sum();
        assert!(
            (total - seen.re).abs() < 1e-12,
            "amplitude outside the four branches"
        );
    }
}

#[test]
fn quarter_turn_operators_stay_exact() {
    for k1 in 0..4 {
        for k2 in 0..4 {
            let q = local_qca1(k1 as f64 * FRAC_PI_2, k2 as f64 * FRAC_PI_2);
            let g = assemble_global(&q, 4).unwrap();
            assert!(g.dense().unwrap().is_exact());
        }
    }
}
