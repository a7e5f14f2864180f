use std::f64::consts::PI;

use num_complex::Complex64;
use proptest::prelude::*;
use qca_zeta::abszeta::{
    functional_eq_residual, ln_multi_gamma, ln_multi_sine, mellin_z, multi_gamma,
    multi_hurwitz_continued, multi_hurwitz_series, theorem1_expand, AbsExpansion, OmegaVector,
};
use qca_zeta::spectral::predicted_multiplicities;
use qca_zeta::zeta::{tensor_case_form, CanonicalAbsForm};

const ZETA_3: f64 = 1.202_056_903_159_594_285_399_738_161_511_449_990_8;

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

fn expansion(m: Vec<u64>, n: Vec<u64>, kappa: i8) -> AbsExpansion {
    theorem1_expand(&CanonicalAbsForm::new(kappa, 0, m, n).unwrap(), 0).unwrap()
}

fn rel(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / b.norm().max(1e-300)
}

/// Direct lattice sum over `n_i < cutoff`.
fn brute_force_zeta2(s: f64, x: f64, w: (u64, u64), cutoff: u64) -> f64 {
    let mut total = 0.0;
    for i in (0..cutoff).rev() {
        for j in (0..cutoff).rev() {
            total += (x + (i * w.0 + j * w.1) as f64).powf(-s);
        }
    }
    total
}

#[test]
fn series_matches_brute_force() {
    for (x, w) in [(0.5, (1, 1)), (1.3, (1, 2)), (2.0, (2, 3))] {
        let omega = OmegaVector::new(vec![w.0, w.1]).unwrap();
        let got = multi_hurwitz_series(c(8.0), x, &omega, 1e-12)
            .unwrap()
            .value
            .re;
        let want = brute_force_zeta2(8.0, x, w, 40);
        assert!(
            (got - want).abs() < 1e-9 * want,
            "x = {x}, w = {w:?}: {got} vs {want}"
        );
    }
}

#[test]
fn collapsed_double_zeta() {
    // zeta_2(3, 5, (1,1)) = sum (k+1)(k+5)^{-3} = zeta_H(2,5) - 4 zeta_H(3,5).
    let h2 = PI * PI / 6.0 - (1.0 + 1.0 / 4.0 + 1.0 / 9.0 + 1.0 / 16.0);
    let h3 = ZETA_3 - (1.0 + 1.0 / 8.0 + 1.0 / 27.0 + 1.0 / 64.0);
    let want = h2 - 4.0 * h3;
    let omega = OmegaVector::new(vec![1, 1]).unwrap();
    let series = multi_hurwitz_series(c(3.0), 5.0, &omega, 1e-12)
        .unwrap()
        .value
        .re;
    let continued = multi_hurwitz_continued(c(3.0), 5.0, &omega)
        .unwrap()
        .value
        .re;
    assert!((series - want).abs() < 1e-12);
    assert!((continued - want).abs() < 1e-10);
}

#[test]
fn lerch_formula() {
    let omega = OmegaVector::new(vec![1]).unwrap();
    // Gamma(x) / sqrt(2 pi) at x = 0.5, 1, 2.5.
    let gammas = [PI.sqrt(), 1.0, 0.75 * PI.sqrt()];
    for (x, g) in [0.5, 1.0, 2.5].into_iter().zip(gammas) {
        let got = multi_gamma(x, &omega).unwrap().value.re;
        assert!((got - g / (2.0 * PI).sqrt()).abs() < 1e-7, "x = {x}");
    }
}

#[test]
fn zeta_at_zero() {
    let omega = OmegaVector::new(vec![1]).unwrap();
    for x in [0.25, 1.0, 2.5, 7.0] {
        let got = multi_hurwitz_continued(c(0.0), x, &omega).unwrap().value.re;
        assert!((got - (0.5 - x)).abs() < 1e-8, "x = {x}");
    }
}

#[test]
fn mellin_matches_subset_sum() {
    let cases = [
        (expansion(vec![], vec![1, 1], 1), c(3.0), c(2.0)),
        (
            expansion(vec![], vec![1, 1], 1),
            Complex64::new(3.5, 0.5),
            c(4.0),
        ),
        (expansion(vec![], vec![1, 1, 2], -1), c(4.0), c(1.0)),
        (
            expansion(vec![], vec![1, 1, 2], -1),
            Complex64::new(5.0, -1.5),
            c(2.5),
        ),
        (expansion(vec![], vec![2; 4], 1), c(5.0), c(-5.0)),
        (expansion(vec![1; 4], vec![2; 10], 1), c(11.0), c(-12.0)),
    ];
    for (exp, w, s) in cases {
        let direct = mellin_z(&exp.form, w, s).unwrap().value;
        let series = exp.z_series(w, s, 1e-12).unwrap().value;
        assert!(
            (direct - series).norm() < 1e-6,
            "{} at w = {w}, s = {s}",
            exp.form
        );
    }
}

#[test]
fn first_two_forms_reduce_to_single_zetas() {
    let f1 = expansion(vec![], vec![1, 1], 1);
    let z = mellin_z(&f1.form, c(3.0), c(2.0)).unwrap().value;
    let want = multi_hurwitz_series(c(3.0), 4.0, &OmegaVector::new(vec![1, 1]).unwrap(), 1e-12)
        .unwrap()
        .value;
    assert!((z - want).norm() < 1e-6);

    let f2 = expansion(vec![], vec![1, 1, 2], -1);
    let z = mellin_z(&f2.form, c(4.0), c(1.0)).unwrap().value;
    let want = multi_hurwitz_series(
        c(4.0),
        5.0,
        &OmegaVector::new(vec![1, 1, 2]).unwrap(),
        1e-12,
    )
    .unwrap()
    .value;
    assert!((z - want).norm() < 1e-6);
}

#[test]
fn first_form_zeta_and_epsilon() {
    let f1 = expansion(vec![], vec![1, 1], 1);
    let omega = OmegaVector::new(vec![1, 1]).unwrap();
    let z = f1.ln_zeta(1.0).unwrap();
    let g = ln_multi_gamma(3.0, &omega).unwrap();
    assert!(z.relative_gap(&g) < 1e-12);
    let e = f1.ln_epsilon(0.3).unwrap();
    let s = ln_multi_sine(2.3, &omega).unwrap();
    assert!(e.relative_gap(&s) < 1e-12);
}

#[test]
fn functional_equations() {
    // (form, C); the second form's left side carries the exponent -1.
    let forms = [
        (expansion(vec![], vec![1, 1], 1), 1),
        (expansion(vec![], vec![1, 1, 2], -1), -1),
        (expansion(vec![], vec![2; 4], 1), 1),
    ];
    for (exp, sign) in &forms {
        assert_eq!(exp.sign(), *sign);
        for s in [0.3, 0.7, 1.5, 2.25, 3.1] {
            let r = functional_eq_residual(exp, s).unwrap();
            assert!(r < 1e-6, "{} at s = {s}: {r}", exp.form);
        }
    }
}

#[test]
fn tensor_expansion_term_counts() {
    for n in 1..=9 {
        let p = predicted_multiplicities(n).unwrap();
        let (_, form) = tensor_case_form(n).unwrap();
        let exp = theorem1_expand(&form, p.c_plus).unwrap();
        let a = p.c_minus.saturating_sub(p.c_plus);
        assert_eq!(exp.terms.len() as u64, 1 << a, "N = {n}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn continuation_agrees_with_series(
        w in prop::collection::vec(1u64..=4, 1..=4),
        x in 0.2..5.0f64,
        extra in 0.5..4.0f64,
        im in -2.0..2.0f64,
    ) {
        let omega = OmegaVector::new(w.clone()).unwrap();
        let s = Complex64::new(w.len() as f64 + extra, im);
        let series = multi_hurwitz_series(s, x, &omega, 1e-12).unwrap().value;
        let continued = multi_hurwitz_continued(s, x, &omega).unwrap().value;
        prop_assert!(rel(continued, series) < 1e-7, "{continued} vs {series}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn gamma_ladder(w in prop::collection::vec(1u64..=3, 2..=3), x in 0.1..4.0f64, pick in 0usize..3) {
        let omega = OmegaVector::new(w.clone()).unwrap();
        let j = pick % w.len();
        let rest = omega.without(j).unwrap();
        let lhs = ln_multi_gamma(x, &omega).unwrap();
        let rhs = ln_multi_gamma(x + w[j] as f64, &omega).unwrap()
            .mul(&ln_multi_gamma(x, &rest).unwrap());
        prop_assert!(lhs.relative_gap(&rhs) < 1e-6);
    }
}
