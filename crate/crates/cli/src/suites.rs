//! Verification suites. Each returns named checks carrying inputs,
//! expected and actual values, tolerance and a pass flag.

use std::f64::consts::{FRAC_PI_2, PI, TAU};

use clap::ValueEnum;
use num_complex::Complex64;
use qca_zeta::abszeta::special::ln_gamma;
use qca_zeta::abszeta::{
    functional_eq_residual, ln_multi_gamma, ln_multi_sine, mellin_z, multi_gamma,
    multi_hurwitz_continued, multi_hurwitz_series, theorem1_expand, theorem4_report, AbsExpansion,
    OmegaVector,
};
use qca_zeta::matrix::Matrix;
use qca_zeta::qca::{
    assemble_global, classify, local_domany_kinzel, local_qca1, local_qca2, local_tensor,
    Configuration, LocalOperator, StateVector, DEFAULT_CLASSIFY_TOL,
};
use qca_zeta::scalar::{entry_to_c64, Entry, Scalar};
use qca_zeta::spectral::{
    b_coefficient, numeric_spectrum, predicted_multiplicities, DEFAULT_CLUSTER_TOL,
};
use qca_zeta::zeta::{
    automorphy, canonical_form, canonical_form_default, tensor_case_form, verify_theorem2,
    CanonicalAbsForm, FormRecord, TensorCase, AUTOMORPHY_TOL,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::report::{Check, SuiteResult};

pub const PROP3_CLUSTER_TOL: f64 = 1e-9;
pub const THM2_TOL: f64 = 1e-9;
pub const DET_SNAP_TOL: f64 = 1e-10;
pub const THM1_TOL: f64 = 1e-6;
pub const FE_TOL: f64 = 1e-6;
pub const LERCH_TOL: f64 = 1e-7;
pub const ZETA_ZERO_TOL: f64 = 1e-8;
pub const LADDER_TOL: f64 = 1e-6;
pub const CONTINUATION_TOL: f64 = 1e-7;
pub const EVOLUTION_TOL: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Prop3,
    Thm2,
    Thm1,
    Thm4,
    Continuation,
    Evolution,
    Props,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SuiteOptions {
    /// Overrides each suite's default largest N.
    pub max_n: Option<usize>,
    pub draws: usize,
    pub samples: usize,
    pub seed: u64,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            max_n: None,
            draws: 20,
            samples: 10,
            seed: 0,
        }
    }
}

pub fn run_suite(suite: Suite, opts: &SuiteOptions) -> Vec<SuiteResult> {
    let n = |default: usize| opts.max_n.unwrap_or(default);
    match suite {
        Suite::Prop3 => vec![prop3(n(10))],
        Suite::Thm2 => vec![thm2(n(8), opts.draws, opts.samples, opts.seed)],
        Suite::Thm1 => vec![thm1_identity(), functional_equations()],
        Suite::Thm4 => vec![tensor_worked_forms(), tensor_reports(n(8))],
        Suite::Continuation => vec![continuation(opts.seed)],
        Suite::Evolution => vec![evolution(opts.seed)],
        Suite::Props => vec![properties(opts.seed)],
        Suite::All => [
            Suite::Prop3,
            Suite::Thm2,
            Suite::Thm1,
            Suite::Thm4,
            Suite::Continuation,
            Suite::Evolution,
            Suite::Props,
        ]
        .into_iter()
        .flat_map(|s| run_suite(s, opts))
        .collect(),
    }
}

/// `B_N = 2 Re (1 + i)^{N-1}` in integer arithmetic.
pub fn b_gaussian(sites: usize) -> i64 {
    let (mut re, mut im) = (1i64, 0i64);
    for _ in 1..sites {
        (re, im) = (re - im, re + im);
    }
    2 * re
}

fn tensor_global(n: usize) -> qca_zeta::Result<qca_zeta::qca::GlobalOperator> {
    assemble_global(&local_tensor(FRAC_PI_2), n)
}

pub fn prop3(max_n: usize) -> SuiteResult {
    let mut checks = Vec::new();
    for n in 1..=max_n {
        let inputs = json!({"family": "tensor", "xi": "pi/2", "N": n});
        let op = "numeric_spectrum";
        let spec = match tensor_global(n).and_then(|g| numeric_spectrum(&g, DEFAULT_CLUSTER_TOL)) {
            Ok(s) => s,
            Err(e) => {
                checks.push(Check::failed("prop3.spectrum", op, inputs, &e));
                continue;
            }
        };
        let b = b_gaussian(n);
        let dim = 1i64 << n;
        let expected = [(dim + b) / 2, (dim - b) / 2];
        let plus = Complex64::new(1.0, 0.0);
        let minus = Complex64::new(-1.0, 0.0);
        let actual = [
            spec.multiplicity_of(plus, PROP3_CLUSTER_TOL) as i64,
            spec.multiplicity_of(minus, PROP3_CLUSTER_TOL) as i64,
        ];
        checks.push(Check::equal(
            "prop3.multiplicities",
            op,
            inputs.clone(),
            expected,
            actual,
        ));
        let clusters = expected.iter().filter(|&&c| c > 0).count();
        checks.push(Check::equal(
            "prop3.cluster_count",
            op,
            inputs.clone(),
            clusters,
            spec.eigs.len(),
        ));
        let spread = spec
            .expanded()
            .iter()
            .map(|z| (z - plus).norm().min((z - minus).norm()))
            .fold(0.0, f64::max);
        checks.push(Check::residual(
            "prop3.cluster_spread",
            op,
            inputs,
            spread,
            PROP3_CLUSTER_TOL,
        ));
    }
    // Known multiplicities for N = 1..4.
    for (n, known) in [(1, [2, 0]), (2, [3, 1]), (3, [4, 4]), (4, [6, 10])] {
        let inputs = json!({"N": n});
        let actual = predicted_multiplicities(n).map(|p| [p.c_plus as i64, p.c_minus as i64]);
        checks.push(match actual {
            Ok(a) => Check::equal(
                "prop3.small_n_table",
                "predicted_multiplicities",
                inputs,
                known,
                a,
            ),
            Err(e) => Check::failed(
                "prop3.small_n_table",
                "predicted_multiplicities",
                inputs,
                &e,
            ),
        });
    }
    SuiteResult::new("prop3", checks)
}

/// Worst reciprocity residual over seeded angle draws, one check per
/// family and N.
pub fn thm2(max_n: usize, draws: usize, samples: usize, seed: u64) -> SuiteResult {
    let mut checks = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let families: [(&str, fn(f64, f64) -> LocalOperator); 2] = [
        ("qca1", |a, b| local_qca1(a, b)),
        ("qca2", |a, b| local_qca2(a, b)),
    ];
    for (name, make) in families {
        let angles: Vec<(f64, f64, u64)> = (0..draws)
            .map(|_| {
                (
                    rng.random_range(0.0..TAU),
                    rng.random_range(0.0..TAU),
                    rng.random(),
                )
            })
            .collect();
        for n in 1..=max_n {
            let mut worst = (0.0f64, Value::Null);
            let mut worst_det = (0.0f64, Value::Null);
            let mut error = None;
            for &(a, b, s) in &angles {
                let inputs = json!({"family": name, "xi1": a, "xi2": b, "N": n, "samples": samples, "seed": s});
                match assemble_global(&make(a, b), n).and_then(|g| verify_theorem2(&g, samples, s))
                {
                    Ok(r) => {
                        if r.max_residual >= worst.0 {
                            worst = (r.max_residual, inputs.clone());
                        }
                        if r.det_residual >= worst_det.0 {
                            worst_det = (r.det_residual, inputs);
                        }
                    }
                    Err(e) => error = Some((e, inputs)),
                }
            }
            if let Some((e, inputs)) = error {
                checks.push(Check::failed(
                    "thm2.reciprocity",
                    "verify_theorem2",
                    inputs,
                    &e,
                ));
                continue;
            }
            checks.push(Check::residual(
                "thm2.reciprocity",
                "verify_theorem2",
                worst.1,
                worst.0,
                THM2_TOL,
            ));
            checks.push(Check::residual(
                "thm2.det_snap",
                "verify_theorem2",
                worst_det.1,
                worst_det.0,
                DET_SNAP_TOL,
            ));
        }
    }
    SuiteResult::new("thm2", checks)
}

fn form(kappa: i8, m: Vec<u64>, n: Vec<u64>) -> CanonicalAbsForm {
    CanonicalAbsForm::new(kappa, 0, m, n).expect("valid literal form")
}

/// `(name, form)` for the four worked examples, `f` without sign.
fn worked_forms() -> [(&'static str, CanonicalAbsForm); 4] {
    [
        ("f1", form(1, vec![], vec![1, 1])),
        ("f2", form(1, vec![], vec![1, 1, 2])),
        ("f3", form(1, vec![], vec![2; 4])),
        ("f4", form(1, vec![1; 4], vec![2; 10])),
    ]
}

fn expansion_of(f: &CanonicalAbsForm) -> AbsExpansion {
    theorem1_expand(f, 0).expect("worked forms have denominators")
}

pub fn thm1_identity() -> SuiteResult {
    let c = |re: f64, im: f64| Complex64::new(re, im);
    let [(_, f1), (_, f2), ..] = worked_forms();
    let points = [
        (
            "f1",
            &f1,
            vec![
                (c(3.0, 0.0), 0.0),
                (c(3.0, 0.0), 2.0),
                (c(3.5, 0.5), 1.0),
                (c(4.0, 0.0), 3.5),
                (c(5.0, -1.0), 0.5),
            ],
        ),
        (
            "f2",
            &f2,
            vec![
                (c(4.0, 0.0), -2.0),
                (c(4.0, 0.0), 1.0),
                (c(4.5, 1.0), 0.0),
                (c(5.0, 0.0), 2.5),
                (c(6.0, 0.0), -1.0),
            ],
        ),
    ];
    let mut checks = Vec::new();
    for (name, f, pts) in points {
        let exp = expansion_of(f);
        for (w, s) in pts {
            let inputs = json!({"form": name, "w": [w.re, w.im], "s": s});
            let direct = mellin_z(f, w, c(s, 0.0));
            let series = exp.z_series(w, c(s, 0.0), 1e-12);
            checks.push(match (direct, series) {
                (Ok(d), Ok(z)) => Check::residual(
                    "thm1.mellin_vs_subset_sum",
                    "mellin_z",
                    inputs,
                    (d.value - z.value).norm(),
                    THM1_TOL,
                ),
                (Err(e), _) | (_, Err(e)) => {
                    Check::failed("thm1.mellin_vs_subset_sum", "mellin_z", inputs, &e)
                }
            });
        }
    }
    // Single-term identities for the first two forms.
    for (name, f, w, s, x, periods) in [
        ("f1", &f1, 3.0, 2.0, 4.0, vec![1, 1]),
        ("f2", &f2, 4.0, 1.0, 5.0, vec![1, 1, 2]),
    ] {
        let inputs = json!({"form": name, "w": w, "s": s, "x": x, "omega": periods});
        let omega = OmegaVector::new(periods).expect("positive periods");
        let lhs = mellin_z(f, c(w, 0.0), c(s, 0.0));
        let rhs = multi_hurwitz_series(c(w, 0.0), x, &omega, 1e-12);
        checks.push(match (lhs, rhs) {
            (Ok(l), Ok(r)) => Check::close(
                "thm1.single_zeta",
                "mellin_z",
                inputs,
                r.value.re,
                l.value.re,
                THM1_TOL,
            ),
            (Err(e), _) | (_, Err(e)) => Check::failed("thm1.single_zeta", "mellin_z", inputs, &e),
        });
    }
    let [.., (_, f4)] = worked_forms();
    let exp = expansion_of(&f4);
    let shifts: Vec<String> = exp.terms.iter().map(|t| t.shift_label()).collect();
    let expected: Vec<String> = exp
        .terms
        .iter()
        .map(|t| format!("s+{}", 16 + t.subset.len()))
        .collect();
    checks.push(Check::equal(
        "thm1.f4_shifts",
        "theorem1_expand",
        json!({"form": "f4"}),
        expected,
        shifts,
    ));
    let signs: Vec<i64> = exp.terms.iter().map(|t| t.sign()).collect();
    let expected: Vec<i64> = exp
        .terms
        .iter()
        .map(|t| if t.subset.len() % 2 == 0 { 1 } else { -1 })
        .collect();
    checks.push(Check::equal(
        "thm1.f4_signs",
        "theorem1_expand",
        json!({"form": "f4"}),
        expected,
        signs,
    ));
    SuiteResult::new("thm1", checks)
}

pub fn functional_equations() -> SuiteResult {
    let mut checks = Vec::new();
    let [f1, f2, f3, _] = worked_forms();
    for (name, f) in [f1, f2, f3] {
        let exp = expansion_of(&f);
        for s in [0.3, 0.7, 1.5, 2.25, 3.1] {
            let inputs = json!({"form": name, "s": s, "D": exp.weight(), "C": exp.sign()});
            checks.push(match functional_eq_residual(&exp, s) {
                Ok(r) => {
                    Check::residual("fe.residual", "functional_eq_residual", inputs, r, FE_TOL)
                }
                Err(e) => Check::failed("fe.residual", "functional_eq_residual", inputs, &e),
            });
        }
    }
    let [(_, f1), ..] = worked_forms();
    let exp = expansion_of(&f1);
    let omega = OmegaVector::new(vec![1, 1]).expect("positive periods");
    let pairs = [
        (
            "fe.f1_zeta_is_gamma2",
            1.0,
            exp.ln_zeta(1.0),
            ln_multi_gamma(3.0, &omega),
        ),
        (
            "fe.f1_epsilon_is_sine2",
            0.3,
            exp.ln_epsilon(0.3),
            ln_multi_sine(2.3, &omega),
        ),
    ];
    for (name, s, lhs, rhs) in pairs {
        let inputs = json!({"form": "f1", "s": s});
        checks.push(match (lhs, rhs) {
            (Ok(l), Ok(r)) => Check::residual(name, "abs_zeta", inputs, l.relative_gap(&r), FE_TOL),
            (Err(e), _) | (_, Err(e)) => Check::failed(name, "abs_zeta", inputs, &e),
        });
    }
    SuiteResult::new("functional_equation", checks)
}

/// Canonical forms of the tensor model at `pi/2` for N = 1..4 against the
/// four worked examples, with the sign `(-1)^{c_N(1)}`.
pub fn tensor_worked_forms() -> SuiteResult {
    let expected = [
        (
            1,
            json!({"kappa": 1, "ell": 0, "m": [], "n": [1, 1], "D": -2, "C": 1, "case": "a"}),
        ),
        (
            2,
            json!({"kappa": -1, "ell": 0, "m": [], "n": [1, 1, 2], "D": -4, "C": -1, "case": "a"}),
        ),
        (
            3,
            json!({"kappa": 1, "ell": 0, "m": [], "n": [2, 2, 2, 2], "D": -8, "C": 1, "case": "b"}),
        ),
        (
            4,
            json!({"kappa": 1, "ell": 0, "m": [1, 1, 1, 1], "n": [2, 2, 2, 2, 2, 2, 2, 2, 2, 2], "D": -16, "C": 1, "case": "c"}),
        ),
    ];
    let mut checks = Vec::new();
    for (n, want) in expected {
        let inputs = json!({"family": "tensor", "xi": "pi/2", "N": n});
        let got = tensor_global(n)
            .and_then(|g| canonical_form_default(&g))
            .and_then(|(f, _)| Ok((f, tensor_case_form(n)?.0)));
        match got {
            Ok((f, case)) => {
                let record =
                    serde_json::to_value(FormRecord::new(&f, Some(case))).unwrap_or(Value::Null);
                checks.push(Check::equal(
                    "thm4.worked_form",
                    "canonical_form",
                    inputs.clone(),
                    &want,
                    &record,
                ));
                let cert = automorphy(&f, 16, 0);
                checks.push(Check::equal(
                    "thm4.certificate",
                    "automorphy",
                    inputs.clone(),
                    (&want["D"], &want["C"]),
                    (&json!(cert.weight), &json!(cert.sign)),
                ));
                checks.push(Check::residual(
                    "thm4.certificate_residual",
                    "automorphy",
                    inputs,
                    cert.max_residual,
                    AUTOMORPHY_TOL,
                ));
            }
            Err(e) => checks.push(Check::failed(
                "thm4.worked_form",
                "canonical_form",
                inputs,
                &e,
            )),
        }
    }
    SuiteResult::new("worked_forms", checks)
}

pub fn tensor_reports(max_n: usize) -> SuiteResult {
    let mut checks = Vec::new();
    for n in 1..=max_n {
        let inputs = json!({"N": n});
        let report = match theorem4_report(n) {
            Ok(r) => r,
            Err(e) => {
                checks.push(Check::failed("thm4.report", "theorem4_report", inputs, &e));
                continue;
            }
        };
        let b = b_gaussian(n);
        let case = match b.signum() {
            1 => TensorCase::A,
            0 => TensorCase::B,
            _ => TensorCase::C,
        };
        checks.push(Check::equal(
            "thm4.case",
            "theorem4_report",
            inputs.clone(),
            case,
            report.case,
        ));
        checks.push(Check::equal(
            "thm4.weight",
            "theorem4_report",
            inputs.clone(),
            -(1i64 << n),
            report.form.weight,
        ));
        let a = (-b).max(0) as u32;
        checks.push(Check::equal(
            "thm4.term_count",
            "theorem1_expand",
            inputs.clone(),
            1usize << a,
            report.expansion.terms.len(),
        ));
        let numeric = tensor_global(n)
            .and_then(|g| numeric_spectrum(&g, DEFAULT_CLUSTER_TOL))
            .and_then(|s| canonical_form(&s));
        checks.push(match numeric {
            Ok(f) => Check::equal(
                "thm4.form_vs_spectrum",
                "canonical_form",
                inputs.clone(),
                FormRecord::new(&f, Some(case)),
                report.form.clone(),
            ),
            Err(e) => Check::failed(
                "thm4.form_vs_spectrum",
                "canonical_form",
                inputs.clone(),
                &e,
            ),
        });
        for spot in report.spot_checks.iter().filter(|c| c.tolerance.is_some()) {
            let inputs = json!({"N": n, "s": spot.s});
            checks.push(Check::residual(
                "thm4.functional_equation",
                "functional_eq_residual",
                inputs,
                spot.value,
                spot.tolerance.unwrap_or(0.0),
            ));
        }
    }
    SuiteResult::new("thm4", checks)
}

pub fn continuation(seed: u64) -> SuiteResult {
    let mut checks = Vec::new();
    let c = |re: f64| Complex64::new(re, 0.0);
    let one = OmegaVector::new(vec![1]).expect("positive period");
    for x in [0.5, 1.0, 2.5] {
        let inputs = json!({"x": x, "omega": [1]});
        let want = ln_gamma(c(x)).re.exp() / TAU.sqrt();
        checks.push(match multi_gamma(x, &one) {
            Ok(g) => Check::close(
                "continuation.lerch",
                "multi_gamma",
                inputs,
                want,
                g.value.re,
                LERCH_TOL,
            ),
            Err(e) => Check::failed("continuation.lerch", "multi_gamma", inputs, &e),
        });
    }
    for x in [0.25, 1.0, 2.5, 7.0] {
        let inputs = json!({"s": 0, "x": x, "omega": [1]});
        checks.push(match multi_hurwitz_continued(c(0.0), x, &one) {
            Ok(z) => Check::close(
                "continuation.zeta_at_zero",
                "multi_hurwitz_continued",
                inputs,
                0.5 - x,
                z.value.re,
                ZETA_ZERO_TOL,
            ),
            Err(e) => Check::failed(
                "continuation.zeta_at_zero",
                "multi_hurwitz_continued",
                inputs,
                &e,
            ),
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..20 {
        let r = rng.random_range(2..=3);
        let periods: Vec<u64> = (0..r).map(|_| rng.random_range(1..=3)).collect();
        let x = rng.random_range(0.1..4.0);
        let j = rng.random_range(0..r);
        let inputs = json!({"x": x, "omega": periods, "j": j});
        let omega = OmegaVector::new(periods.clone()).expect("positive periods");
        let rest = omega.without(j).expect("order >= 2");
        let gap = ln_multi_gamma(x, &omega).and_then(|lhs| {
            let rhs =
                ln_multi_gamma(x + periods[j] as f64, &omega)?.mul(&ln_multi_gamma(x, &rest)?);
            Ok(lhs.relative_gap(&rhs))
        });
        checks.push(match gap {
            Ok(g) => Check::residual(
                "continuation.gamma_ladder",
                "ln_multi_gamma",
                inputs,
                g,
                LADDER_TOL,
            ),
            Err(e) => Check::failed("continuation.gamma_ladder", "ln_multi_gamma", inputs, &e),
        });
    }
    for _ in 0..50 {
        let r = rng.random_range(1..=4);
        let periods: Vec<u64> = (0..r).map(|_| rng.random_range(1..=4)).collect();
        let x = rng.random_range(0.2..5.0);
        let s = Complex64::new(
            r as f64 + rng.random_range(0.5..4.0),
            rng.random_range(-2.0..2.0),
        );
        let inputs = json!({"s": [s.re, s.im], "x": x, "omega": periods});
        let omega = OmegaVector::new(periods).expect("positive periods");
        let gap = multi_hurwitz_series(s, x, &omega, 1e-12).and_then(|a| {
            let b = multi_hurwitz_continued(s, x, &omega)?;
            Ok((b.value - a.value).norm() / a.value.norm())
        });
        checks.push(match gap {
            Ok(g) => Check::residual(
                "continuation.vs_series",
                "multi_hurwitz_continued",
                inputs,
                g,
                CONTINUATION_TOL,
            ),
            Err(e) => Check::failed(
                "continuation.vs_series",
                "multi_hurwitz_continued",
                inputs,
                &e,
            ),
        });
    }
    SuiteResult::new("continuation", checks)
}

/// The four branches of `|001>` at three sites.
fn branches(q: &LocalOperator) -> [(u64, Entry); 4] {
    let a = |i, j, k, l| q.weight(i, j, k, l);
    [
        (0b001, a(0, 0, 0, 0) * a(0, 1, 0, 1)),
        (0b011, a(0, 0, 0, 0) * a(0, 1, 1, 1)),
        (0b101, a(0, 0, 1, 0) * a(0, 1, 0, 1)),
        (0b111, a(0, 0, 1, 0) * a(0, 1, 1, 1)),
    ]
}

fn entry_json(e: &Entry) -> Value {
    json!({"re": e.re, "im": e.im})
}

pub fn evolution(seed: u64) -> SuiteResult {
    let mut checks = Vec::new();
    let start = Configuration::from_index(1, 3).expect("3 sites");
    let tensor = local_tensor(FRAC_PI_2);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cases = vec![("tensor pi/2".to_string(), tensor, true)];
    for k in 0..4 {
        let w: [Scalar; 8] = std::array::from_fn(|_| Scalar::Float(rng.random_range(-1.0..1.0)));
        cases.push((format!("random {k}"), LocalOperator::from_weights(w), false));
    }
    for (label, q, exact) in cases {
        let out = match assemble_global(&q, 3).and_then(|g| g.evolve(&StateVector::basis(start), 1))
        {
            Ok(s) => s,
            Err(e) => {
                checks.push(Check::failed(
                    "evolution.branch",
                    "evolve",
                    json!({"local": label}),
                    &e,
                ));
                continue;
            }
        };
        let expected = branches(&q);
        for c in Configuration::all(3) {
            let want = expected
                .iter()
                .find(|(i, _)| *i as usize == c.index())
                .map_or(Entry::new(Scalar::int(0), Scalar::int(0)), |(_, v)| *v);
            let got = out.amplitude(c);
            let inputs = json!({"local": label, "initial": "001", "target": c.to_string()});
            checks.push(if exact {
                Check::equal(
                    "evolution.branch_exact",
                    "evolve",
                    inputs,
                    entry_json(&want),
                    entry_json(&got),
                )
            } else {
                let d = (entry_to_c64(&got) - entry_to_c64(&want)).norm();
                Check::residual("evolution.branch", "evolve", inputs, d, EVOLUTION_TOL)
            });
        }
    }
    SuiteResult::new("evolution", checks)
}

/// Layer product `L_{N-2} ... L_0` from dense Kronecker factors.
fn layer_product(q: &LocalOperator, n: usize) -> qca_zeta::Result<Matrix> {
    let g = assemble_global(q, n)?;
    g.layers()
        .into_iter()
        .try_fold(Matrix::identity(1 << n), |acc, l| acc.mul(&l.dense(q, n)))
}

fn brute_force_zeta2(s: f64, x: f64, w: [u64; 2], cutoff: u64) -> f64 {
    let mut total = 0.0;
    for i in (0..cutoff).rev() {
        for j in (0..cutoff).rev() {
            total += (x + (i * w[0] + j * w[1]) as f64).powf(-s);
        }
    }
    total
}

pub fn properties(seed: u64) -> SuiteResult {
    let mut checks = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..4 {
        let (a, b) = (rng.random_range(0.0..TAU), rng.random_range(0.0..TAU));
        for (name, q) in [("qca1", local_qca1(a, b)), ("qca2", local_qca2(a, b))] {
            for n in 2..=5 {
                let inputs = json!({"family": name, "xi1": a, "xi2": b, "N": n});
                checks.push(
                    match assemble_global(&q, n)
                        .and_then(|g| Ok(classify(g.dense()?, DEFAULT_CLASSIFY_TOL)))
                    {
                        Ok(c) => Check::equal(
                            "props.unitary_lifts",
                            "classify",
                            inputs,
                            true,
                            c.orthogonal,
                        ),
                        Err(e) => Check::failed("props.unitary_lifts", "classify", inputs, &e),
                    },
                );
            }
        }
        let (p1, p2) = (rng.random_range(0.0..=1.0), rng.random_range(0.0..=1.0));
        for n in 2..=5 {
            let inputs = json!({"family": "dk", "p1": p1, "p2": p2, "N": n});
            let q = local_domany_kinzel(p1, p2);
            checks.push(
                match assemble_global(&q, n)
                    .and_then(|g| Ok(classify(g.dense()?, DEFAULT_CLASSIFY_TOL)))
                {
                    Ok(c) => Check::equal(
                        "props.stochastic_lifts",
                        "classify",
                        inputs,
                        true,
                        c.transposed_stochastic,
                    ),
                    Err(e) => Check::failed("props.stochastic_lifts", "classify", inputs, &e),
                },
            );
        }
    }
    for k in 0..3 {
        let w: [Scalar; 8] = std::array::from_fn(|_| Scalar::Float(rng.random_range(-1.0..1.0)));
        let q = LocalOperator::from_weights(w);
        for n in 2..=6 {
            let inputs = json!({"local": format!("random {k}"), "N": n});
            let diff = assemble_global(&q, n)
                .and_then(|g| Ok(layer_product(&q, n)?.max_abs_diff(g.dense()?)));
            checks.push(match diff {
                Ok(d) => Check::residual("props.layers_vs_dense", "dense", inputs, d, 1e-12),
                Err(e) => Check::failed("props.layers_vs_dense", "dense", inputs, &e),
            });
        }
    }
    for (x, w) in [(0.5, [1, 1]), (1.3, [1, 2]), (2.0, [2, 3])] {
        let inputs = json!({"s": 8, "x": x, "omega": w, "cutoff": 40});
        let want = brute_force_zeta2(8.0, x, w, 40);
        let omega = OmegaVector::new(w.to_vec()).expect("positive periods");
        checks.push(
            match multi_hurwitz_series(Complex64::new(8.0, 0.0), x, &omega, 1e-12) {
                Ok(z) => Check::residual(
                    "props.series_brute_force",
                    "multi_hurwitz_series",
                    inputs,
                    (z.value.re - want).abs() / want,
                    1e-9,
                ),
                Err(e) => Check::failed(
                    "props.series_brute_force",
                    "multi_hurwitz_series",
                    inputs,
                    &e,
                ),
            },
        );
    }
    {
        // zeta_2(3, 5, (1,1)) = zeta_H(2, 5) - 4 zeta_H(3, 5).
        const ZETA_3: f64 = 1.202_056_903_159_594_3;
        let want = PI * PI / 6.0
            - (1.0 + 0.25 + 1.0 / 9.0 + 1.0 / 16.0)
            - 4.0 * (ZETA_3 - (1.0 + 0.125 + 1.0 / 27.0 + 1.0 / 64.0));
        let inputs = json!({"s": 3, "x": 5, "omega": [1, 1]});
        let omega = OmegaVector::new(vec![1, 1]).expect("positive periods");
        checks.push(
            match multi_hurwitz_series(Complex64::new(3.0, 0.0), 5.0, &omega, 1e-12) {
                Ok(z) => Check::close(
                    "props.collapsed_double_zeta",
                    "multi_hurwitz_series",
                    inputs,
                    want,
                    z.value.re,
                    1e-11,
                ),
                Err(e) => Check::failed(
                    "props.collapsed_double_zeta",
                    "multi_hurwitz_series",
                    inputs,
                    &e,
                ),
            },
        );
    }
    for n in 1..=20 {
        let inputs = json!({"N": n});
        checks.push(match b_coefficient(n) {
            Ok(b) => Check::equal(
                "props.b_integrality",
                "b_coefficient",
                inputs,
                b_gaussian(n),
                b,
            ),
            Err(e) => Check::failed("props.b_integrality", "b_coefficient", inputs, &e),
        });
    }
    SuiteResult::new("props", checks)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gaussian_b_values() {
        let got: Vec<i64> = (1..=8).map(b_gaussian).collect();
        assert_eq!(got, [2, 2, 0, -4, -8, -8, 0, 16]);
    }

    #[test]
    fn small_suites_pass() {
        for s in [
            prop3(4),
            evolution(1),
            tensor_worked_forms(),
            thm1_identity(),
        ] {
            assert!(
                s.pass,
                "{}: {:?}",
                s.suite,
                s.failures().collect::<Vec<_>>()
            );
        }
    }

    #[test]
    fn suite_composition() {
        let opts = SuiteOptions {
            max_n: Some(2),
            draws: 2,
            samples: 3,
            seed: 4,
        };
        let names: Vec<String> = run_suite(Suite::Thm4, &opts)
            .into_iter()
            .map(|s| s.suite)
            .collect();
        assert_eq!(names, ["worked_forms", "thm4"]);
    }
}
