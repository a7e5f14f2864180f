//! Acceptance run: one PASS/FAIL line per criterion.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use qca_zeta_cli::report::SuiteResult;
use qca_zeta_cli::suites::{
    continuation, evolution, functional_equations, prop3, properties, run_suite,
    tensor_worked_forms, thm1_identity, thm2, Suite, SuiteOptions,
};

const SEED: u64 = 0;

struct Outcome {
    pass: bool,
    detail: String,
}

/// Pass when every check named with `prefix` passed, at least one ran, and
/// the run finished within `limit`.
fn judge(
    results: &[SuiteResult],
    prefix: &str,
    elapsed: Duration,
    limit: Option<Duration>,
) -> Outcome {
    let checks: Vec<_> = results
        .iter()
        .flat_map(|r| &r.checks)
        .filter(|c| c.name.starts_with(prefix))
        .collect();
    let failed: Vec<_> = checks.iter().filter(|c| !c.pass).collect();
    let in_time = limit.is_none_or(|l| elapsed <= l);
    let mut detail = format!(
        "{} checks, {} failed, {:.1} s",
        checks.len(),
        failed.len(),
        elapsed.as_secs_f64()
    );
    if let Some(l) = limit {
        detail.push_str(&format!(" (limit {} s)", l.as_secs()));
    }
    if let Some(c) = failed.first() {
        detail.push_str(&format!("; first failure {} {}", c.name, c.inputs));
    }
    Outcome {
        pass: !checks.is_empty() && failed.is_empty() && in_time,
        detail,
    }
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed())
}

fn secs(s: u64) -> Option<Duration> {
    Some(Duration::from_secs(s))
}

fn main() -> ExitCode {
    let mut outcomes = Vec::new();

    let (r, t) = timed(|| vec![prop3(10)]);
    outcomes.push((
        "tensor spectrum clusters and multiplicities",
        judge(&r, "prop3.", t, secs(60)),
    ));

    let (r, t) = timed(|| vec![tensor_worked_forms()]);
    outcomes.push((
        "canonical forms N = 1..4 and (D, C)",
        judge(&r, "thm4.", t, None),
    ));

    let (r, t) = timed(|| vec![thm2(8, 20, 10, SEED)]);
    outcomes.push((
        "reciprocity for both QCA families, N <= 8",
        judge(&r, "thm2.", t, secs(120)),
    ));

    let (r, t) = timed(|| vec![thm1_identity()]);
    outcomes.push((
        "Mellin transform vs subset sum of series",
        judge(&r, "thm1.mellin", t, secs(60)),
    ));

    let (r, t) = timed(|| vec![continuation(SEED)]);
    let lerch = judge(&r, "continuation.lerch", t, None);
    let zero = judge(&r, "continuation.zeta_at_zero", t, None);
    let ladder = judge(&r, "continuation.gamma_ladder", t, None);
    outcomes.push((
        "continuation: Lerch, zeta at 0, gamma ladder",
        Outcome {
            pass: lerch.pass && zero.pass && ladder.pass,
            detail: format!(
                "lerch [{}]; zero [{}]; ladder [{}]",
                lerch.detail, zero.detail, ladder.detail
            ),
        },
    ));

    let (r, t) = timed(|| vec![functional_equations()]);
    outcomes.push((
        "functional equation for f1, f2, f3",
        judge(&r, "fe.", t, None),
    ));

    let (r, t) = timed(|| vec![evolution(SEED)]);
    outcomes.push((
        "three-site branching of |001>",
        judge(&r, "evolution.", t, None),
    ));

    let (r, t) = timed(|| vec![properties(SEED)]);
    let props = judge(&r, "props.", t, None);
    let opts = SuiteOptions {
        seed: SEED,
        ..SuiteOptions::default()
    };
    let (all, t) = timed(|| run_suite(Suite::All, &opts));
    let full = judge(&all, "", t, secs(600));
    outcomes.push((
        "property suites and full verify run",
        Outcome {
            pass: props.pass && full.pass,
            detail: format!("props [{}]; all [{}]", props.detail, full.detail),
        },
    ));

    let mut ok = true;
    for (k, (title, o)) in outcomes.iter().enumerate() {
        ok &= o.pass;
        let verdict = if o.pass { "PASS" } else { "FAIL" };
        println!("criterion {}: {verdict} {title}: {}", k + 1, o.detail);
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
