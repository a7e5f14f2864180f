//! Argument model and the body of every subcommand.

use std::path::PathBuf;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;
use qca_zeta::abszeta::{
    abs_zeta_log, functional_eq_residual, mellin_z, theorem1_expand, theorem4_report, AbsExpansion,
    CONTINUATION_MAX_ORDER,
};
use qca_zeta::qca::{
    assemble_global, classify, Configuration, GlobalOperator, StateVector, DEFAULT_CLASSIFY_TOL,
};
use qca_zeta::scalar::Entry;
use qca_zeta::spectral::{
    default_max_order, exact_char_poly, numeric_spectrum, predicted_multiplicities,
    roots_of_unity_profile, DEFAULT_EXACT_CAP,
};
use qca_zeta::zeta::{
    automorphy, canonical_form_default, tensor_case_form, verify_theorem2, CanonicalAbsForm,
    FormRecord, FormSource, ROOT_MATCH_TOL,
};
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{CliError, CliResult, ExitStatus};
use crate::family::{FamilyArgs, Selection};
use crate::report::Format;
use crate::suites::{run_suite, Suite, SuiteOptions};

#[derive(Clone, Debug, Parser)]
#[command(
    name = "qca-zeta",
    version,
    about = "Zeta functions of one-dimensional quantum cellular automata"
)]
pub struct Cli {
    #[arg(long, value_enum, default_value = "json", global = true)]
    pub format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, default_value_t = 0, global = true)]
    pub seed: u64,
    /// Report cache directory; overrides the QCA_ZETA_CACHE_DIR variable.
    #[arg(long, global = true)]
    pub cache_dir: Option<PathBuf>,
    #[arg(long, global = true)]
    pub no_cache: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Debug, Subcommand)]
pub enum Command {
    /// The 4x4 local operator and its class.
    Local(LocalArgs),
    /// The global operator on N sites, optionally evolving a configuration.
    Global(GlobalArgs),
    /// Classify the local and global operators.
    Classify(SitesArgs),
    /// Eigenvalues, root-of-unity profile and characteristic polynomial.
    Spectrum(SitesArgs),
    /// Canonical absolute automorphic form of the determinant zeta.
    Form(SitesArgs),
    /// Subset expansion and absolute zeta values.
    Abszeta(AbszetaArgs),
    /// Run verification suites.
    Verify(VerifyArgs),
    /// Forms and residuals over a range of N.
    Sweep(SweepArgs),
}

#[derive(Clone, Debug, Args)]
pub struct LocalArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
}

#[derive(Clone, Debug, Args)]
pub struct SitesArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    #[arg(long)]
    pub n: usize,
}

#[derive(Clone, Debug, Args)]
pub struct GlobalArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    #[arg(long)]
    pub n: usize,
    /// Include the dense matrix.
    #[arg(long)]
    pub dense: bool,
    /// Initial configuration as a bit string, site 0 first.
    #[arg(long)]
    pub evolve: Option<String>,
    #[arg(long, default_value_t = 1)]
    pub steps: usize,
}

#[derive(Clone, Debug, Args)]
pub struct AbszetaArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    #[arg(long)]
    pub n: usize,
    /// Points at which to evaluate the absolute zeta.
    #[arg(long = "eval-s", allow_hyphen_values = true)]
    pub eval_s: Vec<f64>,
    /// Evaluate the absolute Hurwitz zeta Z(w, s) at this w (needs --z-s).
    #[arg(long, requires = "z_s")]
    pub w: Option<f64>,
    #[arg(long = "z-s", allow_hyphen_values = true, requires = "w")]
    pub z_s: Option<f64>,
}

#[derive(Clone, Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    pub suite: Suite,
    #[arg(long)]
    pub max_n: Option<usize>,
    #[arg(long, default_value_t = 20)]
    pub draws: usize,
    #[arg(long, default_value_t = 10)]
    pub samples: usize,
}

#[derive(Clone, Debug, Args)]
pub struct SweepArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    #[arg(long, default_value_t = 1)]
    pub n_min: usize,
    #[arg(long, default_value_t = 8)]
    pub n_max: usize,
    /// Worker threads; defaults to the available parallelism.
    #[arg(long)]
    pub jobs: Option<usize>,
    /// Point for the functional-equation residual column.
    #[arg(long, default_value_t = 0.5, allow_hyphen_values = true)]
    pub fe_s: f64,
}

/// A command with its operator resolved, ready to hash and run.
pub struct Prepared {
    pub name: &'static str,
    pub config: Value,
    selection: Option<Selection>,
}

impl Command {
    fn family(&self) -> Option<&FamilyArgs> {
        match self {
            Command::Local(a) => Some(&a.family),
            Command::Global(a) => Some(&a.family),
            Command::Classify(a) | Command::Spectrum(a) | Command::Form(a) => Some(&a.family),
            Command::Abszeta(a) => Some(&a.family),
            Command::Sweep(a) => Some(&a.family),
            Command::Verify(_) => None,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Command::Local(_) => "local",
            Command::Global(_) => "global",
            Command::Classify(_) => "classify",
            Command::Spectrum(_) => "spectrum",
            Command::Form(_) => "form",
            Command::Abszeta(_) => "abszeta",
            Command::Verify(_) => "verify",
            Command::Sweep(_) => "sweep",
        }
    }

    /// Everything that determines the body, for the report echo and the cache key.
    pub fn prepare(&self, seed: u64) -> CliResult<Prepared> {
        let selection = self.family().map(FamilyArgs::select).transpose()?;
        let operator = selection.as_ref().map_or(Value::Null, |s| s.echo.clone());
        let params = match self {
            Command::Local(_) => json!({}),
            Command::Global(a) => {
                json!({"n": a.n, "dense": a.dense, "evolve": a.evolve, "steps": a.steps})
            }
            Command::Classify(a) | Command::Spectrum(a) | Command::Form(a) => json!({"n": a.n}),
            Command::Abszeta(a) => json!({"n": a.n, "eval_s": a.eval_s, "w": a.w, "z_s": a.z_s}),
            Command::Verify(a) => {
                json!({"suite": a.suite, "max_n": a.max_n, "draws": a.draws, "samples": a.samples})
            }
            Command::Sweep(a) => json!({"n_min": a.n_min, "n_max": a.n_max, "fe_s": a.fe_s}),
        };
        Ok(Prepared {
            name: self.name(),
            config: json!({"command": self.name(), "operator": operator, "params": params, "seed": seed}),
            selection,
        })
    }
}

fn entry_json(e: &Entry) -> Value {
    json!({"re": e.re, "im": e.im})
}

fn sites(sel: &Selection, n: usize) -> CliResult<GlobalOperator> {
    Ok(assemble_global(&sel.local, n)?)
}

impl Prepared {
    /// The deterministic result and the exit status it implies.
    pub fn run(&self, command: &Command, seed: u64) -> CliResult<(Value, ExitStatus)> {
        let ok = |v: Value| Ok((v, ExitStatus::Ok));
        let sel = self.selection.as_ref();
        let sel = || sel.ok_or_else(|| CliError::Input("command needs an operator".into()));
        match command {
            Command::Local(_) => {
                let s = sel()?;
                ok(json!({
                    "matrix": s.local.matrix(),
                    "exact": s.local.is_exact(),
                    "class": classify(s.local.matrix(), DEFAULT_CLASSIFY_TOL),
                }))
            }
            Command::Global(a) => ok(global_body(sel()?, a)?),
            Command::Classify(a) => {
                let s = sel()?;
                let g = sites(s, a.n)?;
                ok(json!({
                    "local": classify(s.local.matrix(), DEFAULT_CLASSIFY_TOL),
                    "global": classify(g.dense()?, DEFAULT_CLASSIFY_TOL),
                }))
            }
            Command::Spectrum(a) => ok(spectrum_body(sel()?, a.n)?),
            Command::Form(a) => ok(form_body(sel()?, a.n, seed)?),
            Command::Abszeta(a) => ok(abszeta_body(sel()?, a)?),
            Command::Verify(a) => {
                let opts = SuiteOptions {
                    max_n: a.max_n,
                    draws: a.draws,
                    samples: a.samples,
                    seed,
                };
                let suites = run_suite(a.suite, &opts);
                let pass = suites.iter().all(|s| s.pass);
                let status = if pass {
                    ExitStatus::Ok
                } else {
                    ExitStatus::VerifyFailed
                };
                Ok((json!({"pass": pass, "suites": suites}), status))
            }
            Command::Sweep(a) => ok(sweep_body(sel()?, a, seed)?),
        }
    }
}

fn global_body(s: &Selection, a: &GlobalArgs) -> CliResult<Value> {
    let g = sites(s, a.n)?;
    let layers: Vec<usize> = g.layers().iter().map(|l| l.site).collect();
    let mut body =
        json!({"sites": a.n, "dim": g.dim(), "layers": layers, "exact": s.local.is_exact()});
    if a.dense {
        body["matrix"] = serde_json::to_value(g.dense()?)?;
    }
    if let Some(bits) = &a.evolve {
        let start: Configuration = bits.parse()?;
        let out = g.evolve(&StateVector::basis(start), a.steps)?;
        let support: Vec<Value> = out
            .support()
            .iter()
            .map(|(c, e)| json!({"config": c, "amplitude": entry_json(e)}))
            .collect();
        body["evolution"] =
            json!({"initial": start, "steps": a.steps, "norm": out.norm(), "support": support});
    }
    Ok(body)
}

fn spectrum_body(s: &Selection, n: usize) -> CliResult<Value> {
    let g = sites(s, n)?;
    let spec = numeric_spectrum(&g, qca_zeta::spectral::DEFAULT_CLUSTER_TOL)?;
    let profile = roots_of_unity_profile(&spec, default_max_order(spec.dim), ROOT_MATCH_TOL);
    let mut body = json!({"spectrum": spec, "roots_of_unity": profile});
    if s.local.is_exact() && n <= DEFAULT_EXACT_CAP {
        body["reciprocal_char_poly"] = serde_json::to_value(exact_char_poly(&g)?)?;
    }
    if s.tensor_quarter {
        let p = predicted_multiplicities(n)?;
        let plus = spec.multiplicity_of(Complex64::new(1.0, 0.0), 1e-9) as u64;
        let minus = spec.multiplicity_of(Complex64::new(-1.0, 0.0), 1e-9) as u64;
        body["prediction"] = json!({
            "B": p.b, "c_plus": p.c_plus, "c_minus": p.c_minus,
            "observed": [plus, minus], "match": plus == p.c_plus && minus == p.c_minus,
        });
    }
    Ok(body)
}

/// Form of `zeta_N` and its tensor case when the closed forms apply.
fn form_of(
    s: &Selection,
    n: usize,
) -> CliResult<(
    CanonicalAbsForm,
    FormSource,
    Option<qca_zeta::zeta::TensorCase>,
)> {
    let g = sites(s, n)?;
    let (form, source) = canonical_form_default(&g)?;
    let case = if s.tensor_quarter {
        Some(tensor_case_form(n)?.0)
    } else {
        None
    };
    Ok((form, source, case))
}

fn form_body(s: &Selection, n: usize, seed: u64) -> CliResult<Value> {
    let (form, source, case) = form_of(s, n)?;
    Ok(json!({
        "form": FormRecord::new(&form, case),
        "display": form.to_string(),
        "source": source,
        "certificate": automorphy(&form, 16, seed),
    }))
}

/// Sign exponent wrapped around the expansion: `c_N(1)` for the tensor
/// model, otherwise the parity of `kappa`.
fn wrap_exponent(s: &Selection, n: usize, form: &CanonicalAbsForm) -> CliResult<u64> {
    if s.tensor_quarter {
        return Ok(predicted_multiplicities(n)?.c_plus);
    }
    Ok(u64::from(form.kappa < 0))
}

fn abszeta_body(s: &Selection, a: &AbszetaArgs) -> CliResult<Value> {
    let (form, source, case) = form_of(s, a.n)?;
    let exp = theorem1_expand(&form, wrap_exponent(s, a.n, &form)?)?;
    let mut body = json!({
        "form": FormRecord::new(&form, case),
        "display": form.to_string(),
        "source": source,
        "expansion": exp,
    });
    if s.tensor_quarter {
        let r = theorem4_report(a.n)?;
        body["identities"] = json!({
            "Z": r.z_identity, "zeta": r.zeta_identity, "epsilon": r.epsilon_identity,
            "functional_equation": r.functional_equation, "notes": r.notes,
        });
    }
    if !a.eval_s.is_empty() {
        let values = a
            .eval_s
            .iter()
            .map(|&x| eval_point(&exp, x))
            .collect::<CliResult<Vec<_>>>()?;
        body["values"] = Value::Array(values);
    }
    if let (Some(w), Some(zs)) = (a.w, a.z_s) {
        let (w, zs) = (Complex64::new(w, 0.0), Complex64::new(zs, 0.0));
        let direct = mellin_z(&exp.form, w, zs)?;
        let series = exp.z_series(w, zs, 1e-12)?;
        let sign = f64::from(exp.wrap_sign());
        body["Z"] = json!({
            "w": w.re, "s": zs.re,
            "integral": {"value": direct.value.re * sign, "abs_error": direct.abs_error},
            "series": {"value": series.value.re * sign, "abs_error": series.abs_error},
        });
    }
    Ok(body)
}

fn eval_point(exp: &AbsExpansion, s: f64) -> CliResult<Value> {
    if exp.order() > CONTINUATION_MAX_ORDER {
        return Err(CliError::Core(qca_zeta::Error::Capability(format!(
            "gamma order {} exceeds the continuation cap {CONTINUATION_MAX_ORDER}",
            exp.order()
        ))));
    }
    let z = abs_zeta_log(exp, s)?;
    let e = z.to_eval();
    Ok(json!({
        "s": s, "value": e.value.re, "abs_error": e.abs_error,
        "ln_abs": z.ln_abs, "sign": z.sign, "method": e.method,
    }))
}

#[derive(Clone, Debug, Serialize)]
struct SweepRow {
    #[serde(rename = "N")]
    n: usize,
    case: Option<String>,
    #[serde(rename = "D")]
    weight: Option<i64>,
    #[serde(rename = "C")]
    sign: Option<i8>,
    form: Option<String>,
    automorphy_residual: Option<f64>,
    reciprocity_residual: Option<f64>,
    fe_residual: Option<f64>,
    error: Option<String>,
}

fn sweep_row(s: &Selection, n: usize, fe_s: f64, seed: u64) -> SweepRow {
    let mut row = SweepRow {
        n,
        case: None,
        weight: None,
        sign: None,
        form: None,
        automorphy_residual: None,
        reciprocity_residual: None,
        fe_residual: None,
        error: None,
    };
    let result = (|| -> CliResult<()> {
        let g = sites(s, n)?;
        row.reciprocity_residual = verify_theorem2(&g, 10, seed.wrapping_add(n as u64))
            .ok()
            .map(|r| r.max_residual);
        let (form, _, case) = form_of(s, n)?;
        row.case = Some(case.map_or("general", |c| c.label()).to_string());
        row.weight = Some(form.weight());
        row.sign = Some(form.sign());
        row.form = Some(form.to_string());
        row.automorphy_residual = Some(automorphy(&form, 16, seed).max_residual);
        if form.b() > 0 && form.b() <= CONTINUATION_MAX_ORDER {
            let exp = theorem1_expand(&form, wrap_exponent(s, n, &form)?)?;
            row.fe_residual = Some(functional_eq_residual(&exp, fe_s)?);
        }
        Ok(())
    })();
    if let Err(e) = result {
        row.error = Some(e.to_string());
    }
    row
}

fn sweep_body(s: &Selection, a: &SweepArgs, seed: u64) -> CliResult<Value> {
    if a.n_min == 0 || a.n_min > a.n_max {
        return Err(CliError::Input(format!(
            "empty N range {}..={}",
            a.n_min, a.n_max
        )));
    }
    let ns: Vec<usize> = (a.n_min..=a.n_max).collect();
    let jobs = a
        .jobs
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, usize::from))
        .clamp(1, ns.len());
    let next = AtomicUsize::new(0);
    let rows: Mutex<Vec<Option<SweepRow>>> = Mutex::new(vec![None; ns.len()]);
    std::thread::scope(|scope| {
        for _ in 0..jobs {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(&n) = ns.get(i) else { break };
                let row = sweep_row(s, n, a.fe_s, seed);
                rows.lock()
                    .expect("no worker panics while holding the lock")[i] = Some(row);
            });
        }
    });
    let rows: Vec<SweepRow> = rows
        .into_inner()
        .expect("workers joined")
        .into_iter()
        .map(|r| r.expect("every N processed"))
        .collect();
    Ok(json!({"rows": rows}))
}
