//! Command-line front end for the `qca-zeta` library: argument model,
//! verification suites, report envelopes and a content-addressed cache.

pub mod angle;
pub mod cache;
pub mod commands;
pub mod error;
pub mod family;
pub mod report;
pub mod suites;

use std::time::Instant;

use serde_json::{json, Value};

pub use commands::{Cli, Command};
pub use error::{CliError, CliResult, ExitStatus};
pub use report::{CacheStatus, Check, Envelope, Format, SuiteResult};

use cache::{cache_key, Cache, Lookup};
use report::{Timing, SCHEMA_VERSION};

/// The outcome of one invocation.
pub struct Outcome {
    pub status: ExitStatus,
    pub envelope: Envelope,
    /// Non-fatal problems, such as a corrupt cache entry.
    pub warnings: Vec<String>,
}

fn envelope(command: &str, cache: CacheStatus, started: Instant, body: Value) -> Envelope {
    Envelope {
        schema_version: SCHEMA_VERSION,
        command: command.to_string(),
        cache,
        timing: Timing {
            total_ms: started.elapsed().as_secs_f64() * 1e3,
        },
        body,
    }
}

fn status_of(body: &Value) -> ExitStatus {
    match body["exit_code"].as_u64() {
        Some(1) => ExitStatus::VerifyFailed,
        _ => ExitStatus::Ok,
    }
}

/// Run a parsed command line, consulting the cache when one is configured.
/// Failed runs are reported in the envelope and never cached.
pub fn execute(cli: &Cli) -> Outcome {
    let started = Instant::now();
    let name = cli.command.name();
    let mut warnings = Vec::new();
    let fail = |e: CliError, warnings: Vec<String>| Outcome {
        status: e.status(),
        envelope: envelope(
            name,
            CacheStatus::Disabled,
            started,
            json!({"error": {"kind": e.kind(), "message": e.to_string()}, "exit_code": e.status().code()}),
        ),
        warnings,
    };
    let prepared = match cli.command.prepare(cli.seed) {
        Ok(p) => p,
        Err(e) => return fail(e, warnings),
    };
    let cache = if cli.no_cache {
        None
    } else {
        Cache::resolve(cli.cache_dir.as_deref())
    };
    let key = cache_key(prepared.name, &prepared.config);
    if let Some(c) = &cache {
        match c.lookup(&key) {
            Ok(Lookup::Hit(body)) => {
                return Outcome {
                    status: status_of(&body),
                    envelope: envelope(name, CacheStatus::Hit, started, body),
                    warnings,
                }
            }
            Ok(Lookup::Corrupt(why)) => warnings.push(format!(
                "ignoring unreadable cache entry {why}; recomputing"
            )),
            Ok(Lookup::Miss) => {}
            Err(e) => return fail(e, warnings),
        }
    }
    let (result, status) = match prepared.run(&cli.command, cli.seed) {
        Ok(r) => r,
        Err(e) => return fail(e, warnings),
    };
    let body = json!({"config": prepared.config, "result": result, "exit_code": status.code()});
    let cache_status = match &cache {
        Some(c) => match c.store(&key, &body) {
            Ok(()) => CacheStatus::Miss,
            Err(e) => return fail(e, warnings),
        },
        None => CacheStatus::Disabled,
    };
    Outcome {
        status,
        envelope: envelope(name, cache_status, started, body),
        warnings,
    }
}

/// The report text in the requested format.
pub fn render(outcome: &Outcome, format: Format) -> CliResult<String> {
    match format {
        Format::Json => Ok(serde_json::to_string_pretty(&outcome.envelope)? + "\n"),
        Format::Csv => {
            let body = &outcome.envelope.body;
            match body.get("result") {
                Some(result) => report::to_csv(result),
                None => Err(CliError::Input(
                    body["error"]["message"]
                        .as_str()
                        .unwrap_or("failed run")
                        .to_string(),
                )),
            }
        }
    }
}
