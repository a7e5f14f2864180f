use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use qca_zeta_cli::{execute, render, Cli, CliError, ExitStatus};

fn emit(cli: &Cli, text: &str) -> Result<(), CliError> {
    match &cli.out {
        Some(path) => {
            std::fs::write(path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
        }
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| CliError::Io(e.to_string())),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(ExitStatus::InvalidInput.code())
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let outcome = execute(&cli);
    for w in &outcome.warnings {
        eprintln!("warning: {w}");
    }
    if let Some(err) = outcome.envelope.body.get("error") {
        eprintln!("error: {}", err["message"].as_str().unwrap_or("unknown"));
    }
    if let Some(suites) = outcome.envelope.body["result"]["suites"].as_array() {
        for s in suites {
            for c in s["checks"]
                .as_array()
                .into_iter()
                .flatten()
                .filter(|c| c["pass"] == false)
            {
                eprintln!(
                    "FAIL {} {} inputs={} expected={} actual={}",
                    s["suite"], c["name"], c["inputs"], c["expected"], c["actual"]
                );
            }
        }
    }
    let text = match render(&outcome, cli.format) {
        Ok(t) => t,
        Err(e) if outcome.status == ExitStatus::Ok => {
            eprintln!("error: {e}");
            return ExitCode::from(e.status().code());
        }
        // The run already failed; fall back to the JSON envelope.
        Err(_) => render(&outcome, qca_zeta_cli::Format::Json).unwrap_or_default(),
    };
    if let Err(e) = emit(&cli, &text) {
        eprintln!("error: {e}");
        return ExitCode::from(e.status().code());
    }
    ExitCode::from(outcome.status.code())
}
