mod cli;
mod commands;
mod config;
mod error;

use std::path::Path;
use std::process::ExitCode;
use std::time::{Instant, SystemTime, UNIX_EPOCH};

use clap::Parser;
use serde::Serialize;

use crate::cli::Cli;
use crate::error::CliError;

/// Written next to every `--out` file.
#[derive(Serialize)]
struct Meta<'a> {
    tool: &'static str,
    version: &'static str,
    argv: &'a [String],
    started_unix_ms: u128,
    elapsed_ms: u128,
    exit_code: u8,
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    std::fs::write(path, contents).map_err(|e| CliError::io(path.display().to_string(), e))
}

fn fail(e: &CliError) -> u8 {
    eprintln!("error: {e}");
    e.exit_code()
}

fn main() -> ExitCode {
    let started = Instant::now();
    let started_unix_ms = SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map_or(0, |d| d.as_millis());
    let argv: Vec<String> = std::env::args().collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let report = match commands::dispatch(&cli.command) {
        Ok(r) => r,
        Err(e) => return ExitCode::from(fail(&e)),
    };
    let code = report.failure.as_ref().map_or(0, CliError::exit_code);
    match &report.out {
        None => print!("{}", report.body),
        Some(path) => {
            let meta = Meta {
                tool: env!("CARGO_BIN_NAME"),
                version: env!("CARGO_PKG_VERSION"),
                argv: &argv,
                started_unix_ms,
                elapsed_ms: started.elapsed().as_millis(),
                exit_code: code,
            };
            let mut sidecar = path.as_os_str().to_owned();
            sidecar.push(".meta.json");
            let meta_json =
                serde_json::to_string_pretty(&meta).expect("metadata serializes") + "\n";
            let written = write_file(path, &report.body)
                .and_then(|()| write_file(Path::new(&sidecar), &meta_json));
            if let Err(e) = written {
                return ExitCode::from(fail(&e));
            }
        }
    }
    if let Some(e) = &report.failure {
        fail(e);
    }
    ExitCode::from(code)
}
