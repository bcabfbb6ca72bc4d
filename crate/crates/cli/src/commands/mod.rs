mod asymp;
mod conjecture;
mod stats;
mod verify;

use std::path::PathBuf;

use serde::Serialize;
use smex_core::{MexParams, MomentKind};

use crate::cli::Command;
use crate::error::CliError;

/// Rendered output of a subcommand. `failure` is set when the output is
/// still worth emitting but the run must exit nonzero (a mismatch table).
#[derive(Debug)]
pub struct Report {
    pub body: String,
    pub out: Option<PathBuf>,
    pub failure: Option<CliError>,
}

impl Report {
    fn ok(body: String, out: Option<PathBuf>) -> Self {
        Self {
            body,
            out,
            failure: None,
        }
    }
}

pub fn dispatch(command: &Command) -> Result<Report, CliError> {
    match command {
        Command::Stats(args) => stats::run(args),
        Command::Verify(args) => verify::run(args),
        Command::Asymp(args) => asymp::run(args),
        Command::Conjecture(args) => conjecture::run(args),
    }
}

/// `params` block shared by JSON outputs.
#[derive(Debug, Serialize)]
struct ParamsBlock<'a> {
    kind: MomentKind,
    #[serde(flatten)]
    params: &'a MexParams,
}

fn params_comment(kind: MomentKind, p: &MexParams) -> String {
    format!("# params: kind={kind} {p}\n")
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("output serializes");
    s.push('\n');
    s
}
