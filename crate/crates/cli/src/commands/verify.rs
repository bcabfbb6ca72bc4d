use std::thread;

use num_bigint::BigUint;
use serde::Serialize;
use smex_core::{MexParams, MomentEngine, MomentKind, MomentSequence};

use super::{to_json, Report};
use crate::cli::{Format, VerifyArgs};
use crate::config::Context;
use crate::error::CliError;

const KINDS: [MomentKind; 2] = [MomentKind::Sigma, MomentKind::Varsigma];

#[derive(Serialize)]
struct Grid {
    max_mod: u32,
    max_s: u32,
    max_r: u32,
    max_n: usize,
}

#[derive(Serialize)]
struct Mismatch {
    kind: MomentKind,
    #[serde(flatten)]
    params: MexParams,
    n: usize,
    oracle: String,
    gf: String,
}

#[derive(Serialize)]
struct Summary {
    grid: Grid,
    tuples: usize,
    values_checked: usize,
    mismatches: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    first_mismatch: Option<Mismatch>,
}

/// First `n` where brute force and the generating function disagree.
fn compare(oracle: &MomentSequence, gf: &MomentSequence) -> Option<(usize, BigUint, BigUint)> {
    oracle
        .values()
        .iter()
        .zip(gf.values())
        .enumerate()
        .find(|(_, (a, b))| a != b)
        .map(|(n, (a, b))| (n, a.clone(), b.clone()))
}

pub fn run(args: &VerifyArgs) -> Result<Report, CliError> {
    let ctx = Context::load(&args.common)?;
    let f = &ctx.file;
    let grid = Grid {
        max_mod: args.max_mod.or(f.max_mod).unwrap_or(4),
        max_s: args.max_s.or(f.max_s).unwrap_or(3),
        max_r: args.max_r.or(f.max_r).unwrap_or(2),
        max_n: args.max_n.or(f.max_n).unwrap_or(30),
    };
    if grid.max_mod == 0 || grid.max_s == 0 {
        return Err(CliError::Validation(
            "--max-mod and --max-s must be positive".into(),
        ));
    }
    ctx.check_truncation(grid.max_n)?;
    ctx.check_oracle(grid.max_n)?;

    let engine = MomentEngine::new(grid.max_n);
    let jobs: Vec<(MexParams, MomentKind)> = MexParams::grid(grid.max_mod, grid.max_s, grid.max_r)
        .into_iter()
        .flat_map(|p| KINDS.map(|k| (p, k)))
        .collect();
    let workers = thread::available_parallelism()
        .map_or(1, |n| n.get())
        .min(jobs.len().max(1));
    let chunk = jobs.len().div_ceil(workers).max(1);
    // results come back in grid order, so the first mismatch is deterministic
    let results: Vec<Option<(usize, BigUint, BigUint)>> = thread::scope(|scope| {
        let handles: Vec<_> = jobs
            .chunks(chunk)
            .enumerate()
            .map(|(c, part)| {
                let engine = &engine;
                scope.spawn(move || {
                    part.iter()
                        .enumerate()
                        .map(|(i, (p, kind))| {
                            let oracle = MomentSequence::from_oracle(*p, *kind, grid.max_n as u32);
                            let mut gf = engine.moments(p, *kind);
                            if args.inject_corruption && c == 0 && i == 0 {
                                gf.values_mut()[grid.max_n] += 1u32;
                            }
                            compare(&oracle, &gf)
                        })
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("verification worker panicked"))
            .collect()
    });

    let first = results.iter().position(Option::is_some);
    let values_per_job = grid.max_n + 1;
    let checked = first.map_or(jobs.len(), |i| i + 1) * values_per_job;
    let first_mismatch = first.map(|i| {
        let (n, oracle, gf) = results[i].clone().expect("position of a mismatch");
        let (params, kind) = jobs[i];
        Mismatch {
            kind,
            params,
            n,
            oracle: oracle.to_string(),
            gf: gf.to_string(),
        }
    });
    let failure = first_mismatch.as_ref().map(|m| {
        CliError::Mismatch(format!(
            "kind={} {} n={}: oracle={} gf={}",
            m.kind, m.params, m.n, m.oracle, m.gf
        ))
    });
    let summary = Summary {
        tuples: jobs.len() / KINDS.len(),
        values_checked: checked,
        mismatches: usize::from(first_mismatch.is_some()),
        first_mismatch,
        grid,
    };
    let body = match ctx.format {
        Format::Json => to_json(&summary),
        Format::Csv => {
            let mut s = String::new();
            if let Some(m) = &summary.first_mismatch {
                s.push_str(&format!(
                    "mismatch: kind={} {} n={} oracle={} gf={}\n",
                    m.kind, m.params, m.n, m.oracle, m.gf
                ));
            }
            s.push_str(&format!(
                "checked {} values over {} parameter tuples x {} kinds (M <= {}, s <= {}, r <= {}, n <= {}): {} mismatches\n",
                summary.values_checked,
                summary.tuples,
                KINDS.len(),
                summary.grid.max_mod,
                summary.grid.max_s,
                summary.grid.max_r,
                summary.grid.max_n,
                summary.mismatches
            ));
            s
        }
    };
    Ok(Report {
        body,
        out: ctx.out,
        failure,
    })
}
