use std::fmt::Write;

use num_bigint::BigUint;
use serde::Serialize;
use smex_core::MomentEngine;

use super::{params_comment, to_json, ParamsBlock, Report};
use crate::cli::{Format, Method, Span, StatsArgs};
use crate::config::Context;
use crate::error::CliError;

#[derive(Serialize)]
struct Row {
    n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    gf: Option<String>,
    #[serde(rename = "match", skip_serializing_if = "Option::is_none")]
    matches: Option<bool>,
}

#[derive(Serialize)]
struct Output<'a> {
    params: ParamsBlock<'a>,
    method: &'static str,
    rows: Vec<Row>,
}

fn span(ctx: &Context, args: &StatsArgs) -> Result<Span, CliError> {
    if let Some(n) = args.n {
        return Ok(Span { lo: n, hi: n });
    }
    if let Some(r) = args.range {
        return Ok(r);
    }
    match (ctx.file.n, ctx.file.range()?) {
        (Some(_), Some(_)) => Err(CliError::Validation(
            "config file sets both `n` and `range`".into(),
        )),
        (Some(n), None) => Ok(Span { lo: n, hi: n }),
        (None, Some(r)) => Ok(r),
        (None, None) => Err(CliError::Validation(
            "one of --n or --range is required".into(),
        )),
    }
}

pub fn run(args: &StatsArgs) -> Result<Report, CliError> {
    let ctx = Context::load(&args.common)?;
    let kind = ctx.kind(&args.moment)?;
    let p = ctx.params(&args.moment)?;
    let span = span(&ctx, args)?;
    let method = args.method.or(ctx.file.method).unwrap_or(Method::Gf);
    ctx.check_truncation(span.hi)?;
    let ns = span.lo..=span.hi;

    let oracle: Option<Vec<BigUint>> = match method {
        Method::Gf => None,
        _ => {
            ctx.check_oracle(span.hi)?;
            Some(ns.clone().map(|n| kind.oracle(&p, n as u32)).collect())
        }
    };
    let gf: Option<Vec<BigUint>> = match method {
        Method::Oracle => None,
        _ => {
            let seq = MomentEngine::new(span.hi).moments(&p, kind);
            Some(seq.values()[span.lo..=span.hi].to_vec())
        }
    };

    let rows: Vec<Row> = ns
        .enumerate()
        .map(|(i, n)| {
            let o = oracle.as_ref().map(|v| &v[i]);
            let g = gf.as_ref().map(|v| &v[i]);
            Row {
                n,
                oracle: o.map(|v| v.to_string()),
                gf: g.map(|v| v.to_string()),
                matches: o.zip(g).map(|(a, b)| a == b),
            }
        })
        .collect();
    let failure = rows
        .iter()
        .find(|row| row.matches == Some(false))
        .map(|row| {
            CliError::Mismatch(format!(
                "kind={kind} {p} n={}: oracle={} gf={}",
                row.n,
                row.oracle.as_deref().unwrap_or(""),
                row.gf.as_deref().unwrap_or("")
            ))
        });

    let body = match ctx.format {
        Format::Json => to_json(&Output {
            params: ParamsBlock { kind, params: &p },
            method: match method {
                Method::Oracle => "oracle",
                Method::Gf => "gf",
                Method::Both => "both",
            },
            rows,
        }),
        Format::Csv => {
            let mut s = params_comment(kind, &p);
            s.push_str(match method {
                Method::Both => "n,oracle,gf,match\n",
                _ => "n,value\n",
            });
            for row in &rows {
                let _ = match (&row.oracle, &row.gf, row.matches) {
                    (Some(o), Some(g), Some(m)) => writeln!(s, "{},{o},{g},{m}", row.n),
                    (Some(v), None, _) | (None, Some(v), _) => writeln!(s, "{},{v}", row.n),
                    _ => unreachable!("at least one method ran"),
                };
            }
            s
        }
    };
    Ok(Report {
        body,
        out: ctx.out,
        failure,
    })
}
