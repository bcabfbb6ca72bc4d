use serde::Serialize;
use smex_core::asymptotics::{
    corollary_deviation, corollary_ratio, ratio_table, write_ratio_csv, RatioRow,
};
use smex_core::{AsymptoticError, MexParams, MomentEngine, MomentKind};

use super::{to_json, ParamsBlock, Report};
use crate::cli::{AsympArgs, Format};
use crate::config::Context;
use crate::error::CliError;

const DEFAULT_NS: [usize; 4] = [500, 1000, 2000, 4096];

#[derive(Serialize)]
struct RatioOut<'a> {
    params: ParamsBlock<'a>,
    rows: Vec<RatioJson>,
}

#[derive(Serialize)]
struct RatioJson {
    n: usize,
    exact: String,
    asymp_log: f64,
    ratio: f64,
}

#[derive(Serialize)]
struct CorollaryOut<'a> {
    params: ParamsBlock<'a>,
    #[serde(rename = "A_prime")]
    residue_prime: u32,
    rows: Vec<CorollaryRow>,
}

/// `ratio` and `deviation` are `None` where `value_b` is zero.
#[derive(Serialize)]
struct CorollaryRow {
    n: usize,
    value_a: String,
    value_b: String,
    ratio: Option<f64>,
    deviation: Option<f64>,
}

fn undefined_at_zero(r: Result<f64, AsymptoticError>) -> Result<Option<f64>, CliError> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(AsymptoticError::ZeroDenominator(_)) => Ok(None),
        Err(e) => Err(CliError::Validation(e.to_string())),
    }
}

fn cell(v: Option<f64>) -> String {
    v.map_or_else(String::new, |x| format!("{x:.15e}"))
}

pub fn run(args: &AsympArgs) -> Result<Report, CliError> {
    let ctx = Context::load(&args.common)?;
    let kind = ctx.kind(&args.moment)?;
    let p = ctx.params(&args.moment)?;
    let ns: Vec<usize> = args
        .ns
        .clone()
        .or_else(|| ctx.file.ns.clone())
        .unwrap_or_else(|| DEFAULT_NS.to_vec());
    if ns.is_empty() {
        return Err(CliError::Validation("--ns is empty".into()));
    }
    if ns.contains(&0) {
        return Err(CliError::Validation(
            "every n in --ns must be at least 1".into(),
        ));
    }
    let max_n = *ns.iter().max().expect("nonempty");
    ctx.check_truncation(max_n)?;
    let engine = MomentEngine::new(max_n);

    let body = match args.residue_prime.or(ctx.file.residue_prime) {
        None => ratios(&ctx, &engine, kind, &p, &ns)?,
        Some(a2) => corollary(&ctx, &engine, kind, &p, a2, &ns)?,
    };
    Ok(Report::ok(body, ctx.out))
}

fn ratios(
    ctx: &Context,
    engine: &MomentEngine,
    kind: MomentKind,
    p: &MexParams,
    ns: &[usize],
) -> Result<String, CliError> {
    let seq = engine.moments(p, kind);
    let rows: Vec<RatioRow<f64>> =
        ratio_table(&seq, ns).map_err(|e| CliError::Validation(e.to_string()))?;
    Ok(match ctx.format {
        Format::Csv => {
            let mut buf = Vec::new();
            write_ratio_csv(&mut buf, kind, p, &rows).expect("writing to memory");
            String::from_utf8(buf).expect("ascii output")
        }
        Format::Json => to_json(&RatioOut {
            params: ParamsBlock { kind, params: p },
            rows: rows
                .into_iter()
                .map(|r| RatioJson {
                    n: r.n,
                    exact: r.exact.to_string(),
                    asymp_log: r.asymp_log,
                    ratio: r.ratio,
                })
                .collect(),
        }),
    })
}

fn corollary(
    ctx: &Context,
    engine: &MomentEngine,
    kind: MomentKind,
    p: &MexParams,
    a2: u32,
    ns: &[usize],
) -> Result<String, CliError> {
    let p2 = p.with_residue(a2)?;
    let (a, b) = (engine.moments(p, kind), engine.moments(&p2, kind));
    let rows = ns
        .iter()
        .map(|&n| {
            Ok(CorollaryRow {
                n,
                value_a: a.values()[n].to_string(),
                value_b: b.values()[n].to_string(),
                ratio: undefined_at_zero(corollary_ratio(&a, &b, n))?,
                deviation: undefined_at_zero(corollary_deviation(&a, &b, n))?,
            })
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    Ok(match ctx.format {
        Format::Csv => {
            let mut s = format!("# params: kind={kind} {p} A'={a2}\n");
            s.push_str("n,value_a,value_b,ratio,deviation\n");
            for r in &rows {
                s.push_str(&format!(
                    "{},{},{},{},{}\n",
                    r.n,
                    r.value_a,
                    r.value_b,
                    r.ratio.map_or_else(String::new, |x| format!("{x:.15}")),
                    cell(r.deviation)
                ));
            }
            s
        }
        Format::Json => to_json(&CorollaryOut {
            params: ParamsBlock { kind, params: p },
            residue_prime: a2,
            rows,
        }),
    })
}
