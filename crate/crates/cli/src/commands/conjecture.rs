use smex_core::conjectures::{residue_sequences, scan_bias, scan_log_concavity};
use smex_core::MomentEngine;

use super::Report;
use crate::cli::{ConjectureArgs, Format, Scan, ScanArgs, Span};
use crate::config::Context;
use crate::error::CliError;

const DEFAULT_RANGE: Span = Span { lo: 1, hi: 100 };

pub fn run(args: &ConjectureArgs) -> Result<Report, CliError> {
    let (scan, is_bias) = match &args.scan {
        Scan::Logconcave(a) => (a, false),
        Scan::Bias(a) => (a, true),
    };
    let ctx = Context::load(&scan.common)?;
    if ctx.format == Format::Csv && (scan.common.format.is_some() || ctx.file.format.is_some()) {
        return Err(CliError::Validation(
            "conjecture reports are JSON only".into(),
        ));
    }
    let range = range(&ctx, scan)?;
    let kind = ctx.kind(&scan.moment)?;
    let scan_err = |e: smex_core::ScanError| CliError::Validation(e.to_string());

    let report = if is_bias {
        // every residue is scanned, so --res plays no part
        let f = &ctx.file;
        let m = &scan.moment;
        let (s, modulus, r) = (
            m.s.or(f.s).unwrap_or(1),
            m.modulus.or(f.modulus).unwrap_or(1),
            m.r.or(f.r).unwrap_or(0),
        );
        ctx.check_truncation(range.hi)?;
        let engine = MomentEngine::new(range.hi);
        let seqs = residue_sequences(&engine, kind, s, modulus, r)?;
        scan_bias(&seqs, range.lo, range.hi).map_err(scan_err)?
    } else {
        let p = ctx.params(&scan.moment)?;
        ctx.check_truncation(range.hi)?;
        let engine = MomentEngine::new(range.hi);
        scan_log_concavity(&engine.moments(&p, kind), range.lo, range.hi).map_err(scan_err)?
    };
    let mut body = report.to_json_pretty();
    body.push('\n');
    Ok(Report::ok(body, ctx.out))
}

fn range(ctx: &Context, scan: &ScanArgs) -> Result<Span, CliError> {
    let span = match scan.range {
        Some(s) => s,
        None => ctx.file.range()?.unwrap_or(DEFAULT_RANGE),
    };
    if span.lo == 0 {
        return Err(CliError::Validation("range must start at n >= 1".into()));
    }
    Ok(span)
}
