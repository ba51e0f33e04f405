use hardy_means::ladder::{run_ladder, speedup, LadderConfig};
use hardy_means::table::{format_shortest, Cell, Table};
use hardy_means::verify::{run_verify, VerifyConfig};
use hardy_means::{
    classification_table, classify, cmn_mean_fast, cmn_mean_sampled, hardy_checkpoints,
    log_checkpoints, sharpness_grid, CmnEvalReport, Error, MeanParams, Result, SequenceFamily,
    Verdict,
};
use rayon::prelude::*;

use crate::args::{
    BenchArgs, ClassifyArgs, EstimateArgs, Format, HardySumArgs, MeanArgs, VerifyArgs,
};
use crate::input;

/// Bench fails unless enumeration is at least this many times slower at (20, 5).
const REQUIRED_SPEEDUP: f64 = 10.0;

/// Caveat printed with every open verdict.
pub const OPEN_CAVEAT: &str = "the possible answer may depend on k";

/// Rendered output and whether a checked property failed.
pub struct Outcome {
    pub text: String,
    pub failed: bool,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome {
            text,
            failed: false,
        }
    }
}

fn render(table: &Table, format: Format) -> String {
    match format {
        Format::Csv => table.to_csv(),
        Format::Json => table.to_json(),
        Format::Plain => table.to_plain(),
    }
}

fn opt_float(x: Option<f64>) -> Cell {
    x.map_or_else(|| Cell::from(""), Cell::from)
}

pub fn mean(args: &MeanArgs, format: Option<Format>) -> Result<Outcome> {
    let params = MeanParams::new(args.k, args.s, args.q)?;
    let v = match (&args.data, &args.file) {
        (Some(data), _) => input::parse_data(data)?,
        (None, Some(path)) => input::read_vector(path)?,
        (None, None) => return Err(Error::domain("no input vector")),
    };
    let report = match args.samples {
        Some(samples) if params.k() < v.len() => cmn_mean_sampled(&params, &v, samples, args.seed)?,
        _ => cmn_mean_fast(&params, &v)?,
    };
    let format = format.unwrap_or(Format::Plain);
    if format == Format::Plain {
        return Ok(Outcome::ok(plain_report(&params, &report, args.seed)));
    }
    let mut table = Table::new(["k", "s", "q", "n", "value", "method", "samples", "stderr"])
        .with_meta("command", "mean");
    if let Some(c) = &report.caveat {
        table = table.with_meta("caveat", c.as_str());
    }
    if report.samples.is_some() {
        table = table.with_meta("seed", args.seed);
    }
    table.push_row(vec![
        params.k().into(),
        params.s().to_string().into(),
        params.q().to_string().into(),
        v.len().into(),
        report.value.into(),
        report.method.to_string().into(),
        report.samples.map_or_else(|| Cell::from(""), Cell::from),
        opt_float(report.stderr_estimate),
    ]);
    Ok(Outcome::ok(render(&table, format)))
}

fn plain_report(params: &MeanParams, r: &CmnEvalReport, seed: u64) -> String {
    let mut out = format!("M({params}) = {}", format_shortest(r.value));
    match (r.samples, r.stderr_estimate) {
        (Some(n), Some(se)) => out.push_str(&format!(
            " +- {} ({}, {n} samples, seed {seed})",
            format_shortest(se),
            r.method
        )),
        _ => out.push_str(&format!(" ({})", r.method)),
    }
    out.push('\n');
    if let Some(c) = &r.caveat {
        out.push_str(&format!("note: {c}\n"));
    }
    out
}

pub fn hardy_sum(args: &HardySumArgs, format: Option<Format>) -> Result<Outcome> {
    let rows = hardy_checkpoints(
        &args.mean,
        &args.family,
        args.n,
        &log_checkpoints(args.n),
        args.allow_nonsummable,
    )?;
    let mut table = Table::new(["n", "partial_sum", "partial_norm", "ratio"])
        .with_meta("command", "hardy-sum")
        .with_meta("mean", args.mean.to_string())
        .with_meta("family", args.family.to_string())
        .with_meta("N", args.n);
    for r in &rows {
        table.push_row(vec![
            r.n.into(),
            r.partial_sum.into(),
            r.partial_norm.into(),
            r.ratio.into(),
        ]);
    }
    Ok(Outcome::ok(render(&table, format.unwrap_or(Format::Csv))))
}

pub fn estimate_constant(args: &EstimateArgs, format: Option<Format>) -> Result<Outcome> {
    let n0s = if args.n0.is_empty() {
        sharpness_grid(args.n)
    } else {
        args.n0.clone()
    };
    if let Some(bad) = n0s.iter().find(|&&n0| !(1..=args.n).contains(&n0)) {
        return Err(Error::domain(format!(
            "need 1 <= N0 <= N, got N0 = {bad}, N = {}",
            args.n
        )));
    }
    let checkpoints = log_checkpoints(args.n);
    let sweeps = n0s
        .par_iter()
        .map(|&n0| {
            let family = SequenceFamily::HarmonicTruncated { n0 };
            let marks: Vec<usize> = checkpoints.iter().copied().filter(|&c| c >= n0).collect();
            hardy_checkpoints(&args.mean, &family, args.n, &marks, false).map(|rows| (n0, rows))
        })
        .collect::<Result<Vec<_>>>()?;

    let mut best = (0usize, 0usize, f64::NEG_INFINITY);
    for (n0, rows) in &sweeps {
        for r in rows {
            if r.ratio > best.2 {
                best = (*n0, r.n, r.ratio);
            }
        }
    }
    let mut table = Table::new(["n0", "n", "partial_sum", "partial_norm", "ratio", "is_max"])
        .with_meta("command", "estimate-constant")
        .with_meta("mean", args.mean.to_string())
        .with_meta("N", args.n)
        .with_meta("max_ratio", best.2)
        .with_meta("max_n0", best.0)
        .with_meta("max_n", best.1);
    for (n0, rows) in &sweeps {
        for r in rows {
            let is_max = (*n0, r.n) == (best.0, best.1);
            table.push_row(vec![
                (*n0).into(),
                r.n.into(),
                r.partial_sum.into(),
                r.partial_norm.into(),
                r.ratio.into(),
                usize::from(is_max).into(),
            ]);
        }
    }
    Ok(Outcome::ok(render(&table, format.unwrap_or(Format::Csv))))
}

pub fn classify_cmd(args: &ClassifyArgs, format: Option<Format>) -> Result<Outcome> {
    let columns = ["k", "s", "q", "verdict", "reason", "citation"];
    if let Some(point) = &args.point {
        let params = input::parse_point(point)?;
        let c = classify(&params);
        let format = format.unwrap_or(Format::Plain);
        if format == Format::Plain {
            let mut out = format!(
                "M({params}): {} ({})\n{}\n",
                c.verdict,
                c.reason,
                c.citation()
            );
            if c.verdict == Verdict::Open {
                out.push_str(&format!("caveat: {OPEN_CAVEAT}\n"));
            }
            return Ok(Outcome::ok(out));
        }
        let mut table = Table::new(columns).with_meta("command", "classify");
        if c.verdict == Verdict::Open {
            table = table.with_meta("caveat", OPEN_CAVEAT);
        }
        table.push_row(classified_row(&params, c.verdict, c.reason, c.citation()));
        return Ok(Outcome::ok(render(&table, format)));
    }

    let ks = input::parse_k_grid(&args.grid_k)?;
    let s_grid = input::parse_exponent_grid(&args.grid_s)?;
    let q_grid = input::parse_exponent_grid(&args.grid_q)?;
    let points = classification_table(ks, &s_grid, &q_grid);
    let mut table = Table::new(columns).with_meta("command", "classify");
    if points
        .iter()
        .any(|p| p.classification.verdict == Verdict::Open)
    {
        table = table.with_meta("caveat", OPEN_CAVEAT);
    }
    for p in &points {
        let c = p.classification;
        table.push_row(classified_row(&p.params, c.verdict, c.reason, c.citation()));
    }
    Ok(Outcome::ok(render(&table, format.unwrap_or(Format::Csv))))
}

fn classified_row(
    params: &MeanParams,
    verdict: Verdict,
    reason: hardy_means::Reason,
    citation: &str,
) -> Vec<Cell> {
    vec![
        params.k().into(),
        params.s().to_string().into(),
        params.q().to_string().into(),
        verdict.to_string().into(),
        reason.to_string().into(),
        citation.into(),
    ]
}

pub fn verify(args: &VerifyArgs, format: Option<Format>) -> Result<Outcome> {
    let mut cfg = if args.quick {
        VerifyConfig::quick()
    } else {
        VerifyConfig::full()
    };
    if let Some(seed) = args.seed {
        cfg.seed = seed;
    }
    let results = run_verify(&cfg);
    let failed = results.iter().any(|r| !r.passed);
    let mut table = Table::new(["property", "status", "cases", "worst_residual", "detail"])
        .with_meta("command", "verify")
        .with_meta("mode", if args.quick { "quick" } else { "full" })
        .with_meta("seed", cfg.seed)
        .with_meta("status", if failed { "fail" } else { "pass" });
    for r in &results {
        table.push_row(vec![
            r.name.into(),
            if r.passed { "pass" } else { "fail" }.into(),
            r.cases.into(),
            r.worst_residual.into(),
            r.detail.as_str().into(),
        ]);
    }
    Ok(Outcome {
        text: render(&table, format.unwrap_or(Format::Plain)),
        failed,
    })
}

pub fn bench(args: &BenchArgs, format: Option<Format>) -> Result<Outcome> {
    let cfg = LadderConfig {
        samples: args.samples,
        seed: args.seed,
        ..LadderConfig::default()
    };
    let rows = run_ladder(&cfg)?;
    let ratio = speedup(&rows, 20, 5);
    let failed = !ratio.is_some_and(|r| r >= REQUIRED_SPEEDUP);
    let mut table = Table::new([
        "method",
        "n",
        "k",
        "time",
        "value",
        "rel_error_vs_best",
        "status",
    ])
    .with_meta("command", "bench")
    .with_meta("samples", cfg.samples)
    .with_meta("seed", cfg.seed)
    .with_meta("speedup_n20_k5", ratio.unwrap_or(f64::NAN))
    .with_meta("required_speedup", REQUIRED_SPEEDUP);
    for r in &rows {
        table.push_row(vec![
            r.method.to_string().into(),
            r.n.into(),
            r.k.into(),
            opt_float(r.seconds),
            opt_float(r.value),
            opt_float(r.rel_error_vs_best),
            r.status.as_str().into(),
        ]);
    }
    Ok(Outcome {
        text: render(&table, format.unwrap_or(Format::Csv)),
        failed,
    })
}
