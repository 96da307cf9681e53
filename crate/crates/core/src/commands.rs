//! The `sparse-reduce` command line: `reduce`, `generate`, `bench` and
//! `verify`.
//!
//! Exit codes: 0 on success, 1 when a `verify` check fails, 2 on usage,
//! parse or I/O errors.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::column::RepresentationId;
use crate::error::{Error, Result};
use crate::generators::{Family, GeneratorSpec};
use crate::matrix::FilteredBoundaryMatrix;
use crate::reduce::{reduce, reduce_maybe_dual, ReduceOptions, ReducerId};
use crate::trace::{write_trace, ReductionStats};
use crate::verify;

#[derive(Debug, Parser)]
#[command(
    name = "sparse-reduce",
    version,
    about = "Sparse Z2 boundary matrix reduction"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Reduce a boundary matrix and print its persistence pairs.
    Reduce(ReduceArgs),
    /// Write a generated filtration in the ASCII boundary format.
    Generate(GenerateArgs),
    /// Run a grid of reductions and write one CSV row per cell.
    Bench(BenchArgs),
    /// Run oracle, bound, lemma and slope checks and print a JSON report.
    Verify(VerifyArgs),
}

#[derive(Debug, clap::Args)]
pub struct ReduceArgs {
    /// Boundary matrix file.
    pub input: PathBuf,
    #[arg(short, long, default_value = "twist")]
    pub algorithm: ReducerId,
    #[arg(short, long, default_value = "vector")]
    pub representation: RepresentationId,
    /// Reduce the anti-transpose and map the pairs back.
    #[arg(long)]
    pub dualize: bool,
    /// Write one line per column addition (indices of the reduced matrix).
    #[arg(long)]
    pub trace: Option<PathBuf>,
    /// Write the stats JSON here instead of stderr.
    #[arg(long)]
    pub stats_out: Option<PathBuf>,
    /// Write the pairing here instead of stdout.
    #[arg(short, long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, clap::Args)]
pub struct GenerateArgs {
    pub family: Family,
    #[arg(short, long)]
    pub n: usize,
    #[arg(short, long, default_value_t = 0)]
    pub seed: u64,
    #[arg(short, long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, clap::Args)]
pub struct BenchArgs {
    #[arg(long, value_delimiter = ',', num_args = 0.., default_value = "k1,k2,k3,k4")]
    pub families: Vec<Family>,
    #[arg(long, value_delimiter = ',', num_args = 0.., default_value = "16,32,64")]
    pub sizes: Vec<usize>,
    #[arg(long, value_delimiter = ',', num_args = 0.., default_value = "standard,twist,swap,exhaustive,retro,mix")]
    pub algorithms: Vec<ReducerId>,
    #[arg(long, value_delimiter = ',', num_args = 0.., default_value = "vector")]
    pub representations: Vec<RepresentationId>,
    #[arg(long, value_delimiter = ',', num_args = 0.., default_value = "primal")]
    pub dual_modes: Vec<DualMode>,
    /// Seed of shuffled instances.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Worker threads; 0 uses all cores.
    #[arg(long, default_value_t = 0)]
    pub jobs: usize,
    #[arg(long)]
    pub out_csv: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum DualMode {
    Primal,
    Dual,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Check {
    Oracle,
    Bounds,
    Lemmas,
    Slopes,
}

#[derive(Debug, clap::Args)]
pub struct VerifyArgs {
    /// Boundary matrix file; alternatively use --family.
    #[arg(conflicts_with = "family", required_unless_present = "family")]
    pub input: Option<PathBuf>,
    #[arg(long)]
    pub family: Option<Family>,
    #[arg(short, long, default_value_t = 8)]
    pub n: usize,
    #[arg(short, long, default_value_t = 0)]
    pub seed: u64,
    #[arg(
        long,
        value_delimiter = ',',
        default_value = "oracle,bounds,lemmas,slopes"
    )]
    pub checks: Vec<Check>,
    /// Reducer whose bitflip growth the slope check fits.
    #[arg(short, long, default_value = "retro")]
    pub algorithm: ReducerId,
    #[arg(long, value_delimiter = ',', default_value = "16,32,64,128,256")]
    pub sizes: Vec<usize>,
    #[arg(short, long)]
    pub out: Option<PathBuf>,
}

/// Runs a parsed command line. `Ok(false)` means a check failed.
pub fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Reduce(a) => cmd_reduce(&a).map(|_| true),
        Command::Generate(a) => cmd_generate(&a).map(|_| true),
        Command::Bench(a) => cmd_bench(&a).map(|_| true),
        Command::Verify(a) => cmd_verify(&a),
    }
}

fn output(path: Option<&Path>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(io::stdout().lock()),
    })
}

fn load(path: &Path) -> Result<FilteredBoundaryMatrix> {
    FilteredBoundaryMatrix::load(File::open(path)?)
}

#[derive(Debug, Clone, Serialize)]
pub struct StatsRecord {
    #[serde(flatten)]
    pub stats: ReductionStats,
    pub wall_ms: f64,
}

pub fn cmd_reduce(a: &ReduceArgs) -> Result<()> {
    let m = load(&a.input)?;
    let target = if a.dualize {
        m.anti_transpose()
    } else {
        m.clone()
    };
    let opts = ReduceOptions {
        trace: a.trace.is_some(),
        ..ReduceOptions::default()
    };
    let start = Instant::now();
    let mut r = reduce(&target, a.algorithm, a.representation, opts);
    let wall_ms = start.elapsed().as_secs_f64() * 1e3;
    if a.dualize {
        r.pairing = r.pairing.map_dual(m.len());
    }

    let mut out = output(a.out.as_deref())?;
    out.write_all(r.pairing.to_text().as_bytes())?;
    out.flush()?;
    if let (Some(path), Some(trace)) = (&a.trace, &r.trace) {
        let mut w = BufWriter::new(File::create(path)?);
        write_trace(trace, &mut w)?;
        w.flush()?;
    }
    let record = StatsRecord {
        stats: r.stats,
        wall_ms,
    };
    let text = serde_json::to_string_pretty(&record).expect("stats serialize");
    match &a.stats_out {
        Some(p) => std::fs::write(p, text + "\n")?,
        None => eprintln!("{text}"),
    }
    Ok(())
}

pub fn cmd_generate(a: &GenerateArgs) -> Result<()> {
    let m = GeneratorSpec::new(a.family, a.n, a.seed).generate()?;
    let mut out = output(a.out.as_deref())?;
    out.write_all(m.save().as_bytes())?;
    out.flush()?;
    Ok(())
}

/// One CSV row of `bench`.
#[derive(Debug, Clone, Serialize)]
pub struct BenchRow {
    pub instance: String,
    pub n: usize,
    pub algorithm: String,
    pub representation: String,
    pub dualize: bool,
    pub fill_up: Option<u64>,
    pub col_ops: Option<u64>,
    pub bitflips: Option<u64>,
    pub forward_bitflips: Option<u64>,
    pub backward_bitflips: Option<u64>,
    pub peak_column_size: Option<u64>,
    pub wall_ms: Option<f64>,
    /// Empty unless the cell failed.
    pub error: String,
}

#[derive(Debug, Clone, Copy)]
pub struct BenchCell {
    pub spec: GeneratorSpec,
    pub algorithm: ReducerId,
    pub representation: RepresentationId,
    pub dualize: bool,
}

impl BenchCell {
    pub fn run(&self) -> BenchRow {
        let mut row = BenchRow {
            instance: self.spec.label(),
            n: self.spec.n,
            algorithm: self.algorithm.to_string(),
            representation: self.representation.to_string(),
            dualize: self.dualize,
            fill_up: None,
            col_ops: None,
            bitflips: None,
            forward_bitflips: None,
            backward_bitflips: None,
            peak_column_size: None,
            wall_ms: None,
            error: String::new(),
        };
        let m = match self.spec.generate() {
            Ok(m) => m,
            Err(e) => {
                row.error = e.to_string();
                return row;
            }
        };
        let target = if self.dualize { m.anti_transpose() } else { m };
        let start = Instant::now();
        let r = reduce(
            &target,
            self.algorithm,
            self.representation,
            ReduceOptions::default(),
        );
        let s = r.stats;
        row.wall_ms = Some(start.elapsed().as_secs_f64() * 1e3);
        row.fill_up = Some(s.fill_up);
        row.col_ops = Some(s.col_ops);
        row.bitflips = Some(s.bitflips);
        row.forward_bitflips = Some(s.forward_bitflips);
        row.backward_bitflips = Some(s.backward_bitflips);
        row.peak_column_size = Some(s.peak_column_size);
        row
    }
}

/// Cells in grid order: family, size, algorithm, representation, dual mode.
pub fn bench_grid(a: &BenchArgs) -> Vec<BenchCell> {
    let mut cells = Vec::new();
    for &family in &a.families {
        for &n in &a.sizes {
            for &algorithm in &a.algorithms {
                for &representation in &a.representations {
                    for &mode in &a.dual_modes {
                        cells.push(BenchCell {
                            spec: GeneratorSpec::new(family, n, a.seed),
                            algorithm,
                            representation,
                            dualize: mode == DualMode::Dual,
                        });
                    }
                }
            }
        }
    }
    cells
}

pub const BENCH_HEADER: [&str; 13] = [
    "instance",
    "n",
    "algorithm",
    "representation",
    "dualize",
    "fill_up",
    "col_ops",
    "bitflips",
    "forward_bitflips",
    "backward_bitflips",
    "peak_column_size",
    "wall_ms",
    "error",
];

pub fn cmd_bench(a: &BenchArgs) -> Result<()> {
    let cells = bench_grid(a);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(a.jobs)
        .build()
        .map_err(|e| Error::InvalidParameter(e.to_string()))?;
    let rows: Vec<BenchRow> = pool.install(|| cells.par_iter().map(BenchCell::run).collect());

    let mut w = csv::WriterBuilder::new()
        .has_headers(false)
        .from_writer(output(a.out_csv.as_deref())?);
    let csv_err = |e: csv::Error| Error::Io(io::Error::other(e));
    w.write_record(BENCH_HEADER).map_err(csv_err)?;
    for row in &rows {
        w.serialize(row).map_err(csv_err)?;
    }
    w.flush()?;
    Ok(())
}

/// Predicted bitflip growth exponent on the differentiating families.
pub fn expected_exponent(family: Family, reducer: ReducerId) -> Option<f64> {
    use Family::*;
    use ReducerId::*;
    match (family, reducer) {
        (K1, Retrospective) | (K2, Twist | Swap) | (K3, Swap) | (K4, Twist) => Some(1.0),
        (K1, Twist | Swap) | (K2, Retrospective) | (K3, Twist) | (K4, Swap) => Some(2.0),
        _ => None,
    }
}

/// Allowed distance between a fitted and a predicted exponent.
pub const SLOPE_TOLERANCE: f64 = 0.3;

#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub check: Check,
    /// `pass`, `fail` or `skipped`.
    pub status: &'static str,
    pub details: serde_json::Value,
}

impl CheckResult {
    fn new(check: Check, ok: bool, details: serde_json::Value) -> Self {
        Self {
            check,
            status: if ok { "pass" } else { "fail" },
            details,
        }
    }

    fn error(check: Check, e: &Error) -> Self {
        Self::new(check, false, json!({ "error": e.to_string() }))
    }
}

/// Runs the selected checks on `m`. `family` enables the slope check.
pub fn verify_instance(
    m: &FilteredBoundaryMatrix,
    family: Option<Family>,
    a: &VerifyArgs,
) -> Vec<CheckResult> {
    a.checks
        .iter()
        .map(|&check| match check {
            Check::Oracle => check_oracle(m),
            Check::Bounds => check_bounds(m),
            Check::Lemmas => check_lemmas(m),
            Check::Slopes => check_slopes(family, a.algorithm, &a.sizes),
        })
        .collect()
}

fn check_oracle(m: &FilteredBoundaryMatrix) -> CheckResult {
    let oracle = match verify::rank_oracle_pairs(m) {
        Ok(p) => p,
        Err(e) => return CheckResult::error(Check::Oracle, &e),
    };
    let mut mismatches = Vec::new();
    for reducer in ReducerId::ALL {
        for dualize in [false, true] {
            let r = reduce_maybe_dual(
                m,
                reducer,
                RepresentationId::default(),
                ReduceOptions::default(),
                dualize,
            );
            if r.pairing != oracle {
                mismatches.push(format!("{reducer} dualize={dualize}"));
            }
        }
    }
    CheckResult::new(
        Check::Oracle,
        mismatches.is_empty(),
        json!({ "pairs": oracle.num_pairs(), "mismatches": mismatches }),
    )
}

fn check_bounds(m: &FilteredBoundaryMatrix) -> CheckResult {
    let r = reduce(
        m,
        ReducerId::Retrospective,
        RepresentationId::default(),
        ReduceOptions::default(),
    );
    let b = r.stats.bitflips;
    let describe = |res: Result<verify::BoundCheck>| match res {
        Ok(c) => (true, json!({ "bound": c.bound, "slack": c.slack() })),
        Err(e) => (false, json!({ "error": e.to_string() })),
    };
    let (ok_main, main) = describe(verify::bound_main(&r.pairing, m.dims(), b));
    let (ok_int, interval) = describe(verify::bound_interval(&r.pairing, m.dims(), b));
    CheckResult::new(
        Check::Bounds,
        ok_main && ok_int,
        json!({ "bitflips": b, "main": main, "interval": interval }),
    )
}

fn check_lemmas(m: &FilteredBoundaryMatrix) -> CheckResult {
    let r = reduce(
        m,
        ReducerId::Retrospective,
        RepresentationId::default(),
        ReduceOptions::traced(),
    );
    let trace = r.trace.as_deref().unwrap_or_default();
    let report = verify::check_trace_lemmas(trace, &r.pairing, m.dims());
    CheckResult::new(
        Check::Lemmas,
        report.passed(),
        serde_json::to_value(&report).expect("report serialize"),
    )
}

fn check_slopes(family: Option<Family>, reducer: ReducerId, sizes: &[usize]) -> CheckResult {
    let Some(family) = family else {
        return CheckResult {
            check: Check::Slopes,
            status: "skipped",
            details: json!({ "reason": "slopes need --family" }),
        };
    };
    let series = match verify::scaling_series(family, reducer, sizes) {
        Ok(s) => s,
        Err(e) => return CheckResult::error(Check::Slopes, &e),
    };
    let slope = match verify::fit_loglog_slope(&series) {
        Ok(s) => s,
        Err(e) => return CheckResult::error(Check::Slopes, &e),
    };
    let details = json!({
        "family": family.name(),
        "algorithm": reducer.name(),
        "bitflips": series,
        "slope": slope,
        "expected": expected_exponent(family, reducer),
        "tolerance": SLOPE_TOLERANCE,
    });
    match expected_exponent(family, reducer) {
        Some(e) => CheckResult::new(Check::Slopes, (slope - e).abs() <= SLOPE_TOLERANCE, details),
        None => CheckResult {
            check: Check::Slopes,
            status: "skipped",
            details,
        },
    }
}

pub fn cmd_verify(a: &VerifyArgs) -> Result<bool> {
    let (m, instance) = match (&a.input, a.family) {
        (Some(path), _) => (load(path)?, path.display().to_string()),
        (None, Some(f)) => {
            let spec = GeneratorSpec::new(f, a.n, a.seed);
            (spec.generate()?, spec.label())
        }
        (None, None) => {
            return Err(Error::InvalidParameter(
                "verify needs an input file or --family".into(),
            ))
        }
    };
    let results = verify_instance(&m, a.family, a);
    let passed = results.iter().all(|r| r.status != "fail");
    let report = json!({
        "instance": instance,
        "cells": m.len(),
        "passed": passed,
        "checks": results,
    });
    let mut out = output(a.out.as_deref())?;
    serde_json::to_writer_pretty(&mut out, &report).expect("report serialize");
    writeln!(out)?;
    out.flush()?;
    Ok(passed)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expected_table_covers_ten_claims() {
        let claims = Family::ALL
            .iter()
            .flat_map(|&f| ReducerId::ALL.map(|r| expected_exponent(f, r)))
            .flatten()
            .count();
        assert_eq!(claims, 10);
    }

    #[test]
    fn grid_order() {
        let a = BenchArgs::try_parse_from_subcommand(&[
            "--families",
            "k1,k2",
            "--sizes",
            "4,8",
            "--algorithms",
            "twist",
            "--dual-modes",
            "primal,dual",
        ]);
        let cells = bench_grid(&a);
        assert_eq!(cells.len(), 8);
        assert_eq!(cells[0].spec.label(), "k1-n4");
        assert!(cells[1].dualize);
        assert_eq!(cells[2].spec.n, 8);
        assert_eq!(cells[4].spec.family, Family::K2);
    }

    #[test]
    fn failed_cell_keeps_error() {
        let row = BenchCell {
            spec: GeneratorSpec::new(Family::K1, 1, 0),
            algorithm: ReducerId::Twist,
            representation: RepresentationId::default(),
            dualize: false,
        }
        .run();
        assert!(row.bitflips.is_none());
        assert!(row.error.contains("at least 2"));
    }

    impl BenchArgs {
        fn try_parse_from_subcommand(args: &[&str]) -> BenchArgs {
            let mut full = vec!["sparse-reduce", "bench"];
            full.extend_from_slice(args);
            match Cli::try_parse_from(full).unwrap().command {
                Command::Bench(b) => b,
                _ => unreachable!(),
            }
        }
    }
}
