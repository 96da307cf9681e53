//! Run a small benchmark grid in parallel and write it as CSV to stdout.
//!
//!     cargo run --release --example bench_grid

use clap::Parser;
use rayon::prelude::*;
use sparse_reduce::commands::{bench_grid, Cli, Command, BENCH_HEADER};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cli = Cli::parse_from([
        "sparse-reduce",
        "bench",
        "--families",
        "k1,k4,shuffled",
        "--sizes",
        "8,16,32",
        "--algorithms",
        "twist,retro",
    ]);
    let Command::Bench(args) = cli.command else {
        unreachable!()
    };
    let rows: Vec<_> = bench_grid(&args).par_iter().map(|c| c.run()).collect();
    let mut w = csv::WriterBuilder::new()
        .has_headers(false)
        .from_writer(std::io::stdout());
    w.write_record(BENCH_HEADER)?;
    for row in rows {
        w.serialize(row)?;
    }
    w.flush()?;
    Ok(())
}
