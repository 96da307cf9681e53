//! Median counters over random shuffled 2-skeleta on 50 vertices.
//!
//!     cargo run --release --example shuffled_table -- 5

use rayon::prelude::*;
use sparse_reduce::column::RepresentationId;
use sparse_reduce::error::Result;
use sparse_reduce::generators::gen_shuffled;
use sparse_reduce::reduce::{reduce, ReduceOptions, ReducerId};
use sparse_reduce::trace::ReductionStats;

fn median(mut v: Vec<u64>) -> u64 {
    v.sort_unstable();
    v[v.len() / 2]
}

fn main() -> Result<()> {
    let seeds: u64 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(5);
    let matrices = (0..seeds)
        .map(|s| gen_shuffled(50, s))
        .collect::<Result<Vec<_>>>()?;
    println!(
        "{:<11} {:>10} {:>10} {:>12}",
        "algorithm", "fill_up", "col_ops", "bitflips"
    );
    for r in ReducerId::ALL {
        let stats: Vec<ReductionStats> = matrices
            .par_iter()
            .map(|m| reduce(m, r, RepresentationId::default(), ReduceOptions::default()).stats)
            .collect();
        let med = |f: fn(&ReductionStats) -> u64| median(stats.iter().map(f).collect());
        println!(
            "{:<11} {:>10} {:>10} {:>12}",
            r.to_string(),
            med(|s| s.fill_up),
            med(|s| s.col_ops),
            med(|s| s.bitflips)
        );
    }
    Ok(())
}
