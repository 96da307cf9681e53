//! Every column representation does the same additions; only wall time
//! differs.
//!
//!     cargo run --release --example compare_representations -- 40

use std::time::Instant;

use sparse_reduce::column::RepresentationId;
use sparse_reduce::error::Result;
use sparse_reduce::generators::gen_shuffled;
use sparse_reduce::reduce::{reduce, ReduceOptions, ReducerId};

fn main() -> Result<()> {
    let n = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(30);
    let m = gen_shuffled(n, 7)?;
    println!(
        "shuffled complex on {n} vertices: {} cells, {} nonzeros",
        m.len(),
        m.nnz()
    );
    println!(
        "{:<10} {:>12} {:>10} {:>9}",
        "rep", "bitflips", "col_ops", "ms"
    );
    for rep in RepresentationId::all() {
        let start = Instant::now();
        let out = reduce(&m, ReducerId::Twist, rep, ReduceOptions::default());
        let ms = start.elapsed().as_secs_f64() * 1e3;
        println!(
            "{:<10} {:>12} {:>10} {:>9.1}",
            rep.to_string(),
            out.stats.bitflips,
            out.stats.col_ops,
            ms
        );
    }
    Ok(())
}
