//! Compare measured bit flips of the retrospective reducer against the two
//! output-sensitive bounds.
//!
//!     cargo run --release --example output_bounds

use sparse_reduce::column::RepresentationId;
use sparse_reduce::error::Result;
use sparse_reduce::generators::{Family, GeneratorSpec};
use sparse_reduce::reduce::{reduce, ReduceOptions, ReducerId};
use sparse_reduce::verify::{bound_interval, bound_main};

fn main() -> Result<()> {
    println!(
        "{:<16} {:>10} {:>12} {:>12}",
        "instance", "bitflips", "main", "interval"
    );
    for family in Family::ALL {
        for n in [8, 16, 32] {
            let spec = GeneratorSpec::new(family, n, 0);
            let m = spec.generate()?;
            let out = reduce(
                &m,
                ReducerId::Retrospective,
                RepresentationId::default(),
                ReduceOptions::default(),
            );
            let b = out.stats.bitflips;
            let main = bound_main(&out.pairing, m.dims(), b)?;
            let interval = bound_interval(&out.pairing, m.dims(), b)?;
            println!(
                "{:<16} {:>10} {:>12} {:>12}",
                spec.label(),
                b,
                main.bound,
                interval.bound
            );
        }
    }
    Ok(())
}
