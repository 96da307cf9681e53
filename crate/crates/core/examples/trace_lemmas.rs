//! Record a full addition trace and check the per-addition invariants.
//!
//!     cargo run --release --example trace_lemmas

use sparse_reduce::column::RepresentationId;
use sparse_reduce::error::Result;
use sparse_reduce::generators::{Family, GeneratorSpec};
use sparse_reduce::reduce::{reduce, ReduceOptions, ReducerId};
use sparse_reduce::verify::check_trace_lemmas;

fn main() -> Result<()> {
    for spec in [
        GeneratorSpec::new(Family::K2, 32, 0),
        GeneratorSpec::new(Family::K3, 32, 0),
        GeneratorSpec::new(Family::Shuffled, 10, 3),
    ] {
        let m = spec.generate()?;
        for r in [ReducerId::Retrospective, ReducerId::Twist] {
            let out = reduce(&m, r, RepresentationId::default(), ReduceOptions::traced());
            let report = check_trace_lemmas(out.trace.as_ref().unwrap(), &out.pairing, m.dims());
            println!(
                "{} {r}: {} additions ({} backward), interval flips {}, other {}",
                spec.label(),
                report.additions,
                report.backward_additions,
                report.interval_flips,
                report.non_interval_flips
            );
            // the invariants are stated for the retrospective reducer; other
            // reducers may break them
            for v in &report.violations {
                println!("  {:?} at {:?}: {}", v.lemma, v.seq, v.detail);
            }
        }
    }
    Ok(())
}
