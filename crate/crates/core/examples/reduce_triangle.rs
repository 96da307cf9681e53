//! Reduce the boundary matrix of a filled triangle and print its barcode.
//!
//!     cargo run --example reduce_triangle

use sparse_reduce::betti::BettiProfile;
use sparse_reduce::column::RepresentationId;
use sparse_reduce::error::Result;
use sparse_reduce::matrix::FilteredBoundaryMatrix;
use sparse_reduce::reduce::{reduce, ReduceOptions, ReducerId};
use sparse_reduce::trace::write_trace;

// three vertices, three edges, one triangle
const TRIANGLE: &str = "0\n0\n0\n1 1 2\n1 1 3\n1 2 3\n2 4 5 6\n";

fn main() -> Result<()> {
    let m = FilteredBoundaryMatrix::load_str(TRIANGLE)?;
    let out = reduce(
        &m,
        ReducerId::Retrospective,
        RepresentationId::default(),
        ReduceOptions::traced(),
    );

    print!("{}", out.pairing.to_text());
    println!("{:?}", out.stats);

    let betti = BettiProfile::new(&out.pairing, m.len());
    println!("betti numbers per prefix: {:?}", betti.betti_numbers());

    println!("trace (seq src dst size phase):");
    write_trace(out.trace.as_deref().unwrap_or_default(), std::io::stdout())?;
    Ok(())
}
