//! Reduce the anti-transposed (coboundary) matrix and map the pairs back.
//!
//!     cargo run --example dualize

use sparse_reduce::column::RepresentationId;
use sparse_reduce::error::Result;
use sparse_reduce::generators::{Family, GeneratorSpec};
use sparse_reduce::reduce::{reduce, reduce_dual, ReduceOptions, ReducerId};

fn main() -> Result<()> {
    for family in [Family::K1, Family::K2, Family::K3, Family::K4] {
        let m = GeneratorSpec::new(family, 32, 0).generate()?;
        let rep = RepresentationId::default();
        let primal = reduce(&m, ReducerId::Twist, rep, ReduceOptions::default());
        let dual = reduce_dual(&m, ReducerId::Twist, rep, ReduceOptions::default());
        assert_eq!(primal.pairing, dual.pairing);
        println!(
            "{family}: {} pairs, bitflips primal {} dual {}",
            primal.pairing.num_pairs(),
            primal.stats.bitflips,
            dual.stats.bitflips
        );
    }

    // the anti-transpose is an involution
    let m = GeneratorSpec::new(Family::Shuffled, 6, 1).generate()?;
    assert_eq!(m.anti_transpose().anti_transpose(), m);
    Ok(())
}
