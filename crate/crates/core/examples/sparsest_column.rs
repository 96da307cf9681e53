//! How far is a reduced column from the sparsest column with the same pivot?
//! Brute force over all combinations of earlier reduced columns.
//!
//!     cargo run --release --example sparsest_column

use sparse_reduce::column::RepresentationId;
use sparse_reduce::error::Result;
use sparse_reduce::generators::gen_shuffled;
use sparse_reduce::reduce::{reduce, ReduceOptions, ReducerId};
use sparse_reduce::verify::{sparsest_combination_bruteforce, SPARSEST_LIMIT};

fn main() -> Result<()> {
    let m = gen_shuffled(6, 2)?;
    let rep = RepresentationId::default();
    for r in [ReducerId::Standard, ReducerId::Exhaustive, ReducerId::Mix] {
        let out = reduce(&m, r, rep, ReduceOptions::default());
        let (mut total, mut optimal) = (0, 0);
        for (_, j) in out.pairing.pairs() {
            let pivot = *out.reduced[j].last().unwrap();
            // earlier columns with a pivot below ours keep the pivot intact
            let basis: Vec<Vec<usize>> = (0..j)
                .map(|k| out.reduced[k].clone())
                .filter(|c| c.last().is_some_and(|&p| p < pivot))
                .take(SPARSEST_LIMIT)
                .collect();
            let (_, best) = sparsest_combination_bruteforce(&out.reduced[j], &basis)?;
            total += out.reduced[j].len();
            optimal += best;
        }
        println!("{r}: reduced nonzeros {total}, sparsest reachable {optimal}");
    }
    Ok(())
}
