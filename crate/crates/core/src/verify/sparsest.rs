use crate::error::{Error, Result};
use crate::matrix::Index;

/// Largest basis the brute-force solver enumerates.
pub const SPARSEST_LIMIT: usize = 20;

/// Minimum support of `target + Σ a_k basis_k` over all `a ∈ Z2^n`, with one
/// minimizing coefficient vector. Enumerates all `2^n` combinations in Gray
/// code order.
pub fn sparsest_combination_bruteforce(
    target: &[Index],
    basis: &[Vec<Index>],
) -> Result<(Vec<bool>, usize)> {
    if basis.len() > SPARSEST_LIMIT {
        return Err(Error::SizeGuard {
            what: "basis size",
            actual: basis.len(),
            limit: SPARSEST_LIMIT,
        });
    }
    let rows = target
        .iter()
        .chain(basis.iter().flatten())
        .max()
        .map_or(0, |&m| m + 1);
    let words = rows.div_ceil(64).max(1);
    let dense = |v: &[Index]| {
        let mut out = vec![0u64; words];
        for &i in v {
            out[i / 64] ^= 1 << (i % 64);
        }
        out
    };
    let basis: Vec<Vec<u64>> = basis.iter().map(|b| dense(b)).collect();
    let mut cur = dense(target);
    let weight = |v: &[u64]| v.iter().map(|w| w.count_ones() as usize).sum::<usize>();

    let mut coeffs = vec![false; basis.len()];
    let mut best = (coeffs.clone(), weight(&cur));
    for step in 1u64..(1 << basis.len()) {
        let k = step.trailing_zeros() as usize;
        coeffs[k] = !coeffs[k];
        cur.iter_mut().zip(&basis[k]).for_each(|(x, y)| *x ^= y);
        let w = weight(&cur);
        if w < best.1 {
            best = (coeffs.clone(), w);
        }
    }
    Ok(best)
}
