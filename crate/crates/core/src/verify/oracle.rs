use crate::error::{Error, Result};
use crate::matrix::{FilteredBoundaryMatrix, PersistencePairing};

/// Largest matrix the oracle accepts.
pub const ORACLE_LIMIT: usize = 512;

/// Pairing read off submatrix ranks: `(i, j)` is a pair iff
///
/// `rk(D[≥i, ≤j]) − rk(D[≥i+1, ≤j]) + rk(D[≥i+1, ≤j−1]) − rk(D[≥i, ≤j−1]) = 1`.
///
/// Ranks come from dense Z2 row elimination, a computation that shares
/// nothing with the column reducers.
pub fn rank_oracle_pairs(m: &FilteredBoundaryMatrix) -> Result<PersistencePairing> {
    let n = m.len();
    if n > ORACLE_LIMIT {
        return Err(Error::SizeGuard {
            what: "matrix size",
            actual: n,
            limit: ORACLE_LIMIT,
        });
    }
    let words = n.div_ceil(64).max(1);
    let mut rows = vec![vec![0u64; words]; n];
    for (j, col) in m.columns().iter().enumerate() {
        for &i in col {
            rows[i][j / 64] |= 1 << (j % 64);
        }
    }

    // rank[i][p] = rk(D[≥i, <p]); row n and column 0 stay zero
    let mut rank = vec![vec![0u32; n + 1]; n + 1];
    let mut basis: Vec<Option<Vec<u64>>> = vec![None; n];
    let mut v = vec![0u64; words];
    for p in 1..=n {
        basis.iter_mut().for_each(|b| *b = None);
        let mut r = 0;
        for i in (0..n).rev() {
            v.copy_from_slice(&rows[i]);
            mask_below(&mut v, p);
            while let Some(h) = highest_bit(&v) {
                match &basis[h] {
                    Some(b) => v.iter_mut().zip(b).for_each(|(x, y)| *x ^= y),
                    None => {
                        basis[h] = Some(v.clone());
                        r += 1;
                        break;
                    }
                }
            }
            rank[i][p] = r;
        }
    }

    let mut pairs = Vec::new();
    for j in 0..n {
        for i in 0..j {
            let x = rank[i][j + 1] as i64 - rank[i + 1][j + 1] as i64 + rank[i + 1][j] as i64
                - rank[i][j] as i64;
            if x == 1 {
                pairs.push((i, j));
            }
        }
    }
    let mut used = vec![false; n];
    for &(i, j) in &pairs {
        used[i] = true;
        used[j] = true;
    }
    let essential: Vec<_> = (0..n).filter(|&k| !used[k]).collect();
    Ok(PersistencePairing::new(pairs, essential))
}

/// Keeps bits `0..p`.
fn mask_below(v: &mut [u64], p: usize) {
    let full = p / 64;
    if full < v.len() {
        let rem = p % 64;
        v[full] &= if rem == 0 { 0 } else { u64::MAX >> (64 - rem) };
        v[full + 1..].iter_mut().for_each(|w| *w = 0);
    }
}

fn highest_bit(v: &[u64]) -> Option<usize> {
    v.iter()
        .enumerate()
        .rev()
        .find(|(_, w)| **w != 0)
        .map(|(k, w)| k * 64 + 63 - w.leading_zeros() as usize)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::tests::triangle;

    #[test]
    fn triangle_pairs() {
        let p = rank_oracle_pairs(&triangle()).unwrap();
        assert_eq!(
            p,
            PersistencePairing::from_one_based([(2, 4), (3, 5), (6, 7)], [1])
        );
    }

    #[test]
    fn zero_matrix_is_all_essential() {
        let m = FilteredBoundaryMatrix::load_str("0\n0\n0\n").unwrap();
        let p = rank_oracle_pairs(&m).unwrap();
        assert_eq!(p.num_pairs(), 0);
        assert_eq!(p.essential().count(), 3);
    }

    #[test]
    fn guard() {
        let m = FilteredBoundaryMatrix::load_str(&"0\n".repeat(ORACLE_LIMIT + 1)).unwrap();
        assert!(matches!(
            rank_oracle_pairs(&m),
            Err(Error::SizeGuard { .. })
        ));
    }

    #[test]
    fn masking() {
        let mut v = vec![u64::MAX; 3];
        mask_below(&mut v, 70);
        assert_eq!(v, vec![u64::MAX, 0x3f, 0]);
        let mut w = vec![u64::MAX; 2];
        mask_below(&mut w, 128);
        assert_eq!(w, vec![u64::MAX; 2]);
        assert_eq!(highest_bit(&[0, 1 << 5]), Some(69));
        assert_eq!(highest_bit(&[0, 0]), None);
    }
}
