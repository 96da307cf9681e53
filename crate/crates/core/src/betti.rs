//! Betti and persistent Betti numbers derived from a pairing.
//!
//! With `P̄` the pairs plus `(i, N)` for every essential `i` (0-based, so
//! `N` is one past the last index):
//!
//! * `β_k = #{(i, j) ∈ P̄ : i ≤ k < j}` counts classes alive at step `k`;
//! * `β_{k,ℓ} = #{(i, j) ∈ P̄ : i ≤ k, j > ℓ}` counts classes born by `k`
//!   that are still alive after `ℓ`.
//!
//! The second definition reads "still alive after `ℓ`" (`j > ℓ`); the
//! literal condition `ℓ > j` would count classes that died before `ℓ`,
//! which does not match "persistently present in `K_k, …, K_ℓ`".

use crate::matrix::{Index, PersistencePairing};

#[derive(Debug, Clone)]
pub struct BettiProfile {
    n: usize,
    betti: Vec<usize>,
    /// `P̄` sorted by birth.
    augmented: Vec<(Index, Index)>,
}

impl BettiProfile {
    pub fn new(pairing: &PersistencePairing, n: usize) -> Self {
        let augmented = pairing.augmented(n);
        let mut delta = vec![0isize; n + 1];
        for &(i, j) in &augmented {
            // alive for k in i..j
            delta[i] += 1;
            delta[j] -= 1;
        }
        let mut betti = Vec::with_capacity(n);
        let mut running = 0isize;
        for d in delta.iter().take(n) {
            running += d;
            betti.push(running as usize);
        }
        Self {
            n,
            betti,
            augmented,
        }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn betti(&self, k: Index) -> usize {
        self.betti[k]
    }

    pub fn betti_numbers(&self) -> &[usize] {
        &self.betti
    }

    pub fn max_betti(&self) -> usize {
        self.betti.iter().copied().max().unwrap_or(0)
    }

    pub fn augmented(&self) -> &[(Index, Index)] {
        &self.augmented
    }

    /// `β_{k,ℓ}` for `k ≤ ℓ`, computed on demand.
    pub fn persistent(&self, k: Index, l: Index) -> usize {
        debug_assert!(k <= l);
        self.augmented
            .iter()
            .take_while(|&&(i, _)| i <= k)
            .filter(|&&(_, j)| j > l)
            .count()
    }

    /// `β_{i,j}` for every pair `(i, j)` of `pairs`, in one offline sweep.
    pub fn persistent_for_pairs(&self, pairs: &[(Index, Index)]) -> Vec<usize> {
        let mut order: Vec<usize> = (0..pairs.len()).collect();
        order.sort_unstable_by(|&a, &b| pairs[b].1.cmp(&pairs[a].1));
        let mut by_death = self.augmented.clone();
        by_death.sort_unstable_by_key(|p| std::cmp::Reverse(p.1));

        let mut fenwick = Fenwick::new(self.n + 1);
        let mut next = 0;
        let mut out = vec![0; pairs.len()];
        for q in order {
            let (i, j) = pairs[q];
            while next < by_death.len() && by_death[next].1 > j {
                fenwick.add(by_death[next].0);
                next += 1;
            }
            out[q] = fenwick.prefix(i);
        }
        out
    }
}

struct Fenwick(Vec<usize>);

impl Fenwick {
    fn new(n: usize) -> Self {
        Fenwick(vec![0; n + 1])
    }

    fn add(&mut self, pos: usize) {
        let mut p = pos + 1;
        while p < self.0.len() {
            self.0[p] += 1;
            p += p & p.wrapping_neg();
        }
    }

    /// Count of inserted positions `<= pos`.
    fn prefix(&self, pos: usize) -> usize {
        let mut p = pos + 1;
        let mut s = 0;
        while p > 0 {
            s += self.0[p];
            p -= p & p.wrapping_neg();
        }
        s
    }
}
