use serde::Serialize;

use crate::betti::BettiProfile;
use crate::error::{Error, Result};
use crate::matrix::PersistencePairing;

/// A measured bitflip count against an upper bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BoundCheck {
    pub bound: u64,
    pub measured: u64,
}

impl BoundCheck {
    pub fn slack(&self) -> i64 {
        self.bound as i64 - self.measured as i64
    }

    pub fn holds(&self) -> bool {
        self.measured <= self.bound
    }

    fn into_result(self, detail: impl FnOnce() -> String) -> Result<Self> {
        if self.holds() {
            Ok(self)
        } else {
            Err(Error::BoundViolation {
                measured: self.measured,
                bound: self.bound,
                detail: detail(),
            })
        }
    }
}

fn sizes_from_dims(dims: &[usize]) -> Vec<usize> {
    dims.iter().map(|d| d + 1).collect()
}

/// `Σ_P (β_{i,j}+1)·min(β_{i,j}+1, j−i+1) + Σ_k (d_k+1)(β_k+1)`.
///
/// `d_k + 1` is the facet count of a simplex; see [`bound_main_sized`] for
/// matrices whose columns are not simplex boundaries.
pub fn bound_main(
    pairing: &PersistencePairing,
    dims: &[usize],
    measured: u64,
) -> Result<BoundCheck> {
    bound_main_sized(pairing, &sizes_from_dims(dims), measured)
}

/// [`bound_main`] with `d_k + 1` replaced by the initial size of column `k`.
pub fn bound_main_sized(
    pairing: &PersistencePairing,
    column_sizes: &[usize],
    measured: u64,
) -> Result<BoundCheck> {
    let n = column_sizes.len();
    let betti = BettiProfile::new(pairing, n);
    let pairs: Vec<_> = pairing.pairs().collect();
    let pb = betti.persistent_for_pairs(&pairs);
    let backward: u64 = pairs
        .iter()
        .zip(&pb)
        .map(|(&(i, j), &b)| {
            let b = b as u64 + 1;
            b * b.min((j - i + 1) as u64)
        })
        .sum();
    let forward: u64 = column_sizes
        .iter()
        .zip(betti.betti_numbers())
        .map(|(&s, &b)| s as u64 * (b as u64 + 1))
        .sum();
    BoundCheck {
        bound: backward + forward,
        measured,
    }
    .into_result(|| format!("pair term {backward}, column term {forward}"))
}

/// `Σ_{P̄} (j−i)² + Σ_k (d_k+1)`, essential classes dying at `N`.
pub fn bound_interval(
    pairing: &PersistencePairing,
    dims: &[usize],
    measured: u64,
) -> Result<BoundCheck> {
    bound_interval_sized(pairing, &sizes_from_dims(dims), measured)
}

/// [`bound_interval`] with `d_k + 1` replaced by the initial size of column `k`.
pub fn bound_interval_sized(
    pairing: &PersistencePairing,
    column_sizes: &[usize],
    measured: u64,
) -> Result<BoundCheck> {
    let n = column_sizes.len();
    let interval: u64 = pairing
        .augmented(n)
        .iter()
        .map(|&(i, j)| ((j - i) as u64).pow(2))
        .sum();
    let cells: u64 = column_sizes.iter().map(|&s| s as u64).sum();
    BoundCheck {
        bound: interval + cells,
        measured,
    }
    .into_result(|| format!("interval term {interval}, column term {cells}"))
}
