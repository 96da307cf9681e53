//! The six reduction strategies.
//!
//! | id            | order                     | heuristic   |
//! |---------------|---------------------------|-------------|
//! | `standard`    | `j = 0..N`                | none        |
//! | `twist`       | decreasing dimension      | clearing    |
//! | `swap`        | decreasing dimension      | clearing    |
//! | `exhaustive`  | `j = 0..N`                | compression |
//! | `retro`       | `j = 0..N`                | compression |
//! | `mix`         | `j = 0..N`                | compression |
//!
//! All of them produce the same [`PersistencePairing`]; they differ in the
//! column operations performed and in the final reduced matrix.

mod engine;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::column::{
    init_store, BaseRepresentation, BitmapStore, ColumnStore, HeapStore, ListStore, PivotCache,
    RepresentationId, SetStore, VecStore,
};
use crate::error::Error;
use crate::matrix::{FilteredBoundaryMatrix, Index, PersistencePairing};
use crate::trace::{ReductionStats, TraceEvent};

pub use engine::Engine;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum ReducerId {
    Standard,
    Twist,
    Swap,
    Exhaustive,
    Retrospective,
    Mix,
}

impl ReducerId {
    pub const ALL: [ReducerId; 6] = [
        ReducerId::Standard,
        ReducerId::Twist,
        ReducerId::Swap,
        ReducerId::Exhaustive,
        ReducerId::Retrospective,
        ReducerId::Mix,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ReducerId::Standard => "standard",
            ReducerId::Twist => "twist",
            ReducerId::Swap => "swap",
            ReducerId::Exhaustive => "exhaustive",
            ReducerId::Retrospective => "retro",
            ReducerId::Mix => "mix",
        }
    }

    pub fn uses_clearing(self) -> bool {
        matches!(self, ReducerId::Twist | ReducerId::Swap)
    }

    pub fn uses_compression(self) -> bool {
        matches!(
            self,
            ReducerId::Exhaustive | ReducerId::Retrospective | ReducerId::Mix
        )
    }
}

impl fmt::Display for ReducerId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ReducerId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Self::ALL
            .into_iter()
            .find(|r| r.name() == s)
            .ok_or_else(|| Error::UnknownName {
                kind: "algorithm",
                name: s.to_string(),
                valid: Self::ALL.map(Self::name).join(", "),
            })
    }
}

/// Switches for one reduction run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReduceOptions {
    /// Clear columns of known positive indices (twist and swap only).
    pub clearing: bool,
    /// Remove known negative rows before processing a column
    /// (exhaustive, retro and mix only).
    pub compression: bool,
    /// Record the full event trace.
    pub trace: bool,
}

impl Default for ReduceOptions {
    fn default() -> Self {
        Self {
            clearing: true,
            compression: true,
            trace: false,
        }
    }
}

impl ReduceOptions {
    pub fn traced() -> Self {
        Self {
            trace: true,
            ..Self::default()
        }
    }
}

/// Output of one reduction run.
#[derive(Debug, Clone)]
pub struct Reduction {
    pub pairing: PersistencePairing,
    pub stats: ReductionStats,
    pub trace: Option<Vec<TraceEvent>>,
    /// The final reduced columns, in the index space of the reduced matrix
    /// (the anti-transpose when dualized).
    pub reduced: Vec<Vec<Index>>,
}

/// Runs `reducer` over an already initialized store.
pub fn reduce_store<S: ColumnStore>(
    m: &FilteredBoundaryMatrix,
    store: S,
    reducer: ReducerId,
    opts: ReduceOptions,
) -> Reduction {
    let mut engine = Engine::new(m, store, opts);
    match reducer {
        ReducerId::Standard => engine.run_standard(),
        ReducerId::Twist => engine.run_twist(false),
        ReducerId::Swap => engine.run_twist(true),
        ReducerId::Exhaustive => engine.run_exhaustive(false),
        ReducerId::Retrospective => engine.run_retrospective(),
        ReducerId::Mix => engine.run_exhaustive(true),
    }
    engine.finish()
}

fn reduce_with<S: ColumnStore>(
    m: &FilteredBoundaryMatrix,
    reducer: ReducerId,
    opts: ReduceOptions,
) -> Reduction {
    reduce_store(m, init_store::<S>(m), reducer, opts)
}

/// Reduces `m` with the given algorithm and column representation.
pub fn reduce(
    m: &FilteredBoundaryMatrix,
    reducer: ReducerId,
    rep: RepresentationId,
    opts: ReduceOptions,
) -> Reduction {
    use BaseRepresentation::*;
    match (rep.base, rep.pivot_cache) {
        (List, false) => reduce_with::<ListStore>(m, reducer, opts),
        (Vector, false) => reduce_with::<VecStore>(m, reducer, opts),
        (Set, false) => reduce_with::<SetStore>(m, reducer, opts),
        (Heap, false) => reduce_with::<HeapStore>(m, reducer, opts),
        (Bitmap, false) => reduce_with::<BitmapStore>(m, reducer, opts),
        (List, true) => reduce_with::<PivotCache<ListStore>>(m, reducer, opts),
        (Vector, true) => reduce_with::<PivotCache<VecStore>>(m, reducer, opts),
        (Set, true) => reduce_with::<PivotCache<SetStore>>(m, reducer, opts),
        (Heap, true) => reduce_with::<PivotCache<HeapStore>>(m, reducer, opts),
        (Bitmap, true) => reduce_with::<PivotCache<BitmapStore>>(m, reducer, opts),
    }
}

/// Reduces the anti-transpose of `m` and maps the pairs back to `m`'s
/// indices. Stats, trace and reduced columns refer to the dual matrix.
pub fn reduce_dual(
    m: &FilteredBoundaryMatrix,
    reducer: ReducerId,
    rep: RepresentationId,
    opts: ReduceOptions,
) -> Reduction {
    let dual = m.anti_transpose();
    let mut r = reduce(&dual, reducer, rep, opts);
    r.pairing = r.pairing.map_dual(m.len());
    r
}

/// [`reduce`] or [`reduce_dual`] depending on `dualize`.
pub fn reduce_maybe_dual(
    m: &FilteredBoundaryMatrix,
    reducer: ReducerId,
    rep: RepresentationId,
    opts: ReduceOptions,
    dualize: bool,
) -> Reduction {
    if dualize {
        reduce_dual(m, reducer, rep, opts)
    } else {
        reduce(m, reducer, rep, opts)
    }
}
