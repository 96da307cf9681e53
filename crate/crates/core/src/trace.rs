//! Addition counters, optional per-event traces and bitflip classification.
//!
//! Counters are always maintained. The full trace keeps the flipped rows of
//! every addition, so it costs memory proportional to the bitflip count and
//! is only recorded on request.

use std::io::Write;

use serde::Serialize;

use crate::column::ColumnStore;
use crate::error::{Error, Result};
use crate::matrix::{Index, PersistencePairing};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Phase {
    /// Additions that move the pivot of the column being processed.
    PivotSearch,
    /// Further left-to-right eliminations below a settled pivot.
    PostPivot,
    /// Right-to-left additions into an already processed column.
    Backward,
}

impl Phase {
    pub fn name(self) -> &'static str {
        match self {
            Phase::PivotSearch => "pivot-search",
            Phase::PostPivot => "post-pivot",
            Phase::Backward => "backward",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdditionEvent {
    pub seq: u64,
    pub src: Index,
    pub dst: Index,
    /// `|src|` at the time of the addition.
    pub bitflips: usize,
    pub phase: Phase,
    /// Column whose top-level processing triggered the addition.
    pub outer_step: Index,
    /// Entries of `src` at the time of the addition, i.e. the flipped rows.
    pub rows: Vec<Index>,
    pub dst_size_after: usize,
}

impl AdditionEvent {
    pub fn is_forward(&self) -> bool {
        self.src < self.dst
    }
}

/// Everything a reducer reports besides additions is a separate event so
/// that bitflip totals cover additions only.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TraceEvent {
    Addition(AdditionEvent),
    Compress {
        column: Index,
        removed: Vec<Index>,
    },
    Clear {
        column: Index,
    },
    Swap {
        a: Index,
        b: Index,
    },
    /// Top-level processing of `column` finished, leaving `size` entries.
    Pivoted {
        column: Index,
        pivot: Option<Index>,
        size: usize,
    },
    /// A candidate column recorded by the mix strategy.
    Snapshot {
        column: Index,
        size: usize,
    },
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct ReductionStats {
    pub fill_up: u64,
    pub col_ops: u64,
    pub bitflips: u64,
    pub forward_bitflips: u64,
    pub backward_bitflips: u64,
    pub peak_column_size: u64,
}

/// Collects counters and, when enabled, the event trace of one reduction.
#[derive(Debug, Default)]
pub struct Recorder {
    stats: ReductionStats,
    trace: Option<Vec<TraceEvent>>,
    seq: u64,
}

impl Recorder {
    pub fn new(tracing: bool, initial_peak: usize) -> Self {
        Self {
            stats: ReductionStats {
                peak_column_size: initial_peak as u64,
                ..Default::default()
            },
            trace: tracing.then(Vec::new),
            seq: 0,
        }
    }

    pub fn is_tracing(&self) -> bool {
        self.trace.is_some()
    }

    /// Adds `src` into `dst` through `store`, recording the event.
    pub fn add<S: ColumnStore + ?Sized>(
        &mut self,
        store: &mut S,
        src: Index,
        dst: Index,
        phase: Phase,
        outer_step: Index,
    ) -> usize {
        let rows = if self.trace.is_some() {
            store.entries_sorted(src)
        } else {
            Vec::new()
        };
        let flips = store.add_into(src, dst);
        let after = store.size_exact(dst);
        let s = &mut self.stats;
        s.col_ops += 1;
        s.bitflips += flips as u64;
        if src < dst {
            s.forward_bitflips += flips as u64;
        } else {
            s.backward_bitflips += flips as u64;
        }
        s.peak_column_size = s.peak_column_size.max(after as u64);
        if let Some(trace) = &mut self.trace {
            trace.push(TraceEvent::Addition(AdditionEvent {
                seq: self.seq,
                src,
                dst,
                bitflips: flips,
                phase,
                outer_step,
                rows,
                dst_size_after: after,
            }));
        }
        self.seq += 1;
        flips
    }

    pub fn log(&mut self, event: impl FnOnce() -> TraceEvent) {
        if let Some(trace) = &mut self.trace {
            trace.push(event());
        }
    }

    /// Final counters; `fill_up` is the total size of all columns of `store`.
    pub fn finalize<S: ColumnStore + ?Sized>(
        self,
        store: &mut S,
    ) -> (ReductionStats, Option<Vec<TraceEvent>>) {
        let mut stats = self.stats;
        stats.fill_up = (0..store.num_slots())
            .map(|j| store.size_exact(j) as u64)
            .sum();
        (stats, self.trace)
    }
}

pub fn additions(trace: &[TraceEvent]) -> impl Iterator<Item = &AdditionEvent> {
    trace.iter().filter_map(|e| match e {
        TraceEvent::Addition(a) => Some(a),
        _ => None,
    })
}

/// Writes one `seq src dst bitflips phase` line per addition (1-based
/// column indices).
pub fn write_trace<W: Write>(trace: &[TraceEvent], mut out: W) -> std::io::Result<()> {
    for a in additions(trace) {
        writeln!(
            out,
            "{} {} {} {} {}",
            a.seq,
            a.src + 1,
            a.dst + 1,
            a.bitflips,
            a.phase.name()
        )?;
    }
    Ok(())
}

/// Death index of every birth in the augmented pairing; essential births
/// die at `n`.
#[derive(Debug, Clone)]
pub struct AugmentedPairs {
    death_of: Vec<Option<Index>>,
}

impl AugmentedPairs {
    pub fn new(pairing: &PersistencePairing, n: usize) -> Self {
        let mut death_of = vec![None; n];
        for (i, j) in pairing.augmented(n) {
            death_of[i] = Some(j);
        }
        Self { death_of }
    }

    pub fn death(&self, birth: Index) -> Option<Index> {
        self.death_of.get(birth).copied().flatten()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Interval {
    Interval,
    NonInterval,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Forward,
    Backward,
}

/// Classifies the flip of `row` caused by an addition `src -> dst`.
///
/// With `(row, j)` the augmented pair of `row`, the flip is an interval
/// flip iff both `src` and `dst` lie in `row+1 ..= j`.
pub fn classify_bitflip(
    src: Index,
    dst: Index,
    row: Index,
    pairs: &AugmentedPairs,
) -> Result<(Interval, Direction)> {
    let death = pairs.death(row).ok_or(Error::UnknownRow(row + 1))?;
    let inside = |c: Index| row < c && c <= death;
    let kind = if inside(src) && inside(dst) {
        Interval::Interval
    } else {
        Interval::NonInterval
    };
    let dir = if src < dst {
        Direction::Forward
    } else {
        Direction::Backward
    };
    Ok((kind, dir))
}
