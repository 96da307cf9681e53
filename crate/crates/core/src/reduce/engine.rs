use crate::column::ColumnStore;
use crate::matrix::{FilteredBoundaryMatrix, Index, PersistencePairing};
use crate::trace::{Phase, Recorder, TraceEvent};

use super::{ReduceOptions, Reduction};

/// Removes every row of column `j` for which `is_negative` holds and
/// returns the removed rows. Removals are not additions and flip nothing.
pub fn compress_column<S: ColumnStore + ?Sized>(
    store: &mut S,
    j: Index,
    is_negative: impl Fn(Index) -> bool,
) -> Vec<Index> {
    let mut removed = Vec::new();
    store.visit_entries(j, &mut |i| {
        if is_negative(i) {
            removed.push(i);
        }
    });
    if !removed.is_empty() {
        store.remove_entries(j, &removed);
    }
    removed
}

/// Zeroes the column of a positive index.
pub fn clear_column<S: ColumnStore + ?Sized>(store: &mut S, i: Index) {
    store.clear_slot(i);
}

/// Shared state of a reduction: the store, the pivot tables and the
/// recorder.
pub struct Engine<'a, S> {
    m: &'a FilteredBoundaryMatrix,
    store: S,
    opts: ReduceOptions,
    rec: Recorder,
    /// `owner[i] = Some(j)` when column `j` registered pivot `i`.
    owner: Vec<Option<Index>>,
    /// Inverse of `owner`.
    pivot_of: Vec<Option<Index>>,
    /// Reused buffer for column scans.
    buf: Vec<Index>,
}

impl<'a, S: ColumnStore> Engine<'a, S> {
    pub fn new(m: &'a FilteredBoundaryMatrix, store: S, opts: ReduceOptions) -> Self {
        let n = m.len();
        let initial_peak = m.columns().iter().map(Vec::len).max().unwrap_or(0);
        Self {
            m,
            store,
            opts,
            rec: Recorder::new(opts.trace, initial_peak),
            owner: vec![None; n],
            pivot_of: vec![None; n],
            buf: Vec::new(),
        }
    }

    pub fn finish(mut self) -> Reduction {
        self.store.deactivate();
        let pairing = PersistencePairing::from_pivots(&self.pivot_of);
        let reduced = (0..self.m.len())
            .map(|j| self.store.entries_sorted(j))
            .collect();
        let (stats, trace) = self.rec.finalize(&mut self.store);
        Reduction {
            pairing,
            stats,
            trace,
            reduced,
        }
    }

    fn register(&mut self, pivot: Index, j: Index) {
        self.owner[pivot] = Some(j);
        self.pivot_of[j] = Some(pivot);
    }

    fn add(&mut self, src: Index, dst: Index, phase: Phase, outer: Index) -> usize {
        self.rec.add(&mut self.store, src, dst, phase, outer)
    }

    fn compress(&mut self, j: Index) {
        let pivot_of = &self.pivot_of;
        let removed = compress_column(&mut self.store, j, |i| pivot_of[i].is_some());
        if !removed.is_empty() {
            self.rec.log(|| TraceEvent::Compress { column: j, removed });
        }
    }

    fn finish_column(&mut self, j: Index) {
        self.store.deactivate();
        if self.rec.is_tracing() {
            let pivot = self.pivot_of[j];
            let size = self.store.size_exact(j);
            self.rec.log(|| TraceEvent::Pivoted {
                column: j,
                pivot,
                size,
            });
        }
    }

    /// Left-to-right additions until the pivot of `j` is new, optionally
    /// swapping with the pivot owner when `j` is strictly smaller. Returns
    /// the registered pivot.
    fn pivot_search(&mut self, j: Index, swap: bool) -> Option<Index> {
        while let Some(p) = self.store.pivot(j) {
            match self.owner[p] {
                Some(k) => {
                    if swap && self.store.size_exact(j) < self.store.size_exact(k) {
                        self.store.swap_slots(j, k);
                        self.rec.log(|| TraceEvent::Swap { a: j, b: k });
                    }
                    self.add(k, j, Phase::PivotSearch, j);
                }
                None => {
                    self.register(p, j);
                    return Some(p);
                }
            }
        }
        None
    }

    /// Standard reduction: columns in order, left-to-right additions only.
    pub fn run_standard(&mut self) {
        for j in 0..self.m.len() {
            self.store.activate(j);
            self.pivot_search(j, false);
            self.finish_column(j);
        }
    }

    /// Twist reduction (decreasing dimension with clearing); with `swap`
    /// set, the swap reduction.
    pub fn run_twist(&mut self, swap: bool) {
        let max_dim = self.m.max_dim();
        for d in (1..=max_dim).rev() {
            for j in 0..self.m.len() {
                if self.m.dim(j) != d {
                    continue;
                }
                self.store.activate(j);
                if let Some(p) = self.pivot_search(j, swap) {
                    if self.opts.clearing {
                        clear_column(&mut self.store, p);
                        self.rec.log(|| TraceEvent::Clear { column: p });
                    }
                }
                self.finish_column(j);
            }
        }
    }

    /// Largest entry of `j` below `bound` that is the registered pivot of
    /// another column, with that column.
    fn largest_paired_below(&mut self, j: Index, bound: Index) -> Option<(Index, Index)> {
        self.buf.clear();
        let buf = &mut self.buf;
        self.store.visit_entries(j, &mut |i| buf.push(i));
        self.buf
            .iter()
            .rev()
            .filter(|&&i| i < bound)
            .find_map(|&i| match self.owner[i] {
                Some(k) if k != j => Some((i, k)),
                _ => None,
            })
    }

    /// Exhaustive reduction; with `mix` set, keeps the smallest of the
    /// intermediate columns that share the pivot.
    pub fn run_exhaustive(&mut self, mix: bool) {
        for j in 0..self.m.len() {
            self.store.activate(j);
            if self.opts.compression {
                self.compress(j);
            }
            if let Some(p) = self.pivot_search(j, false) {
                self.eliminate_below_pivot(j, p, mix);
            }
            self.finish_column(j);
        }
    }

    fn eliminate_below_pivot(&mut self, j: Index, pivot: Index, mix: bool) {
        let mut best: Option<(usize, Vec<Index>)> = None;
        let mut current_is_best = true;
        if mix {
            let size = self.store.size_exact(j);
            self.rec.log(|| TraceEvent::Snapshot { column: j, size });
            best = Some((size, self.store.entries_sorted(j)));
        }
        let mut bound = pivot;
        while let Some((i, k)) = self.largest_paired_below(j, bound) {
            self.add(k, j, Phase::PostPivot, j);
            bound = i;
            if let Some((best_size, best_rows)) = &mut best {
                let size = self.store.size_exact(j);
                self.rec.log(|| TraceEvent::Snapshot { column: j, size });
                if size < *best_size {
                    *best_size = size;
                    *best_rows = self.store.entries_sorted(j);
                    current_is_best = true;
                } else {
                    current_is_best = false;
                }
            }
        }
        if let (Some((_, rows)), false) = (best, current_is_best) {
            self.store.set_entries(j, &rows);
        }
    }

    /// Retrospective reduction. Before a column is added it is itself
    /// re-reduced against all pivots known so far; that re-reduction may add
    /// later columns into earlier ones.
    pub fn run_retrospective(&mut self) {
        for j in 0..self.m.len() {
            self.store.activate(j);
            if self.opts.compression {
                self.compress(j);
            }
            self.retro_reduce(j);
            self.finish_column(j);
        }
    }

    fn retro_reduce(&mut self, root: Index) {
        struct Frame {
            col: Index,
            /// Entries at or above `bound` are known to be unpaired.
            bound: Index,
            /// Phase of the addition that will complete this frame's
            /// current elimination.
            phase: Phase,
        }
        // Pivots strictly decrease along the stack, so it stays finite.
        let mut stack = vec![Frame {
            col: root,
            bound: usize::MAX,
            phase: Phase::PivotSearch,
        }];
        while let Some(top) = stack.last() {
            let col = top.col;
            match self.largest_paired_below(col, top.bound) {
                Some((i, k)) => {
                    let phase = if col != root {
                        Phase::Backward
                    } else if self.store.pivot(col) == Some(i) {
                        Phase::PivotSearch
                    } else {
                        Phase::PostPivot
                    };
                    let top = stack.last_mut().unwrap();
                    top.bound = i;
                    top.phase = phase;
                    stack.push(Frame {
                        col: k,
                        bound: usize::MAX,
                        phase: Phase::Backward,
                    });
                }
                None => {
                    stack.pop();
                    match stack.last() {
                        Some(parent) => {
                            let (dst, phase) = (parent.col, parent.phase);
                            self.add(col, dst, phase, root);
                        }
                        None => {
                            if let Some(p) = self.store.pivot(col) {
                                self.register(p, col);
                            }
                        }
                    }
                }
            }
        }
    }
}
