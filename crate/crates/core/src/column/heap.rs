use std::collections::BinaryHeap;

use super::ColumnStore;
use crate::matrix::Index;

/// Lazy max-heap column: additions push the source entries and pairs of
/// equal entries cancel only when they surface at the top. `len` may
/// therefore over-count until the column is pruned.
#[derive(Debug, Clone, Default)]
struct HeapColumn {
    heap: BinaryHeap<Index>,
    /// Heap length right after the last prune.
    pruned_len: usize,
    /// Pushes happened since the last prune, so duplicates may be buried.
    dirty: bool,
}

impl HeapColumn {
    fn from_sorted(rows: &[Index]) -> Self {
        Self {
            heap: rows.iter().copied().collect(),
            pruned_len: rows.len(),
            dirty: false,
        }
    }

    fn pivot(&mut self) -> Option<Index> {
        while let Some(top) = self.heap.pop() {
            if self.heap.peek() == Some(&top) {
                self.heap.pop();
            } else {
                self.heap.push(top);
                return Some(top);
            }
        }
        None
    }

    /// Canonical ascending entries, duplicates cancelled.
    fn canonical(&self) -> Vec<Index> {
        let sorted = self.heap.clone().into_sorted_vec();
        let mut out: Vec<Index> = Vec::with_capacity(sorted.len());
        for i in sorted {
            if out.last() == Some(&i) {
                out.pop();
            } else {
                out.push(i);
            }
        }
        out
    }

    fn prune(&mut self) {
        if self.dirty {
            *self = Self::from_sorted(&self.canonical());
        }
    }

    fn push_all(&mut self, rows: &[Index]) {
        self.heap.extend(rows.iter().copied());
        self.dirty = true;
        if self.heap.len() > 2 * self.pruned_len + 16 {
            self.prune();
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct HeapStore {
    cols: Vec<HeapColumn>,
    scratch: Vec<Index>,
}

impl ColumnStore for HeapStore {
    fn with_slots(num_slots: usize) -> Self {
        Self {
            cols: vec![HeapColumn::default(); num_slots],
            scratch: Vec::new(),
        }
    }

    fn num_slots(&self) -> usize {
        self.cols.len()
    }

    fn add_into(&mut self, src: Index, dst: Index) -> usize {
        assert_ne!(src, dst);
        self.cols[src].prune();
        self.scratch.clear();
        self.scratch.extend(self.cols[src].heap.iter().copied());
        self.cols[dst].push_all(&self.scratch);
        self.scratch.len()
    }

    fn pivot(&mut self, j: Index) -> Option<Index> {
        self.cols[j].pivot()
    }

    fn size_exact(&mut self, j: Index) -> usize {
        self.cols[j].prune();
        self.cols[j].heap.len()
    }

    fn swap_slots(&mut self, a: Index, b: Index) {
        self.cols.swap(a, b);
    }

    fn clear_slot(&mut self, j: Index) {
        self.cols[j] = HeapColumn::default();
    }

    fn set_entries(&mut self, j: Index, rows: &[Index]) {
        self.cols[j] = HeapColumn::from_sorted(rows);
    }

    fn visit_entries(&mut self, j: Index, f: &mut dyn FnMut(Index)) {
        self.cols[j].canonical().into_iter().for_each(f);
    }

    fn add_entries(&mut self, j: Index, rows: &[Index]) {
        self.cols[j].push_all(rows);
    }

    fn remove_entries(&mut self, j: Index, rows: &[Index]) {
        let mut k = 0;
        let kept: Vec<Index> = self.cols[j]
            .canonical()
            .into_iter()
            .filter(|&i| {
                while k < rows.len() && rows[k] < i {
                    k += 1;
                }
                !(k < rows.len() && rows[k] == i)
            })
            .collect();
        self.cols[j] = HeapColumn::from_sorted(&kept);
    }

    fn entries_sorted(&mut self, j: Index) -> Vec<Index> {
        self.cols[j].prune();
        self.cols[j].canonical()
    }
}
