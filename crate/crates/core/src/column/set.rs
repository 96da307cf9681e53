use std::collections::BTreeSet;

use super::ColumnStore;
use crate::matrix::Index;

/// Balanced ordered sets; addition looks up each source entry in the
/// destination, so its cost depends only on the source size.
#[derive(Debug, Clone, Default)]
pub struct SetStore {
    cols: Vec<BTreeSet<Index>>,
}

fn toggle(set: &mut BTreeSet<Index>, i: Index) {
    if !set.remove(&i) {
        set.insert(i);
    }
}

impl ColumnStore for SetStore {
    fn with_slots(num_slots: usize) -> Self {
        Self {
            cols: vec![BTreeSet::new(); num_slots],
        }
    }

    fn num_slots(&self) -> usize {
        self.cols.len()
    }

    fn add_into(&mut self, src: Index, dst: Index) -> usize {
        let (s, d) = super::split_pair(&mut self.cols, src, dst);
        for &i in s.iter() {
            toggle(d, i);
        }
        s.len()
    }

    fn pivot(&mut self, j: Index) -> Option<Index> {
        self.cols[j].last().copied()
    }

    fn size_exact(&mut self, j: Index) -> usize {
        self.cols[j].len()
    }

    fn swap_slots(&mut self, a: Index, b: Index) {
        self.cols.swap(a, b);
    }

    fn clear_slot(&mut self, j: Index) {
        self.cols[j].clear();
    }

    fn set_entries(&mut self, j: Index, rows: &[Index]) {
        self.cols[j] = rows.iter().copied().collect();
    }

    fn visit_entries(&mut self, j: Index, f: &mut dyn FnMut(Index)) {
        self.cols[j].iter().for_each(|&i| f(i));
    }

    fn add_entries(&mut self, j: Index, rows: &[Index]) {
        for &i in rows {
            toggle(&mut self.cols[j], i);
        }
    }

    fn remove_entries(&mut self, j: Index, rows: &[Index]) {
        for i in rows {
            self.cols[j].remove(i);
        }
    }
}
