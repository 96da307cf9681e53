use super::{BitTree, ColumnStore};
use crate::matrix::Index;

/// Wraps a base store with one dense scratch column.
///
/// While a slot is active its entries live in the scratch [`BitTree`]:
/// additions into it are single-bit toggles and its pivot is a
/// block-index lookup. The base slot holds stale data until
/// [`ColumnStore::deactivate`] (or activating another slot) writes the
/// scratch back. Semantics are identical to the base store.
#[derive(Debug, Clone)]
pub struct PivotCache<S> {
    base: S,
    scratch: BitTree,
    active: Option<Index>,
}

impl<S: ColumnStore> PivotCache<S> {
    pub fn into_inner(mut self) -> S {
        self.flush();
        self.base
    }

    pub fn active(&self) -> Option<Index> {
        self.active
    }

    fn flush(&mut self) {
        if let Some(j) = self.active.take() {
            let rows = self.scratch.to_vec();
            self.base.set_entries(j, &rows);
            self.scratch.clear();
        }
    }

    fn is_active(&self, j: Index) -> bool {
        self.active == Some(j)
    }
}

impl<S: ColumnStore> ColumnStore for PivotCache<S> {
    fn with_slots(num_slots: usize) -> Self {
        Self {
            base: S::with_slots(num_slots),
            scratch: BitTree::new(num_slots),
            active: None,
        }
    }

    fn num_slots(&self) -> usize {
        self.base.num_slots()
    }

    fn add_into(&mut self, src: Index, dst: Index) -> usize {
        assert_ne!(src, dst);
        if self.is_active(dst) {
            let scratch = &mut self.scratch;
            let mut flips = 0;
            self.base.visit_entries(src, &mut |i| {
                scratch.toggle(i);
                flips += 1;
            });
            flips
        } else if self.is_active(src) {
            let rows = self.scratch.to_vec();
            self.base.add_entries(dst, &rows);
            rows.len()
        } else {
            self.base.add_into(src, dst)
        }
    }

    fn pivot(&mut self, j: Index) -> Option<Index> {
        if self.is_active(j) {
            self.scratch.max()
        } else {
            self.base.pivot(j)
        }
    }

    fn size_exact(&mut self, j: Index) -> usize {
        if self.is_active(j) {
            self.scratch.count()
        } else {
            self.base.size_exact(j)
        }
    }

    fn swap_slots(&mut self, a: Index, b: Index) {
        self.base.swap_slots(a, b);
        // the scratch follows its column; the base slots only hold stale data
        if self.is_active(a) {
            self.active = Some(b);
        } else if self.is_active(b) {
            self.active = Some(a);
        }
    }

    fn clear_slot(&mut self, j: Index) {
        if self.is_active(j) {
            self.scratch.clear();
        } else {
            self.base.clear_slot(j);
        }
    }

    fn set_entries(&mut self, j: Index, rows: &[Index]) {
        if self.is_active(j) {
            self.scratch.clear();
            rows.iter().for_each(|&i| self.scratch.toggle(i));
        } else {
            self.base.set_entries(j, rows);
        }
    }

    fn visit_entries(&mut self, j: Index, f: &mut dyn FnMut(Index)) {
        if self.is_active(j) {
            self.scratch.for_each(f);
        } else {
            self.base.visit_entries(j, f);
        }
    }

    fn add_entries(&mut self, j: Index, rows: &[Index]) {
        if self.is_active(j) {
            rows.iter().for_each(|&i| self.scratch.toggle(i));
        } else {
            self.base.add_entries(j, rows);
        }
    }

    fn remove_entries(&mut self, j: Index, rows: &[Index]) {
        if self.is_active(j) {
            for &i in rows {
                if self.scratch.contains(i) {
                    self.scratch.toggle(i);
                }
            }
        } else {
            self.base.remove_entries(j, rows);
        }
    }

    fn activate(&mut self, j: Index) {
        if self.is_active(j) {
            return;
        }
        self.flush();
        let scratch = &mut self.scratch;
        self.base.visit_entries(j, &mut |i| scratch.toggle(i));
        self.active = Some(j);
    }

    fn deactivate(&mut self) {
        self.flush();
    }
}
