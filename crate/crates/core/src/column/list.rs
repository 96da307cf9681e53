use std::collections::LinkedList;

use super::ColumnStore;
use crate::matrix::Index;

/// Sorted linked lists; addition merges both lists and cancels duplicates.
#[derive(Debug, Clone, Default)]
pub struct ListStore {
    cols: Vec<LinkedList<Index>>,
}

fn merge_lists<'a>(
    a: impl Iterator<Item = &'a Index>,
    b: impl Iterator<Item = &'a Index>,
) -> LinkedList<Index> {
    let mut out = LinkedList::new();
    let (mut a, mut b) = (a.peekable(), b.peekable());
    loop {
        match (a.peek(), b.peek()) {
            (Some(&&x), Some(&&y)) => {
                if x < y {
                    out.push_back(x);
                    a.next();
                } else if y < x {
                    out.push_back(y);
                    b.next();
                } else {
                    a.next();
                    b.next();
                }
            }
            (Some(&&x), None) => {
                out.push_back(x);
                a.next();
            }
            (None, Some(&&y)) => {
                out.push_back(y);
                b.next();
            }
            (None, None) => return out,
        }
    }
}

impl ColumnStore for ListStore {
    fn with_slots(num_slots: usize) -> Self {
        Self {
            cols: vec![LinkedList::new(); num_slots],
        }
    }

    fn num_slots(&self) -> usize {
        self.cols.len()
    }

    fn add_into(&mut self, src: Index, dst: Index) -> usize {
        assert_ne!(src, dst);
        let old = std::mem::take(&mut self.cols[dst]);
        let s = &self.cols[src];
        let merged = merge_lists(old.iter(), s.iter());
        let flips = s.len();
        self.cols[dst] = merged;
        flips
    }

    fn pivot(&mut self, j: Index) -> Option<Index> {
        self.cols[j].back().copied()
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
        let old = std::mem::take(&mut self.cols[j]);
        self.cols[j] = merge_lists(old.iter(), rows.iter());
    }

    fn remove_entries(&mut self, j: Index, rows: &[Index]) {
        let old = std::mem::take(&mut self.cols[j]);
        let mut k = 0;
        self.cols[j] = old
            .into_iter()
            .filter(|&i| {
                while k < rows.len() && rows[k] < i {
                    k += 1;
                }
                !(k < rows.len() && rows[k] == i)
            })
            .collect();
    }
}
