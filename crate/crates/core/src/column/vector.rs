use super::{merge_xor, split_pair, ColumnStore};
use crate::matrix::Index;

/// Sorted vectors; addition is a linear merge into a reused buffer.
#[derive(Debug, Clone, Default)]
pub struct VecStore {
    cols: Vec<Vec<Index>>,
    scratch: Vec<Index>,
}

impl ColumnStore for VecStore {
    fn with_slots(num_slots: usize) -> Self {
        Self {
            cols: vec![Vec::new(); num_slots],
            scratch: Vec::new(),
        }
    }

    fn num_slots(&self) -> usize {
        self.cols.len()
    }

    fn add_into(&mut self, src: Index, dst: Index) -> usize {
        let (s, d) = split_pair(&mut self.cols, src, dst);
        merge_xor(d, s, &mut self.scratch);
        std::mem::swap(d, &mut self.scratch);
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
        self.cols[j].clear();
        self.cols[j].extend_from_slice(rows);
    }

    fn visit_entries(&mut self, j: Index, f: &mut dyn FnMut(Index)) {
        self.cols[j].iter().for_each(|&i| f(i));
    }

    fn add_entries(&mut self, j: Index, rows: &[Index]) {
        merge_xor(&self.cols[j], rows, &mut self.scratch);
        std::mem::swap(&mut self.cols[j], &mut self.scratch);
    }

    fn remove_entries(&mut self, j: Index, rows: &[Index]) {
        let mut k = 0;
        self.cols[j].retain(|&i| {
            while k < rows.len() && rows[k] < i {
                k += 1;
            }
            !(k < rows.len() && rows[k] == i)
        });
    }

    fn entries_sorted(&mut self, j: Index) -> Vec<Index> {
        self.cols[j].clone()
    }
}
