use super::ColumnStore;
use crate::matrix::Index;

const WORD: usize = 64;

/// A dense bitset over `0..len` with a summary hierarchy: bit `b` of a word
/// at level `k + 1` is set iff word `b` of level `k` is nonzero. The top
/// level is a single word, so the maximum is found in `O(log_64 len)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BitTree {
    levels: Vec<Vec<u64>>,
    count: usize,
}

impl BitTree {
    pub fn new(len: usize) -> Self {
        let mut levels = Vec::new();
        let mut words = len.div_ceil(WORD).max(1);
        loop {
            levels.push(vec![0u64; words]);
            if words == 1 {
                break;
            }
            words = words.div_ceil(WORD);
        }
        Self { levels, count: 0 }
    }

    pub fn count(&self) -> usize {
        self.count
    }

    pub fn is_empty(&self) -> bool {
        self.count == 0
    }

    pub fn contains(&self, i: Index) -> bool {
        self.levels[0][i / WORD] >> (i % WORD) & 1 == 1
    }

    pub fn toggle(&mut self, i: Index) {
        if self.contains(i) {
            self.count -= 1;
        } else {
            self.count += 1;
        }
        let mut pos = i;
        for level in &mut self.levels {
            let w = &mut level[pos / WORD];
            let was_zero = *w == 0;
            *w ^= 1u64 << (pos % WORD);
            if was_zero == (*w == 0) {
                break;
            }
            pos /= WORD;
        }
    }

    pub fn max(&self) -> Option<Index> {
        let top = self.levels.len() - 1;
        if self.levels[top][0] == 0 {
            return None;
        }
        let mut idx = 0;
        for level in self.levels.iter().rev() {
            let w = level[idx];
            idx = idx * WORD + (WORD - 1 - w.leading_zeros() as usize);
        }
        Some(idx)
    }

    fn visit(&self, level: usize, word: usize, f: &mut dyn FnMut(Index)) {
        let mut w = self.levels[level][word];
        while w != 0 {
            let b = w.trailing_zeros() as usize;
            w &= w - 1;
            let child = word * WORD + b;
            if level == 0 {
                f(child);
            } else {
                self.visit(level - 1, child, f);
            }
        }
    }

    /// Visits set bits in ascending order.
    pub fn for_each(&self, f: &mut dyn FnMut(Index)) {
        self.visit(self.levels.len() - 1, 0, f);
    }

    pub fn to_vec(&self) -> Vec<Index> {
        let mut out = Vec::with_capacity(self.count);
        self.for_each(&mut |i| out.push(i));
        out
    }

    fn zero(&mut self, level: usize, word: usize) {
        let mut w = std::mem::take(&mut self.levels[level][word]);
        if level == 0 {
            return;
        }
        while w != 0 {
            let b = w.trailing_zeros() as usize;
            w &= w - 1;
            self.zero(level - 1, word * WORD + b);
        }
    }

    /// Empties the set in time proportional to the touched words.
    pub fn clear(&mut self) {
        let top = self.levels.len() - 1;
        self.zero(top, 0);
        self.count = 0;
    }
}

/// Every nonempty column is its own [`BitTree`]; empty columns hold no
/// allocation.
#[derive(Debug, Clone, Default)]
pub struct BitmapStore {
    rows: usize,
    cols: Vec<Option<BitTree>>,
}

impl BitmapStore {
    fn slot(&mut self, j: Index) -> &mut BitTree {
        let rows = self.rows;
        self.cols[j].get_or_insert_with(|| BitTree::new(rows))
    }

    fn release_if_empty(&mut self, j: Index) {
        if self.cols[j].as_ref().is_some_and(BitTree::is_empty) {
            self.cols[j] = None;
        }
    }
}

impl ColumnStore for BitmapStore {
    fn with_slots(num_slots: usize) -> Self {
        Self {
            rows: num_slots,
            cols: vec![None; num_slots],
        }
    }

    fn num_slots(&self) -> usize {
        self.cols.len()
    }

    fn add_into(&mut self, src: Index, dst: Index) -> usize {
        assert_ne!(src, dst);
        let Some(s) = self.cols[src].take() else {
            return 0;
        };
        let d = self.slot(dst);
        s.for_each(&mut |i| d.toggle(i));
        let flips = s.count();
        self.cols[src] = Some(s);
        self.release_if_empty(dst);
        flips
    }

    fn pivot(&mut self, j: Index) -> Option<Index> {
        self.cols[j].as_ref().and_then(BitTree::max)
    }

    fn size_exact(&mut self, j: Index) -> usize {
        self.cols[j].as_ref().map_or(0, BitTree::count)
    }

    fn swap_slots(&mut self, a: Index, b: Index) {
        self.cols.swap(a, b);
    }

    fn clear_slot(&mut self, j: Index) {
        self.cols[j] = None;
    }

    fn set_entries(&mut self, j: Index, rows: &[Index]) {
        self.cols[j] = None;
        if !rows.is_empty() {
            let t = self.slot(j);
            rows.iter().for_each(|&i| t.toggle(i));
        }
    }

    fn visit_entries(&mut self, j: Index, f: &mut dyn FnMut(Index)) {
        if let Some(t) = &self.cols[j] {
            t.for_each(f);
        }
    }

    fn add_entries(&mut self, j: Index, rows: &[Index]) {
        if rows.is_empty() {
            return;
        }
        let t = self.slot(j);
        rows.iter().for_each(|&i| t.toggle(i));
        self.release_if_empty(j);
    }

    fn remove_entries(&mut self, j: Index, rows: &[Index]) {
        if let Some(t) = &mut self.cols[j] {
            for &i in rows {
                if t.contains(i) {
                    t.toggle(i);
                }
            }
        }
        self.release_if_empty(j);
    }
}
