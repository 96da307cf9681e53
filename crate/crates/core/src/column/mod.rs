//! Interchangeable column representations.
//!
//! Every store holds `N` slots, each a Z2 column over rows `0..N`. The
//! [`ColumnStore`] trait is the only thing reducers see, so any reducer runs
//! unchanged over any representation. Whatever the layout, the semantic state
//! of a slot is a finite set of row indices; two stores driven by the same
//! operation sequence agree on that state at every step.

mod bitmap;
mod heap;
mod list;
mod pivot_cache;
mod set;
mod vector;

use std::fmt;
use std::str::FromStr;

pub use bitmap::{BitTree, BitmapStore};
pub use heap::HeapStore;
pub use list::ListStore;
pub use pivot_cache::PivotCache;
pub use set::SetStore;
pub use vector::VecStore;

use crate::error::Error;
use crate::matrix::{FilteredBoundaryMatrix, Index};

pub trait ColumnStore {
    /// An empty store with `num_slots` columns over rows `0..num_slots`.
    fn with_slots(num_slots: usize) -> Self
    where
        Self: Sized;

    fn num_slots(&self) -> usize;

    /// Replaces `dst` by `dst △ src` and returns `|src|`, the number of
    /// entries flipped in `dst`. `src` is left unchanged.
    fn add_into(&mut self, src: Index, dst: Index) -> usize;

    /// Largest row index in the slot, if any.
    fn pivot(&mut self, j: Index) -> Option<Index>;

    /// Exact number of entries, canonicalizing lazy representations first.
    fn size_exact(&mut self, j: Index) -> usize;

    /// Exchanges the contents of two slots without copying entries.
    fn swap_slots(&mut self, a: Index, b: Index);

    fn clear_slot(&mut self, j: Index);

    /// Overwrites the slot with `rows` (strictly ascending).
    fn set_entries(&mut self, j: Index, rows: &[Index]);

    /// Calls `f` on every entry of the slot in ascending order.
    fn visit_entries(&mut self, j: Index, f: &mut dyn FnMut(Index));

    /// Toggles every row of `rows` (strictly ascending) in slot `j`.
    fn add_entries(&mut self, j: Index, rows: &[Index]);

    /// Deletes the listed rows (ascending) that are present in the slot.
    fn remove_entries(&mut self, j: Index, rows: &[Index]);

    fn entries_sorted(&mut self, j: Index) -> Vec<Index> {
        let mut out = Vec::new();
        self.visit_entries(j, &mut |i| out.push(i));
        out
    }

    fn is_zero(&mut self, j: Index) -> bool {
        self.pivot(j).is_none()
    }

    /// Hint that `j` is the column under reduction. Only the pivot-cache
    /// adapter acts on it.
    fn activate(&mut self, _j: Index) {}

    /// Ends the current activation, writing any cached state back.
    fn deactivate(&mut self) {}
}

/// Initializes a store so that slot `j` holds column `j` of `m`.
pub fn init_store<S: ColumnStore>(m: &FilteredBoundaryMatrix) -> S {
    let mut store = S::with_slots(m.len());
    for (j, col) in m.columns().iter().enumerate() {
        if !col.is_empty() {
            store.set_entries(j, col);
        }
    }
    store
}

/// Borrows `v[src]` shared and `v[dst]` mutably.
pub(crate) fn split_pair<T>(v: &mut [T], src: usize, dst: usize) -> (&T, &mut T) {
    assert_ne!(src, dst, "source and destination slot must differ");
    if src < dst {
        let (lo, hi) = v.split_at_mut(dst);
        (&lo[src], &mut hi[0])
    } else {
        let (lo, hi) = v.split_at_mut(src);
        (&hi[0], &mut lo[dst])
    }
}

/// Symmetric difference of two ascending slices into `out`.
pub(crate) fn merge_xor(a: &[Index], b: &[Index], out: &mut Vec<Index>) {
    out.clear();
    out.reserve(a.len() + b.len());
    let (mut x, mut y) = (0, 0);
    while x < a.len() && y < b.len() {
        match a[x].cmp(&b[y]) {
            std::cmp::Ordering::Less => {
                out.push(a[x]);
                x += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[y]);
                y += 1;
            }
            std::cmp::Ordering::Equal => {
                x += 1;
                y += 1;
            }
        }
    }
    out.extend_from_slice(&a[x..]);
    out.extend_from_slice(&b[y..]);
}

/// The base layouts a store can use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BaseRepresentation {
    /// Sorted linked list, merged on addition.
    List,
    /// Sorted vector, merged on addition.
    Vector,
    /// Balanced ordered set, entries toggled one at a time.
    Set,
    /// Lazy max-heap; duplicates cancel when they reach the top.
    Heap,
    /// Dense bitmap with a hierarchical block index.
    Bitmap,
}

impl BaseRepresentation {
    pub const ALL: [BaseRepresentation; 5] = [
        BaseRepresentation::List,
        BaseRepresentation::Vector,
        BaseRepresentation::Set,
        BaseRepresentation::Heap,
        BaseRepresentation::Bitmap,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BaseRepresentation::List => "list",
            BaseRepresentation::Vector => "vector",
            BaseRepresentation::Set => "set",
            BaseRepresentation::Heap => "heap",
            BaseRepresentation::Bitmap => "bitmap",
        }
    }
}

/// A base layout, optionally wrapped by the pivot-cache adapter (`p-` names).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RepresentationId {
    pub base: BaseRepresentation,
    pub pivot_cache: bool,
}

impl RepresentationId {
    pub const fn plain(base: BaseRepresentation) -> Self {
        Self {
            base,
            pivot_cache: false,
        }
    }

    pub const fn cached(base: BaseRepresentation) -> Self {
        Self {
            base,
            pivot_cache: true,
        }
    }

    /// All ten representations.
    pub fn all() -> Vec<RepresentationId> {
        BaseRepresentation::ALL
            .iter()
            .flat_map(|&b| [Self::plain(b), Self::cached(b)])
            .collect()
    }

    fn valid_names() -> String {
        Self::all()
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(", ")
    }
}

impl Default for RepresentationId {
    fn default() -> Self {
        Self::plain(BaseRepresentation::Vector)
    }
}

impl fmt::Display for RepresentationId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.pivot_cache {
            write!(f, "p-{}", self.base.name())
        } else {
            f.write_str(self.base.name())
        }
    }
}

impl FromStr for RepresentationId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let (cached, rest) = match s.strip_prefix("p-") {
            Some(rest) => (true, rest),
            None => (false, s),
        };
        BaseRepresentation::ALL
            .iter()
            .find(|b| b.name() == rest)
            .map(|&base| Self {
                base,
                pivot_cache: cached,
            })
            .ok_or_else(|| Error::UnknownName {
                kind: "representation",
                name: s.to_string(),
                valid: Self::valid_names(),
            })
    }
}

#[cfg(test)]
mod tests;
