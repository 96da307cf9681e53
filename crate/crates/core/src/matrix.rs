//! Filtered boundary matrices, persistence pairings and dualization.
//!
//! Indices are 0-based in the Rust API. The ASCII file format and the
//! pairing files written by the CLI are 1-based; conversion happens only at
//! those boundaries.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::io::{BufRead, Read};

use crate::error::{Error, Result};

/// Column or row index into a boundary matrix (0-based).
pub type Index = usize;

/// A square, strictly upper-triangular Z2 matrix whose columns carry a cell
/// dimension. Column `j` lists the facets of the `j`-th cell of a filtration.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FilteredBoundaryMatrix {
    dims: Vec<usize>,
    columns: Vec<Vec<Index>>,
}

impl FilteredBoundaryMatrix {
    /// Builds a matrix from `(dimension, facets)` pairs after checking every
    /// structural invariant.
    pub fn new(dims: Vec<usize>, columns: Vec<Vec<Index>>) -> Result<Self> {
        if dims.len() != columns.len() {
            return Err(Error::Invalid(format!(
                "{} dimensions for {} columns",
                dims.len(),
                columns.len()
            )));
        }
        let m = Self { dims, columns };
        m.validate()?;
        Ok(m)
    }

    /// Builds a matrix from `(dimension, facets)` pairs.
    pub fn from_cells<I>(cells: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, Vec<Index>)>,
    {
        let (dims, columns) = cells.into_iter().unzip();
        Self::new(dims, columns)
    }

    fn validate(&self) -> Result<()> {
        for (j, col) in self.columns.iter().enumerate() {
            for w in col.windows(2) {
                if w[0] >= w[1] {
                    return Err(Error::InvalidColumn {
                        column: j + 1,
                        reason: format!(
                            "row indices not strictly ascending ({} then {})",
                            w[0] + 1,
                            w[1] + 1
                        ),
                    });
                }
            }
            for &i in col {
                if i >= j {
                    return Err(Error::InvalidColumn {
                        column: j + 1,
                        reason: format!("row index {} is not above the diagonal", i + 1),
                    });
                }
                if self.dims[i] + 1 != self.dims[j] {
                    return Err(Error::InvalidColumn {
                        column: j + 1,
                        reason: format!(
                            "row {} has dimension {}, expected {}",
                            i + 1,
                            self.dims[i],
                            self.dims[j] as isize - 1
                        ),
                    });
                }
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.columns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self, j: Index) -> usize {
        self.dims[j]
    }

    pub fn column(&self, j: Index) -> &[Index] {
        &self.columns[j]
    }

    pub fn columns(&self) -> &[Vec<Index>] {
        &self.columns
    }

    pub fn max_dim(&self) -> usize {
        self.dims.iter().copied().max().unwrap_or(0)
    }

    /// Total number of nonzero entries.
    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    /// True when every column of dimension `d` has either no entries or
    /// exactly `d + 1` of them, as for a simplicial complex.
    pub fn is_simplicial(&self) -> bool {
        self.columns
            .iter()
            .zip(&self.dims)
            .all(|(c, &d)| c.is_empty() || c.len() == d + 1)
    }

    /// Parses the ASCII boundary format: one line per cell, the dimension
    /// followed by 1-based ascending facet indices. `#` starts a comment line.
    pub fn load<R: Read>(source: R) -> Result<Self> {
        let reader = std::io::BufReader::new(source);
        let mut dims = Vec::new();
        let mut columns = Vec::new();
        for (lineno, line) in reader.lines().enumerate() {
            let line = line?;
            let trimmed = line.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let parse_err = |message: String| Error::Parse {
                line: lineno + 1,
                message,
            };
            let mut tokens = trimmed.split_whitespace();
            let dim: usize = tokens
                .next()
                .expect("non-empty line")
                .parse()
                .map_err(|e| parse_err(format!("bad dimension: {e}")))?;
            let mut col = Vec::new();
            for tok in tokens {
                let idx: usize = tok
                    .parse()
                    .map_err(|e| parse_err(format!("bad row index {tok:?}: {e}")))?;
                if idx == 0 {
                    return Err(parse_err("row indices are 1-based".into()));
                }
                col.push(idx - 1);
            }
            dims.push(dim);
            columns.push(col);
        }
        Self::new(dims, columns)
    }

    pub fn load_str(text: &str) -> Result<Self> {
        Self::load(text.as_bytes())
    }

    /// Serializes to the ASCII boundary format. `load(save(m)) == m`.
    pub fn save(&self) -> String {
        let mut out = String::new();
        for (col, d) in self.columns.iter().zip(&self.dims) {
            write!(out, "{d}").unwrap();
            for &i in col {
                write!(out, " {}", i + 1).unwrap();
            }
            out.push('\n');
        }
        out
    }

    /// Anti-transpose: entry `(i, j)` moves to `(N-1-j, N-1-i)` and the
    /// dimension of dual cell `k` is `maxdim - dim(N-1-k)`.
    pub fn anti_transpose(&self) -> Self {
        let n = self.len();
        let max_dim = self.max_dim();
        let mut columns = vec![Vec::new(); n];
        // Walking primal columns right to left yields ascending dual rows.
        for j in (0..n).rev() {
            for &i in &self.columns[j] {
                columns[n - 1 - i].push(n - 1 - j);
            }
        }
        let dims = (0..n).map(|k| max_dim - self.dims[n - 1 - k]).collect();
        Self { dims, columns }
    }
}

/// Pivot pairs `(birth, death)` and essential indices of a reduction.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PersistencePairing {
    pairs: BTreeSet<(Index, Index)>,
    essential: BTreeSet<Index>,
}

impl PersistencePairing {
    pub fn new(
        pairs: impl IntoIterator<Item = (Index, Index)>,
        essential: impl IntoIterator<Item = Index>,
    ) -> Self {
        let pairs: BTreeSet<_> = pairs.into_iter().collect();
        debug_assert!(pairs.iter().all(|&(i, j)| i < j));
        Self {
            pairs,
            essential: essential.into_iter().collect(),
        }
    }

    /// Builds a pairing from 1-based indices.
    pub fn from_one_based(
        pairs: impl IntoIterator<Item = (Index, Index)>,
        essential: impl IntoIterator<Item = Index>,
    ) -> Self {
        Self::new(
            pairs.into_iter().map(|(i, j)| (i - 1, j - 1)),
            essential.into_iter().map(|i| i - 1),
        )
    }

    /// Builds a pairing from a pivot table: `pivot_of[j] = Some(i)` when
    /// column `j` ends with pivot `i`. Indices in no pair are essential.
    pub fn from_pivots(pivot_of: &[Option<Index>]) -> Self {
        let n = pivot_of.len();
        let mut used = vec![false; n];
        let mut pairs = BTreeSet::new();
        for (j, p) in pivot_of.iter().enumerate() {
            if let Some(i) = *p {
                pairs.insert((i, j));
                used[i] = true;
                used[j] = true;
            }
        }
        let essential = (0..n).filter(|&k| !used[k]).collect();
        Self { pairs, essential }
    }

    pub fn pairs(&self) -> impl Iterator<Item = (Index, Index)> + '_ {
        self.pairs.iter().copied()
    }

    pub fn essential(&self) -> impl Iterator<Item = Index> + '_ {
        self.essential.iter().copied()
    }

    pub fn num_pairs(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_essential(&self, i: Index) -> bool {
        self.essential.contains(&i)
    }

    /// Pairs in 1-based indexing, sorted by birth.
    pub fn pairs_one_based(&self) -> Vec<(Index, Index)> {
        self.pairs.iter().map(|&(i, j)| (i + 1, j + 1)).collect()
    }

    pub fn essential_one_based(&self) -> Vec<Index> {
        self.essential.iter().map(|&i| i + 1).collect()
    }

    /// The augmented pairing: every pair plus `(i, n)` for each essential
    /// `i`, where `n` plays the role of the "never dies" index.
    pub fn augmented(&self, n: usize) -> Vec<(Index, Index)> {
        let mut out: Vec<_> = self
            .pairs
            .iter()
            .copied()
            .chain(self.essential.iter().map(|&i| (i, n)))
            .collect();
        out.sort_unstable();
        out
    }

    /// Maps a pairing of the anti-transposed matrix back to the primal one:
    /// `(i, j) -> (n-1-j, n-1-i)` and essential `i -> n-1-i`.
    pub fn map_dual(&self, n: usize) -> Self {
        Self {
            pairs: self
                .pairs
                .iter()
                .map(|&(i, j)| (n - 1 - j, n - 1 - i))
                .collect(),
            essential: self.essential.iter().map(|&i| n - 1 - i).collect(),
        }
    }

    /// The text form written by `sparse-reduce reduce`: `i j` lines followed
    /// by `essential i` lines, 1-based.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (i, j) in self.pairs_one_based() {
            writeln!(out, "{i} {j}").unwrap();
        }
        for i in self.essential_one_based() {
            writeln!(out, "essential {i}").unwrap();
        }
        out
    }
}
