//! Filtered 2-complexes that separate the reduction strategies, plus random
//! shuffled filtrations.
//!
//! The `k*` families are built from an open wheel: a center `c`, rim vertices
//! `w_0..=w_n`, spokes `s_t = {c, w_t}`, tires `r_t = {w_{t-1}, w_t}` and
//! wheel triangles `T_t = {c, w_{t-1}, w_t}`, the latter inserted as
//! `T_n, …, T_1` so their pivots form a descending staircase. A fan attaches
//! `n` triangles to one edge. Every output is a full complex: vertices, then
//! edges, then triangles.
//!
//! | family | fast              | quadratic (bitflips) |
//! |--------|-------------------|----------------------|
//! | `k1`   | retro             | twist, swap          |
//! | `k2`   | twist, swap       | retro                |
//! | `k3`   | swap              | twist                |
//! | `k4`   | twist             | swap                 |

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::matrix::{FilteredBoundaryMatrix, Index};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    K1,
    K2,
    K3,
    K4,
    Shuffled,
}

impl Family {
    pub const ALL: [Family; 5] = [
        Family::K1,
        Family::K2,
        Family::K3,
        Family::K4,
        Family::Shuffled,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::K1 => "k1",
            Family::K2 => "k2",
            Family::K3 => "k3",
            Family::K4 => "k4",
            Family::Shuffled => "shuffled",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::UnknownName {
                kind: "family",
                name: s.to_string(),
                valid: Self::ALL.map(Self::name).join(", "),
            })
    }
}

/// A family, a size and a seed (used by `shuffled` only).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GeneratorSpec {
    pub family: Family,
    pub n: usize,
    pub seed: u64,
}

impl GeneratorSpec {
    pub fn new(family: Family, n: usize, seed: u64) -> Self {
        Self { family, n, seed }
    }

    pub fn generate(&self) -> Result<FilteredBoundaryMatrix> {
        match self.family {
            Family::K1 => gen_k1(self.n),
            Family::K2 => gen_k2(self.n),
            Family::K3 => gen_k3(self.n),
            Family::K4 => gen_k4(self.n),
            Family::Shuffled => gen_shuffled(self.n, self.seed),
        }
    }

    /// Short instance label such as `k1-n16` or `shuffled-n50-s3`.
    pub fn label(&self) -> String {
        match self.family {
            Family::Shuffled => format!("shuffled-n{}-s{}", self.n, self.seed),
            f => format!("{f}-n{}", self.n),
        }
    }
}

/// Assembles a 2-complex from vertex-labelled edges and triangles given in
/// filtration order. Vertex labels are positions in the vertex block.
#[derive(Debug, Default)]
struct Complex {
    num_vertices: usize,
    edges: Vec<(usize, usize)>,
    triangles: Vec<[usize; 3]>,
}

impl Complex {
    fn vertices(num_vertices: usize) -> Self {
        Self {
            num_vertices,
            ..Default::default()
        }
    }

    fn edge(&mut self, a: usize, b: usize) {
        self.edges.push((a.min(b), a.max(b)));
    }

    fn triangle(&mut self, a: usize, b: usize, c: usize) {
        let mut t = [a, b, c];
        t.sort_unstable();
        self.triangles.push(t);
    }

    fn build(self) -> FilteredBoundaryMatrix {
        let nv = self.num_vertices;
        let ne = self.edges.len();
        let mut edge_index = HashMap::with_capacity(ne);
        let mut cells: Vec<(usize, Vec<Index>)> =
            Vec::with_capacity(nv + ne + self.triangles.len());
        cells.extend((0..nv).map(|_| (0, Vec::new())));
        for (k, &(a, b)) in self.edges.iter().enumerate() {
            assert!(a != b && b < nv, "bad edge {a}-{b}");
            assert!(
                edge_index.insert((a, b), nv + k).is_none(),
                "duplicate edge {a}-{b}"
            );
            cells.push((1, vec![a, b]));
        }
        for &[a, b, c] in &self.triangles {
            let mut col: Vec<Index> = [(a, b), (a, c), (b, c)]
                .iter()
                .map(|e| {
                    *edge_index
                        .get(e)
                        .unwrap_or_else(|| panic!("missing edge {e:?}"))
                })
                .collect();
            col.sort_unstable();
            cells.push((2, col));
        }
        FilteredBoundaryMatrix::from_cells(cells).expect("complex is a valid filtration")
    }
}

fn check_n(n: usize, min: usize) -> Result<()> {
    if n < min {
        return Err(Error::InvalidParameter(format!(
            "n must be at least {min}, got {n}"
        )));
    }
    Ok(())
}

/// Vertex labels of the open wheel, allocated from `next`.
struct Wheel {
    c: usize,
    /// Rim vertex `w_t`.
    w: Vec<usize>,
}

impl Wheel {
    fn new(next: &mut usize, n: usize) -> Self {
        let c = *next;
        let w = (*next + 1..*next + 2 + n).collect();
        *next += n + 2;
        Self { c, w }
    }

    fn n(&self) -> usize {
        self.w.len() - 1
    }

    fn spoke(&self, cx: &mut Complex, t: usize) {
        cx.edge(self.c, self.w[t]);
    }

    fn tires(&self, cx: &mut Complex) {
        for t in 1..=self.n() {
            cx.edge(self.w[t - 1], self.w[t]);
        }
    }

    fn inner_spokes(&self, cx: &mut Complex) {
        for t in 1..self.n() {
            self.spoke(cx, t);
        }
    }

    /// Wheel triangles `T_n, …, T_1`.
    fn staircase(&self, cx: &mut Complex) {
        for t in (1..=self.n()).rev() {
            cx.triangle(self.c, self.w[t - 1], self.w[t]);
        }
    }

    fn w_last(&self) -> usize {
        self.w[self.n()]
    }
}

/// Wheel with a fan on the final spoke.
///
/// Edges: initial spoke, tires, center fan edges, outer fan edges, inner
/// spokes, final spoke. Triangles: the staircase, then the fan.
pub fn gen_k1(n: usize) -> Result<FilteredBoundaryMatrix> {
    check_n(n, 2)?;
    let mut next = 0;
    let wh = Wheel::new(&mut next, n);
    let v: Vec<usize> = (next..next + n).collect();
    let mut cx = Complex::vertices(next + n);

    wh.spoke(&mut cx, 0);
    wh.tires(&mut cx);
    for &vi in &v {
        cx.edge(wh.c, vi);
    }
    for &vi in &v {
        cx.edge(wh.w_last(), vi);
    }
    wh.inner_spokes(&mut cx);
    wh.spoke(&mut cx, n);

    wh.staircase(&mut cx);
    for &vi in &v {
        cx.triangle(wh.c, wh.w_last(), vi);
    }
    Ok(cx.build())
}

/// `k1` plus an apex joined to every wheel vertex, which makes the tires
/// positive.
///
/// Edges: apex edges, center fan edges (`v_n` first), initial spoke, tires,
/// inner spokes, outer fan edges, final spoke.
pub fn gen_k2(n: usize) -> Result<FilteredBoundaryMatrix> {
    check_n(n, 2)?;
    let apex = 0;
    let mut next = 1;
    let wh = Wheel::new(&mut next, n);
    let v: Vec<usize> = (next..next + n).collect();
    let mut cx = Complex::vertices(next + n);

    cx.edge(apex, wh.c);
    for &w in &wh.w {
        cx.edge(apex, w);
    }
    for &vi in v.iter().rev() {
        cx.edge(wh.c, vi);
    }
    wh.spoke(&mut cx, 0);
    wh.tires(&mut cx);
    wh.inner_spokes(&mut cx);
    for &vi in &v {
        cx.edge(wh.w_last(), vi);
    }
    wh.spoke(&mut cx, n);

    wh.staircase(&mut cx);
    for &vi in &v {
        cx.triangle(wh.c, wh.w_last(), vi);
    }
    Ok(cx.build())
}

/// Wheel, one triangle `M = {c, w_n, u}` on the final spoke and a fan on
/// `{w_n, u}`.
///
/// Edges: initial spoke, `{c,u}`, fan edges at `u`, tires, fan edges at
/// `w_n`, `{w_n,u}`, spokes `s_1..=s_n`. Triangles: staircase, `M`, fan.
pub fn gen_k3(n: usize) -> Result<FilteredBoundaryMatrix> {
    check_n(n, 2)?;
    let mut next = 0;
    let wh = Wheel::new(&mut next, n);
    let u = next;
    let v: Vec<usize> = (u + 1..u + 1 + n).collect();
    let mut cx = Complex::vertices(u + 1 + n);
    let wn = wh.w_last();

    wh.spoke(&mut cx, 0);
    cx.edge(wh.c, u);
    for &vi in &v {
        cx.edge(u, vi);
    }
    wh.tires(&mut cx);
    for &vi in &v {
        cx.edge(wn, vi);
    }
    cx.edge(wn, u);
    wh.inner_spokes(&mut cx);
    wh.spoke(&mut cx, n);

    wh.staircase(&mut cx);
    cx.triangle(wh.c, wn, u);
    for &vi in &v {
        cx.triangle(wn, u, vi);
    }
    Ok(cx.build())
}

/// `k3` with two more triangles before `M`: `{w_n, u, x}` and `{u, x, y}`,
/// sharing the edge `{u, x}`, which comes last.
///
/// Edges: initial spoke, tires, fan edges at `u`, `{c,u}`, `{x,y}`, `{u,y}`,
/// `{w_n,x}`, fan edges at `w_n`, spokes `s_1..=s_n`, `{w_n,u}`, `{u,x}`.
/// Triangles: staircase, `{w_n,u,x}`, `{u,x,y}`, `{c,w_n,u}`, fan.
pub fn gen_k4(n: usize) -> Result<FilteredBoundaryMatrix> {
    check_n(n, 2)?;
    let mut next = 0;
    let wh = Wheel::new(&mut next, n);
    let (u, x, y) = (next, next + 1, next + 2);
    let v: Vec<usize> = (y + 1..y + 1 + n).collect();
    let mut cx = Complex::vertices(y + 1 + n);
    let wn = wh.w_last();

    wh.spoke(&mut cx, 0);
    wh.tires(&mut cx);
    for &vi in &v {
        cx.edge(u, vi);
    }
    cx.edge(wh.c, u);
    cx.edge(x, y);
    cx.edge(u, y);
    cx.edge(wn, x);
    for &vi in &v {
        cx.edge(wn, vi);
    }
    wh.inner_spokes(&mut cx);
    wh.spoke(&mut cx, n);
    cx.edge(wn, u);
    cx.edge(u, x);

    wh.staircase(&mut cx);
    cx.triangle(wn, u, x);
    cx.triangle(u, x, y);
    cx.triangle(wh.c, wn, u);
    for &vi in &v {
        cx.triangle(wn, u, vi);
    }
    Ok(cx.build())
}

/// The full 2-skeleton of the simplex on `n` vertices: vertices in order,
/// then all edges and all triangles, each block uniformly shuffled with a
/// ChaCha8 stream seeded by `seed`.
pub fn gen_shuffled(n: usize, seed: u64) -> Result<FilteredBoundaryMatrix> {
    check_n(n, 3)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cx = Complex::vertices(n);
    let mut edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .collect();
    edges.shuffle(&mut rng);
    for (a, b) in edges {
        cx.edge(a, b);
    }
    let mut triangles: Vec<[usize; 3]> = (0..n)
        .flat_map(|a| (a + 1..n).flat_map(move |b| (b + 1..n).map(move |c| [a, b, c])))
        .collect();
    triangles.shuffle(&mut rng);
    for [a, b, c] in triangles {
        cx.triangle(a, b, c);
    }
    Ok(cx.build())
}
