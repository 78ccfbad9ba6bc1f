//! Step arrays, walks on the grid, and the staircase construction.
//!
//! A walk is fixed by its start vertex and its array of steps
//! `a_i = v_i − v_{i−1}`. The staircase array for odd `n` is the concatenation
//! of the stretches `S_1, …, S_{(n−1)/2}`, where `S_k` alternates
//! `(0, 2k−1)` and `(2k−1, 0)` and ends in `(2k, 0)`, for `2n` steps in all.
//!
//! Walks are checked two ways: by partial sums of the step array (no vertex
//! bookkeeping) and, in the tests, by plain vertex and orbit counting.

use std::fmt;

use crate::error::{Error, Result};
use crate::grid::{Edge, GridEdge, GridGraph, GridVertex, Offset, Step};

/// A sequence of steps on a fixed grid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StepArray {
    grid: GridGraph,
    steps: Vec<Step>,
    /// `Some(2n)` for stretches and staircase arrays.
    stretch_width: Option<usize>,
}

impl StepArray {
    pub fn new(grid: GridGraph, steps: Vec<Step>) -> Self {
        StepArray { grid, steps, stretch_width: None }
    }

    /// Validates raw `(drow, dcol)` pairs against the grid.
    pub fn from_pairs(grid: GridGraph, pairs: &[(i64, i64)]) -> Result<Self> {
        let steps = pairs.iter().map(|&(r, c)| grid.step(r, c)).collect::<Result<Vec<_>>>()?;
        Ok(Self::new(grid, steps))
    }

    pub fn grid(&self) -> GridGraph {
        self.grid
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn stretch_width(&self) -> Option<usize> {
        self.stretch_width
    }

    /// The slices of length `stretch_width`, if this is a stretch-structured array.
    pub fn stretches(&self) -> Option<std::slice::Chunks<'_, Step>> {
        self.stretch_width.map(|w| self.steps.chunks(w))
    }

    /// The array of the same walk read from its far end: negated and reversed.
    pub fn reversed(&self) -> StepArray {
        let steps = self.steps.iter().rev().map(|&s| self.grid.negate_step(s)).collect();
        StepArray::new(self.grid, steps)
    }
}

impl fmt::Display for StepArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, s) in self.steps.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, "]")
    }
}

fn check_staircase_n(n: usize) -> Result<()> {
    if n < 3 || n.is_multiple_of(2) {
        return Err(Error::Dimension(format!("staircase arrays need odd n >= 3, got {n}")));
    }
    Ok(())
}

fn check_stretch_index(n: usize, k: usize) -> Result<()> {
    check_staircase_n(n)?;
    if k == 0 || k > (n - 1) / 2 {
        return Err(Error::IndexRange(format!("stretch index k = {k} outside 1..={}", (n - 1) / 2)));
    }
    Ok(())
}

/// `S_k = [(0,2k−1), (2k−1,0), …, (0,2k−1), (2k,0)]`, length `2n`.
pub fn stretch(n: usize, k: usize) -> Result<StepArray> {
    check_stretch_index(n, k)?;
    let grid = GridGraph::square(n)?;
    let c = (2 * k - 1) as i64;
    let mut steps = Vec::with_capacity(2 * n);
    for _ in 0..n - 1 {
        steps.push(grid.step(0, c)?);
        steps.push(grid.step(c, 0)?);
    }
    steps.push(grid.step(0, c)?);
    steps.push(grid.step(c + 1, 0)?);
    Ok(StepArray { grid, steps, stretch_width: Some(2 * n) })
}

/// `[S_1, …, S_{(n−1)/2}]`, length `n(n−1)`.
pub fn staircase_array(n: usize) -> Result<StepArray> {
    check_staircase_n(n)?;
    let grid = GridGraph::square(n)?;
    let mut steps = Vec::with_capacity(n * (n - 1));
    for k in 1..=(n - 1) / 2 {
        steps.extend(stretch(n, k)?.steps);
    }
    Ok(StepArray { grid, steps, stretch_width: Some(2 * n) })
}

fn div_ceil2(x: i64) -> i64 {
    (x + 1).div_euclid(2)
}

/// Closed-form sum of the partial stretch `S_k^{p,q}` (1-based, inclusive),
/// as `(row, col)` residues mod `n`.
pub fn partial_stretch_sum(n: usize, k: usize, p: usize, q: usize) -> Result<(usize, usize)> {
    check_stretch_index(n, k)?;
    if p < 1 || p > q || q > 2 * n {
        return Err(Error::IndexRange(format!("need 1 <= p <= q <= {}, got p = {p}, q = {q}", 2 * n)));
    }
    let (n, c, p, q) = (n as i64, (2 * k - 1) as i64, p as i64, q as i64);
    let (row, col) = if q != 2 * n {
        ((q.div_euclid(2) - (p - 1).div_euclid(2)) * c, (div_ceil2(q) - div_ceil2(p - 1)) * c)
    } else {
        (1 - (p - 1).div_euclid(2) * c, -div_ceil2(p - 1) * c)
    };
    Ok((row.rem_euclid(n) as usize, col.rem_euclid(n) as usize))
}

/// A walk `v_0 v_1 … v_ℓ` with `v_i = v_0 + a_1 + … + a_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Walk {
    start: GridVertex,
    steps: StepArray,
    vertices: Vec<GridVertex>,
}

/// Walks `arr` from `v0`.
pub fn walk_from_array(v0: GridVertex, arr: &StepArray) -> Result<Walk> {
    let grid = arr.grid;
    if !grid.contains_vertex(v0) {
        return Err(Error::IndexRange(format!("start {v0} is not a vertex of K_{} x K_{}", grid.n(), grid.m())));
    }
    let mut vertices = Vec::with_capacity(arr.len() + 1);
    vertices.push(v0);
    let mut cur = v0;
    for s in &arr.steps {
        cur = grid.translate(cur, s.offset());
        vertices.push(cur);
    }
    Ok(Walk { start: v0, steps: arr.clone(), vertices })
}

impl Walk {
    pub fn grid(&self) -> GridGraph {
        self.steps.grid
    }

    pub fn start(&self) -> GridVertex {
        self.start
    }

    pub fn end(&self) -> GridVertex {
        *self.vertices.last().expect("a walk has at least its start vertex")
    }

    pub fn steps(&self) -> &StepArray {
        &self.steps
    }

    pub fn vertices(&self) -> &[GridVertex] {
        &self.vertices
    }

    /// Number of edges, counting repeats.
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// `e_i = {v_{i−1}, v_i}` in walk order.
    pub fn edges(&self) -> Vec<GridEdge> {
        self.vertices
            .windows(2)
            .map(|w| GridEdge::new(w[0], w[1]).expect("steps move along exactly one grid line"))
            .collect()
    }

    pub fn edge_indices(&self) -> Vec<Edge> {
        let grid = self.grid();
        self.edges().iter().map(|e| grid.to_edge(e)).collect()
    }

    /// The same walk traversed from `v_ℓ`.
    pub fn reversed(&self) -> Walk {
        let mut vertices = self.vertices.clone();
        vertices.reverse();
        Walk { start: vertices[0], steps: self.steps.reversed(), vertices }
    }

    /// The orientation starting at the lexicographically smaller endpoint.
    pub fn canonical(&self) -> Walk {
        if self.end() < self.start {
            self.reversed()
        } else {
            self.clone()
        }
    }

    /// First `(i, j)`, `i < j`, with `Σ_{g=i+1..j} a_g = 0`, i.e. `v_i = v_j`.
    pub fn repeated_vertex(&self) -> Option<(usize, usize)> {
        let grid = self.grid();
        let steps = self.steps.steps();
        for i in 0..steps.len() {
            let mut acc = Offset::default();
            for (j, s) in steps.iter().enumerate().skip(i) {
                acc = grid.add(acc, s.offset());
                if acc.is_zero() {
                    return Some((i, j + 1));
                }
            }
        }
        None
    }
}

/// Path test by partial sums: no slice of consecutive steps sums to zero.
pub fn is_path(w: &Walk) -> bool {
    w.repeated_vertex().is_none()
}

/// First pair of walk edges `(i, j)` (0-based) lying in the same orbit of
/// the row shift, found from the step array alone.
pub fn orbit_collision(arr: &StepArray) -> Option<(usize, usize)> {
    let grid = arr.grid;
    let a = arr.steps();
    for i in 0..a.len() {
        let mut col_sum = 0usize;
        for j in i + 1..a.len() {
            // col_sum = (a[i] + … + a[j−1]).col
            col_sum = (col_sum + a[j - 1].dcol()) % grid.m();
            if col_sum == 0 && a[i] == a[j] {
                return Some((i, j));
            }
            let through = (col_sum + a[j].dcol()) % grid.m();
            if through == 0 && a[i] == grid.negate_step(a[j]) {
                return Some((i, j));
            }
        }
    }
    None
}

/// At most one edge of the walk from each row-shift edge orbit.
pub fn one_edge_per_orbit(arr: &StepArray) -> bool {
    orbit_collision(arr).is_none()
}

/// Trial-division primality.
pub fn is_prime(n: usize) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// The staircase walk from `(0,0)`, certified to be a path meeting every
/// row-shift orbit at most once. `force` skips the primality gate but not
/// the certification.
pub fn build_staircase_path(n: usize, force: bool) -> Result<Walk> {
    if n < 3 || n.is_multiple_of(2) || (!force && !is_prime(n)) {
        return Err(Error::NotOddPrime(n));
    }
    let arr = staircase_array(n)?;
    let walk = walk_from_array(arr.grid.vertex(0, 0), &arr)?;
    if let Some((i, j)) = walk.repeated_vertex() {
        return Err(Error::ConstructionInvalid {
            check: "is_path",
            detail: format!("vertex {} repeats at positions {i} and {j}", walk.vertices[i]),
        });
    }
    if let Some((i, j)) = orbit_collision(&arr) {
        let edges = walk.edges();
        return Err(Error::ConstructionInvalid {
            check: "one_edge_per_orbit",
            detail: format!("edges {} and {} share a row-shift orbit", edges[i], edges[j]),
        });
    }
    Ok(walk)
}
