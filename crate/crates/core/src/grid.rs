//! The rook's graph `K_n □ K_m` on `Z_n × Z_m`, plus the plain complete graph
//! used by the `K_9` fixture.
//!
//! Both graphs are implicit: only their dimensions are stored and adjacency is
//! answered arithmetically. The generic engine works on [`Graph`] with vertices
//! numbered `0..vertex_count()`; a grid vertex `(row, col)` has index
//! `row * m + col`, so index order is lexicographic `(row, col)` order.

use std::fmt;

use crate::error::{Error, Result};

/// A point of `Z_n × Z_m`. Construct through [`GridGraph::vertex`], which reduces.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GridVertex {
    row: usize,
    col: usize,
}

impl GridVertex {
    pub fn row(&self) -> usize {
        self.row
    }

    pub fn col(&self) -> usize {
        self.col
    }
}

impl fmt::Display for GridVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// A coordinate-wise displacement in `Z_n × Z_m`; may be zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Offset {
    pub drow: usize,
    pub dcol: usize,
}

impl Offset {
    pub fn is_zero(&self) -> bool {
        self.drow == 0 && self.dcol == 0
    }
}

impl fmt::Display for Offset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.drow, self.dcol)
    }
}

/// One move along a grid line: exactly one of the two residues is nonzero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Step {
    drow: usize,
    dcol: usize,
}

impl Step {
    pub fn drow(&self) -> usize {
        self.drow
    }

    pub fn dcol(&self) -> usize {
        self.dcol
    }

    pub fn offset(&self) -> Offset {
        Offset { drow: self.drow, dcol: self.dcol }
    }

    pub fn is_horizontal(&self) -> bool {
        self.drow == 0
    }
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.drow, self.dcol)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeKind {
    /// Endpoints share a row.
    Horizontal,
    /// Endpoints share a column.
    Vertical,
}

/// An edge of a grid, endpoints stored lexicographically smallest first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GridEdge {
    a: GridVertex,
    b: GridVertex,
}

impl GridEdge {
    /// Canonicalizes the pair; rejects identical endpoints and pairs differing
    /// in both coordinates.
    pub fn new(v: GridVertex, w: GridVertex) -> Result<Self> {
        if v == w || (v.row != w.row && v.col != w.col) {
            return Err(Error::NotAnEdge(format!("{{{v},{w}}}")));
        }
        let (a, b) = if v < w { (v, w) } else { (w, v) };
        Ok(GridEdge { a, b })
    }

    pub fn endpoints(&self) -> (GridVertex, GridVertex) {
        (self.a, self.b)
    }

    pub fn kind(&self) -> EdgeKind {
        if self.a.row == self.b.row {
            EdgeKind::Horizontal
        } else {
            EdgeKind::Vertical
        }
    }
}

impl fmt::Display for GridEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.a, self.b)
    }
}

/// `K_n □ K_m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GridGraph {
    n: usize,
    m: usize,
}

/// Builds `K_n □ K_m`; both dimensions must be at least 2.
pub fn make_grid(n: usize, m: usize) -> Result<GridGraph> {
    GridGraph::new(n, m)
}

fn choose2(k: usize) -> usize {
    k * k.saturating_sub(1) / 2
}

impl GridGraph {
    pub fn new(n: usize, m: usize) -> Result<Self> {
        if n < 2 || m < 2 {
            return Err(Error::Dimension(format!("K_{n} x K_{m} needs n >= 2 and m >= 2")));
        }
        if n.checked_mul(m).is_none_or(|v| v > u32::MAX as usize) {
            return Err(Error::Dimension(format!("K_{n} x K_{m} is too large")));
        }
        Ok(GridGraph { n, m })
    }

    /// Square grid `K_n □ K_n`.
    pub fn square(n: usize) -> Result<Self> {
        Self::new(n, n)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn is_square(&self) -> bool {
        self.n == self.m
    }

    pub fn vertex_count(&self) -> usize {
        self.n * self.m
    }

    pub fn edge_count(&self) -> usize {
        self.n * choose2(self.m) + self.m * choose2(self.n)
    }

    /// The vertex `(row mod n, col mod m)`.
    pub fn vertex(&self, row: i64, col: i64) -> GridVertex {
        GridVertex { row: row.rem_euclid(self.n as i64) as usize, col: col.rem_euclid(self.m as i64) as usize }
    }

    /// Like [`vertex`](Self::vertex) but rejects out-of-range coordinates
    /// instead of reducing them.
    pub fn checked_vertex(&self, row: usize, col: usize) -> Result<GridVertex> {
        if row >= self.n || col >= self.m {
            return Err(Error::IndexRange(format!("({row},{col}) is not a vertex of K_{} x K_{}", self.n, self.m)));
        }
        Ok(GridVertex { row, col })
    }

    pub fn contains_vertex(&self, v: GridVertex) -> bool {
        v.row < self.n && v.col < self.m
    }

    pub fn index_of(&self, v: GridVertex) -> usize {
        v.row * self.m + v.col
    }

    pub fn vertex_at(&self, index: usize) -> GridVertex {
        GridVertex { row: index / self.m, col: index % self.m }
    }

    pub fn vertices(&self) -> impl Iterator<Item = GridVertex> + '_ {
        (0..self.vertex_count()).map(move |i| self.vertex_at(i))
    }

    /// An edge of this grid between `v` and `w`.
    pub fn edge(&self, v: GridVertex, w: GridVertex) -> Result<GridEdge> {
        if !self.contains_vertex(v) || !self.contains_vertex(w) {
            return Err(Error::NotAnEdge(format!("{{{v},{w}}} lies outside K_{} x K_{}", self.n, self.m)));
        }
        GridEdge::new(v, w)
    }

    pub fn contains_edge(&self, e: &GridEdge) -> bool {
        self.contains_vertex(e.a) && self.contains_vertex(e.b)
    }

    /// All edges: horizontal by `(row, col1, col2)`, then vertical by `(col, row1, row2)`.
    pub fn edges(&self) -> Vec<GridEdge> {
        let mut out = Vec::with_capacity(self.edge_count());
        for row in 0..self.n {
            for c1 in 0..self.m {
                for c2 in c1 + 1..self.m {
                    out.push(GridEdge { a: GridVertex { row, col: c1 }, b: GridVertex { row, col: c2 } });
                }
            }
        }
        for col in 0..self.m {
            for r1 in 0..self.n {
                for r2 in r1 + 1..self.n {
                    out.push(GridEdge { a: GridVertex { row: r1, col }, b: GridVertex { row: r2, col } });
                }
            }
        }
        out
    }

    /// Classifies the pair `{v, w}`, rejecting pairs that are not edges.
    pub fn classify_edge(&self, v: GridVertex, w: GridVertex) -> Result<EdgeKind> {
        Ok(self.edge(v, w)?.kind())
    }

    /// `other − base` for the endpoint `other` of `e` opposite `base`.
    pub fn edge_difference(&self, e: &GridEdge, base: GridVertex) -> Result<Step> {
        let other = if e.a == base {
            e.b
        } else if e.b == base {
            e.a
        } else {
            return Err(Error::NotAnEndpoint { vertex: base.to_string(), edge: e.to_string() });
        };
        let d = self.difference(base, other);
        Ok(Step { drow: d.drow, dcol: d.dcol })
    }

    /// `w − v` reduced modulo `(n, m)`.
    pub fn difference(&self, v: GridVertex, w: GridVertex) -> Offset {
        Offset { drow: (w.row + self.n - v.row) % self.n, dcol: (w.col + self.m - v.col) % self.m }
    }

    pub fn step(&self, drow: i64, dcol: i64) -> Result<Step> {
        let drow = drow.rem_euclid(self.n as i64) as usize;
        let dcol = dcol.rem_euclid(self.m as i64) as usize;
        if (drow == 0) == (dcol == 0) {
            return Err(Error::MalformedStep(format!("({drow},{dcol})")));
        }
        Ok(Step { drow, dcol })
    }

    pub fn offset(&self, drow: i64, dcol: i64) -> Offset {
        Offset { drow: drow.rem_euclid(self.n as i64) as usize, dcol: dcol.rem_euclid(self.m as i64) as usize }
    }

    pub fn translate(&self, v: GridVertex, d: Offset) -> GridVertex {
        GridVertex { row: (v.row + d.drow) % self.n, col: (v.col + d.dcol) % self.m }
    }

    pub fn add(&self, a: Offset, b: Offset) -> Offset {
        Offset { drow: (a.drow + b.drow) % self.n, dcol: (a.dcol + b.dcol) % self.m }
    }

    pub fn negate_offset(&self, a: Offset) -> Offset {
        Offset { drow: (self.n - a.drow) % self.n, dcol: (self.m - a.dcol) % self.m }
    }

    pub fn negate_step(&self, s: Step) -> Step {
        let o = self.negate_offset(s.offset());
        Step { drow: o.drow, dcol: o.dcol }
    }

    pub fn to_edge(&self, e: &GridEdge) -> Edge {
        Edge::new(self.index_of(e.a), self.index_of(e.b)).expect("grid edges have distinct endpoints")
    }

    pub fn from_edge(&self, e: Edge) -> Result<GridEdge> {
        self.edge(self.vertex_at(e.lo()), self.vertex_at(e.hi()))
    }
}

/// `K_order` on labels `1..=order`; vertex index `i` carries label `i + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CompleteGraph {
    order: usize,
}

impl CompleteGraph {
    pub fn new(order: usize) -> Result<Self> {
        if order < 2 {
            return Err(Error::Dimension(format!("K_{order} needs at least 2 vertices")));
        }
        Ok(CompleteGraph { order })
    }

    pub fn order(&self) -> usize {
        self.order
    }
}

/// An undirected edge between vertex indices, stored with `lo < hi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    lo: u32,
    hi: u32,
}

impl Edge {
    /// `None` for a loop.
    pub fn new(u: usize, v: usize) -> Option<Edge> {
        match u.cmp(&v) {
            std::cmp::Ordering::Less => Some(Edge { lo: u as u32, hi: v as u32 }),
            std::cmp::Ordering::Greater => Some(Edge { lo: v as u32, hi: u as u32 }),
            std::cmp::Ordering::Equal => None,
        }
    }

    pub fn lo(&self) -> usize {
        self.lo as usize
    }

    pub fn hi(&self) -> usize {
        self.hi as usize
    }

    pub fn has_endpoint(&self, v: usize) -> bool {
        self.lo() == v || self.hi() == v
    }
}

/// The graphs the decomposition engine understands.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Graph {
    Grid(GridGraph),
    Complete(CompleteGraph),
}

impl From<GridGraph> for Graph {
    fn from(g: GridGraph) -> Self {
        Graph::Grid(g)
    }
}

impl From<CompleteGraph> for Graph {
    fn from(g: CompleteGraph) -> Self {
        Graph::Complete(g)
    }
}

impl Graph {
    pub fn vertex_count(&self) -> usize {
        match self {
            Graph::Grid(g) => g.vertex_count(),
            Graph::Complete(k) => k.order,
        }
    }

    pub fn edge_count(&self) -> usize {
        match self {
            Graph::Grid(g) => g.edge_count(),
            Graph::Complete(k) => choose2(k.order),
        }
    }

    pub fn as_grid(&self) -> Option<&GridGraph> {
        match self {
            Graph::Grid(g) => Some(g),
            Graph::Complete(_) => None,
        }
    }

    /// Enumerates the edge set; grids follow [`GridGraph::edges`], complete
    /// graphs go in lexicographic order.
    pub fn edges(&self) -> Vec<Edge> {
        match self {
            Graph::Grid(g) => g.edges().iter().map(|e| g.to_edge(e)).collect(),
            Graph::Complete(k) => {
                let mut out = Vec::with_capacity(choose2(k.order));
                for u in 0..k.order {
                    for v in u + 1..k.order {
                        out.push(Edge { lo: u as u32, hi: v as u32 });
                    }
                }
                out
            }
        }
    }

    pub fn has_edge(&self, e: Edge) -> bool {
        if e.hi() >= self.vertex_count() {
            return false;
        }
        match self {
            Graph::Grid(g) => {
                let (v, w) = (g.vertex_at(e.lo()), g.vertex_at(e.hi()));
                v.row == w.row || v.col == w.col
            }
            Graph::Complete(_) => true,
        }
    }

    pub fn degree(&self, v: usize) -> usize {
        debug_assert!(v < self.vertex_count());
        match self {
            Graph::Grid(g) => (g.n - 1) + (g.m - 1),
            Graph::Complete(k) => k.order - 1,
        }
    }

    pub fn vertex_label(&self, v: usize) -> String {
        match self {
            Graph::Grid(g) => g.vertex_at(v).to_string(),
            Graph::Complete(_) => (v + 1).to_string(),
        }
    }

    pub fn edge_label(&self, e: Edge) -> String {
        format!("{}-{}", self.vertex_label(e.lo()), self.vertex_label(e.hi()))
    }

    pub fn describe(&self) -> String {
        match self {
            Graph::Grid(g) => format!("K_{} x K_{}", g.n, g.m),
            Graph::Complete(k) => format!("K_{}", k.order),
        }
    }
}
