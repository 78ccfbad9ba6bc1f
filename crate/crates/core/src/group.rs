//! Vertex permutations, finite groups generated by them, and the induced
//! action on edges.

use std::collections::{HashMap, HashSet};

use crate::error::{Error, Result};
use crate::grid::{Edge, EdgeKind, Graph, GridEdge, GridGraph};

/// Closure cap used when callers have no better bound.
pub const DEFAULT_GROUP_CAP: usize = 100_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PermKind {
    /// `(a, b) ↦ (a + 1, b)`.
    RowShift,
    /// `(a, b) ↦ (a + 1, b + 1)` on a square grid.
    DiagonalShift,
    Explicit,
}

impl PermKind {
    pub fn name(&self) -> &'static str {
        match self {
            PermKind::RowShift => "row_shift",
            PermKind::DiagonalShift => "diagonal_shift",
            PermKind::Explicit => "explicit",
        }
    }
}

/// A graph automorphism given by its full image table over vertex indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    kind: PermKind,
    graph: Graph,
    map: Vec<u32>,
}

impl Permutation {
    pub fn identity(graph: Graph) -> Self {
        let map = (0..graph.vertex_count() as u32).collect();
        Permutation { kind: PermKind::Explicit, graph, map }
    }

    /// The cyclic row shift `c` on `K_n □ K_m`.
    pub fn row_shift(grid: GridGraph) -> Self {
        let map =
            grid.vertices().map(|v| grid.index_of(grid.vertex(v.row() as i64 + 1, v.col() as i64)) as u32).collect();
        Permutation { kind: PermKind::RowShift, graph: grid.into(), map }
    }

    /// The diagonal shift `c'` on `K_n □ K_n`.
    pub fn diagonal_shift(grid: GridGraph) -> Result<Self> {
        if !grid.is_square() {
            return Err(Error::Dimension(format!(
                "diagonal shift needs a square grid, got K_{} x K_{}",
                grid.n(),
                grid.m()
            )));
        }
        let map = grid
            .vertices()
            .map(|v| grid.index_of(grid.vertex(v.row() as i64 + 1, v.col() as i64 + 1)) as u32)
            .collect();
        Ok(Permutation { kind: PermKind::DiagonalShift, graph: grid.into(), map })
    }

    /// Validates that `map` (image of each vertex index) is a bijection that
    /// maps edges to edges.
    pub fn explicit(graph: Graph, map: Vec<usize>) -> Result<Self> {
        let count = graph.vertex_count();
        if map.len() != count {
            return Err(Error::NotABijection(format!("map has {} entries for {count} vertices", map.len())));
        }
        let mut seen = vec![false; count];
        for (v, &img) in map.iter().enumerate() {
            if img >= count {
                return Err(Error::NotABijection(format!("image of {} is out of range", graph.vertex_label(v))));
            }
            if std::mem::replace(&mut seen[img], true) {
                return Err(Error::NotABijection(format!("{} has two preimages", graph.vertex_label(img))));
            }
        }
        let perm = Permutation { kind: PermKind::Explicit, graph, map: map.into_iter().map(|v| v as u32).collect() };
        if let Some(e) = graph.edges().into_iter().find(|&e| !graph.has_edge(perm.apply_edge(e))) {
            return Err(Error::NotAnAutomorphism(format!(
                "{} maps to the non-edge {}",
                graph.edge_label(e),
                graph.edge_label(perm.apply_edge(e))
            )));
        }
        Ok(perm)
    }

    /// Builds from disjoint cycles over vertex indices; unlisted vertices are fixed.
    pub fn from_cycles(graph: Graph, cycles: &[&[usize]]) -> Result<Self> {
        let mut map: Vec<usize> = (0..graph.vertex_count()).collect();
        for cycle in cycles {
            for (i, &v) in cycle.iter().enumerate() {
                let next = cycle[(i + 1) % cycle.len()];
                if v >= map.len() || next >= map.len() {
                    return Err(Error::NotABijection(format!("cycle entry {v} out of range")));
                }
                map[v] = next;
            }
        }
        Self::explicit(graph, map)
    }

    pub fn kind(&self) -> PermKind {
        self.kind
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn apply(&self, v: usize) -> usize {
        self.map[v] as usize
    }

    pub fn images(&self) -> impl Iterator<Item = usize> + '_ {
        self.map.iter().map(|&v| v as usize)
    }

    /// Image of an edge, re-canonicalized.
    pub fn apply_edge(&self, e: Edge) -> Edge {
        Edge::new(self.apply(e.lo()), self.apply(e.hi())).expect("bijections keep endpoints distinct")
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &Permutation) -> Permutation {
        let map = self.map.iter().map(|&v| next.map[v as usize]).collect();
        Permutation { kind: PermKind::Explicit, graph: self.graph, map }
    }

    pub fn inverse(&self) -> Permutation {
        let mut map = vec![0u32; self.map.len()];
        for (v, &img) in self.map.iter().enumerate() {
            map[img as usize] = v as u32;
        }
        Permutation { kind: PermKind::Explicit, graph: self.graph, map }
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(v, &img)| v as u32 == img)
    }

    fn same_action(&self, other: &Permutation) -> bool {
        self.map == other.map
    }
}

/// A finite group of automorphisms with every element materialized.
#[derive(Debug, Clone)]
pub struct FiniteGroup {
    graph: Graph,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
}

/// Breadth-first closure of `generators`: identity first, then elements in
/// order of discovery.
pub fn generate_group(graph: Graph, generators: Vec<Permutation>, cap: usize) -> Result<FiniteGroup> {
    if let Some(g) = generators.iter().find(|g| g.graph != graph) {
        return Err(Error::Dimension(format!(
            "generator acts on {} but the group acts on {}",
            g.graph.describe(),
            graph.describe()
        )));
    }
    let identity = Permutation::identity(graph);
    let mut index: HashMap<Vec<u32>, usize> = HashMap::new();
    index.insert(identity.map.clone(), 0);
    let mut elements = vec![identity];
    let mut cursor = 0;
    while cursor < elements.len() {
        for gen in &generators {
            let next = elements[cursor].then(gen);
            if index.contains_key(&next.map) {
                continue;
            }
            if elements.len() >= cap {
                return Err(Error::GroupTooLarge { cap });
            }
            index.insert(next.map.clone(), elements.len());
            elements.push(next);
        }
        cursor += 1;
    }
    // keep the generators' own tags on the matching elements
    for gen in &generators {
        if let Some(&i) = index.get(&gen.map) {
            if elements[i].kind == PermKind::Explicit {
                elements[i].kind = gen.kind;
            }
        }
    }
    Ok(FiniteGroup { graph, generators, elements })
}

impl FiniteGroup {
    pub fn trivial(graph: Graph) -> Self {
        FiniteGroup { graph, generators: Vec::new(), elements: vec![Permutation::identity(graph)] }
    }

    /// `G = ⟨c⟩` on `K_n □ K_m`.
    pub fn row_shift(grid: GridGraph) -> Self {
        generate_group(grid.into(), vec![Permutation::row_shift(grid)], DEFAULT_GROUP_CAP)
            .expect("row shift has order n")
    }

    /// `L = ⟨c'⟩` on `K_n □ K_n`.
    pub fn diagonal_shift(grid: GridGraph) -> Result<Self> {
        generate_group(grid.into(), vec![Permutation::diagonal_shift(grid)?], DEFAULT_GROUP_CAP)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// The one-tag description used in serialized output.
    pub fn kind_name(&self) -> &'static str {
        match self.generators.as_slice() {
            [g] if g.kind != PermKind::Explicit => g.kind.name(),
            _ => PermKind::Explicit.name(),
        }
    }

    /// True when this is exactly `⟨c⟩` on a grid.
    pub fn is_row_shift(&self) -> bool {
        matches!(self.generators.as_slice(), [g] if g.kind == PermKind::RowShift)
    }

    pub fn position(&self, p: &Permutation) -> Option<usize> {
        self.elements.iter().position(|e| e.same_action(p))
    }

    /// Closure check: products and inverses of elements stay in the group.
    pub fn is_closed(&self) -> bool {
        let set: HashSet<&[u32]> = self.elements.iter().map(|e| e.map.as_slice()).collect();
        self.elements.iter().all(|a| {
            set.contains(a.inverse().map.as_slice())
                && self.elements.iter().all(|b| set.contains(a.then(b).map.as_slice()))
        })
    }
}

/// Canonical name of an edge orbit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OrbitId {
    /// Row-shift orbit of horizontal edges between columns `b1 < b2`.
    Horizontal { b1: usize, b2: usize },
    /// Row-shift orbit of vertical edges in column `b` with row gap `±t`, `t ≤ n/2`.
    Vertical { t: usize, b: usize },
    /// Any other group: the smallest member edge.
    Opaque { min: Edge },
}

impl OrbitId {
    pub fn label(&self, graph: &Graph) -> String {
        match self {
            OrbitId::Horizontal { b1, b2 } => format!("H{{{b1},{b2}}}"),
            OrbitId::Vertical { t, b } => format!("V{{t={t},b={b}}}"),
            OrbitId::Opaque { min } => format!("[{}]", graph.edge_label(*min)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeOrbit {
    pub id: OrbitId,
    /// Sorted member edges.
    pub edges: Vec<Edge>,
}

impl EdgeOrbit {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

/// Row-shift orbit id of a grid edge.
pub fn row_shift_orbit_id(grid: &GridGraph, e: &GridEdge) -> OrbitId {
    let (v, w) = e.endpoints();
    match e.kind() {
        EdgeKind::Horizontal => OrbitId::Horizontal { b1: v.col(), b2: w.col() },
        EdgeKind::Vertical => {
            let t = grid.difference(v, w).drow;
            OrbitId::Vertical { t: t.min(grid.n() - t), b: v.col() }
        }
    }
}

/// Partitions the edge set into orbits of `group`, sorted by id.
pub fn edge_orbits(graph: &Graph, group: &FiniteGroup) -> Vec<EdgeOrbit> {
    let grid = match graph {
        Graph::Grid(g) if group.is_row_shift() => Some(*g),
        _ => None,
    };
    let mut seen: HashSet<Edge> = HashSet::new();
    let mut orbits = Vec::new();
    for e in graph.edges() {
        if seen.contains(&e) {
            continue;
        }
        let mut members: Vec<Edge> = group.elements().iter().map(|g| g.apply_edge(e)).collect();
        members.sort_unstable();
        members.dedup();
        seen.extend(members.iter().copied());
        let id = match grid {
            Some(grid) => row_shift_orbit_id(&grid, &grid.from_edge(e).expect("enumerated edge")),
            None => OrbitId::Opaque { min: members[0] },
        };
        orbits.push(EdgeOrbit { id, edges: members });
    }
    orbits.sort_by_key(|a| a.id);
    orbits
}

/// First `(element index, edge)` with a non-identity element fixing the edge setwise.
pub fn find_fixed_edge(graph: &Graph, group: &FiniteGroup) -> Option<(usize, Edge)> {
    let edges = graph.edges();
    group
        .elements()
        .iter()
        .enumerate()
        .filter(|(_, g)| !g.is_identity())
        .find_map(|(i, g)| edges.iter().find(|&&e| g.apply_edge(e) == e).map(|&e| (i, e)))
}

/// No non-identity element maps any edge to itself.
pub fn is_semiregular_on_edges(graph: &Graph, group: &FiniteGroup) -> bool {
    find_fixed_edge(graph, group).is_none()
}

/// Same-orbit test under `⟨c⟩` from the difference criterion alone.
pub fn same_orbit_row_shift(grid: &GridGraph, e: &GridEdge, f: &GridEdge) -> Result<bool> {
    for x in [e, f] {
        if !grid.contains_edge(x) {
            return Err(Error::NotAnEdge(format!("{x} is not an edge of K_{} x K_{}", grid.n(), grid.m())));
        }
    }
    let (v, w) = e.endpoints();
    let (v2, w2) = f.endpoints();
    let d = grid.difference(v, w);
    let cond_a = v.col() == v2.col() && d == grid.difference(v2, w2);
    let cond_b = v.col() == w2.col() && d == grid.difference(w2, v2);
    Ok(cond_a || cond_b)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OrbitCensus {
    pub horizontal: usize,
    pub vertical: usize,
    pub orbit_size: usize,
}

impl OrbitCensus {
    pub fn total(&self) -> usize {
        self.horizontal + self.vertical
    }
}

/// Orbit counts of `⟨c⟩` on `K_n □ K_m` by formula; `n` must be odd.
pub fn orbit_census(n: usize, m: usize) -> Result<OrbitCensus> {
    if n < 3 || n.is_multiple_of(2) {
        return Err(Error::Dimension(format!("orbit census needs odd n >= 3, got {n}")));
    }
    if m < 2 {
        return Err(Error::Dimension(format!("orbit census needs m >= 2, got {m}")));
    }
    Ok(OrbitCensus { horizontal: m * (m - 1) / 2, vertical: m * (n - 1) / 2, orbit_size: n })
}
