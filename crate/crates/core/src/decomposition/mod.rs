//! Orbit-image decompositions `H^G` and the staircase construction built on them.
//!
//! If `G` acts semiregularly on the edges of a graph and `H` holds exactly one
//! edge of every edge orbit, the images `H^g` for `g ∈ G` are pairwise
//! edge-disjoint, cover every edge, and number exactly `|G|`.
//! [`build_orbit_decomposition`] checks both hypotheses and builds the images;
//! [`verify_decomposition`] then re-checks the outcome from scratch.

mod fixtures;
mod verify;

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};

pub use fixtures::{diagonal_fixture_n4, diagonal_n4_array, k9_fixture, k9_triangles, Fixture};
pub use verify::{check_partition, verify_decomposition, VerificationReport, Witness};

use crate::error::{Error, Precondition, Result};
use crate::grid::{Edge, Graph, GridGraph};
use crate::group::{edge_orbits, find_fixed_edge, EdgeOrbit, FiniteGroup, Permutation};
use crate::staircase::{build_staircase_path, Walk};

/// A nonempty edge set, optionally remembering the vertex sequence of the
/// walk it came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgraph {
    edges: Vec<Edge>,
    trail: Option<Vec<usize>>,
}

impl Subgraph {
    /// Sorts and deduplicates `edges`.
    pub fn from_edges(edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        let set: BTreeSet<Edge> = edges.into_iter().collect();
        if set.is_empty() {
            return Err(Error::EmptySubgraph);
        }
        Ok(Subgraph { edges: set.into_iter().collect(), trail: None })
    }

    /// Edge set of a walk given by vertex indices; consecutive vertices must be adjacent.
    pub fn from_trail(graph: &Graph, trail: Vec<usize>) -> Result<Self> {
        let mut edges = Vec::with_capacity(trail.len().saturating_sub(1));
        for w in trail.windows(2) {
            match Edge::new(w[0], w[1]) {
                Some(e) if graph.has_edge(e) => edges.push(e),
                _ => {
                    return Err(Error::NotAnEdge(format!("{}-{}", graph.vertex_label(w[0]), graph.vertex_label(w[1]))))
                }
            }
        }
        let mut sub = Self::from_edges(edges)?;
        sub.trail = Some(trail);
        Ok(sub)
    }

    pub fn from_walk(walk: &Walk) -> Result<Self> {
        let grid = walk.grid();
        let trail = walk.vertices().iter().map(|&v| grid.index_of(v)).collect();
        Self::from_trail(&grid.into(), trail)
    }

    /// Sorted, distinct edges.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn trail(&self) -> Option<&[usize]> {
        self.trail.as_deref()
    }

    pub fn vertices(&self) -> Vec<usize> {
        let set: BTreeSet<usize> = self.edges.iter().flat_map(|e| [e.lo(), e.hi()]).collect();
        set.into_iter().collect()
    }

    pub fn contains(&self, e: Edge) -> bool {
        self.edges.binary_search(&e).is_ok()
    }

    pub fn degrees(&self) -> BTreeMap<usize, usize> {
        let mut deg = BTreeMap::new();
        for e in &self.edges {
            *deg.entry(e.lo()).or_insert(0) += 1;
            *deg.entry(e.hi()).or_insert(0) += 1;
        }
        deg
    }

    /// Image under a vertex permutation; the trail is carried along.
    pub fn image(&self, g: &Permutation) -> Subgraph {
        let mut edges: Vec<Edge> = self.edges.iter().map(|&e| g.apply_edge(e)).collect();
        edges.sort_unstable();
        let trail = self.trail.as_ref().map(|t| t.iter().map(|&v| g.apply(v)).collect());
        Subgraph { edges, trail }
    }

    /// Connected, maximum degree 2 and exactly two vertices of degree 1.
    pub fn is_path_shaped(&self) -> bool {
        let deg = self.degrees();
        if deg.values().any(|&d| d > 2) || deg.values().filter(|&&d| d == 1).count() != 2 {
            return false;
        }
        // a path plus disjoint cycles passes the degree test, so connectivity is needed
        self.is_connected()
    }

    fn is_connected(&self) -> bool {
        let mut adj: HashMap<usize, Vec<usize>> = HashMap::new();
        for e in &self.edges {
            adj.entry(e.lo()).or_default().push(e.hi());
            adj.entry(e.hi()).or_default().push(e.lo());
        }
        let Some(&start) = adj.keys().next() else { return false };
        let mut seen = HashSet::from([start]);
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for &w in &adj[&v] {
                if seen.insert(w) {
                    stack.push(w);
                }
            }
        }
        seen.len() == adj.len()
    }

    /// Vertex sequence of a path-shaped subgraph, from its smaller endpoint.
    pub fn path_order(&self) -> Option<Vec<usize>> {
        if !self.is_path_shaped() {
            return None;
        }
        let mut adj: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for e in &self.edges {
            adj.entry(e.lo()).or_default().push(e.hi());
            adj.entry(e.hi()).or_default().push(e.lo());
        }
        let start = *adj.iter().find(|(_, n)| n.len() == 1)?.0;
        let mut order = vec![start];
        let mut prev = usize::MAX;
        let mut cur = start;
        while let Some(&next) = adj[&cur].iter().find(|&&w| w != prev) {
            order.push(next);
            prev = cur;
            cur = next;
        }
        Some(order)
    }
}

/// Just what the necessary-condition check needs to know about `H`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgraphTemplate {
    pub vertex_count: usize,
    pub edge_count: usize,
    pub degrees: Vec<usize>,
}

impl SubgraphTemplate {
    pub fn of(h: &Subgraph) -> Self {
        let degrees: Vec<usize> = h.degrees().into_values().collect();
        SubgraphTemplate { vertex_count: degrees.len(), edge_count: h.edge_count(), degrees }
    }

    /// A path with `len` edges.
    pub fn path(len: usize) -> Self {
        let degrees = match len {
            0 => vec![0],
            _ => {
                let mut d = vec![2; len + 1];
                d[0] = 1;
                d[len] = 1;
                d
            }
        };
        SubgraphTemplate { vertex_count: len + 1, edge_count: len, degrees }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NecessaryConditions {
    /// `|V(H)| ≤ |V(Γ)|`, or `Γ` has no edges.
    pub vertices_fit: bool,
    /// `|E(H)|` divides `|E(Γ)|`.
    pub edges_divide: bool,
    /// The gcd of the degrees of `H` divides every degree of `Γ`.
    pub degrees_divide: bool,
}

impl NecessaryConditions {
    pub fn all(&self) -> bool {
        self.vertices_fit && self.edges_divide && self.degrees_divide
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// The three counting conditions any `H`-decomposition of `graph` must satisfy.
pub fn necessary_conditions(graph: &Graph, h: &SubgraphTemplate) -> NecessaryConditions {
    let edges = graph.edge_count();
    let vertices_fit = h.vertex_count <= graph.vertex_count() || edges == 0;
    let edges_divide = h.edge_count > 0 && edges.is_multiple_of(h.edge_count);
    let d = h.degrees.iter().fold(0, |acc, &x| gcd(acc, x));
    let degrees_divide = d > 0 && (0..graph.vertex_count()).all(|v| graph.degree(v).is_multiple_of(d));
    NecessaryConditions { vertices_fit, edges_divide, degrees_divide }
}

/// Per-orbit edge counts of `H`, in the order of the given orbits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransversalCheck {
    pub counts: Vec<usize>,
    /// Edges of `H` that belong to no listed orbit.
    pub unmatched: Vec<Edge>,
}

impl TransversalCheck {
    pub fn is_transversal(&self) -> bool {
        self.unmatched.is_empty() && self.counts.iter().all(|&c| c == 1)
    }

    /// First orbit whose count is not one.
    pub fn first_violation(&self) -> Option<(usize, usize)> {
        self.counts.iter().enumerate().find(|(_, &c)| c != 1).map(|(i, &c)| (i, c))
    }
}

/// Counts how many edges of `h` fall in each orbit.
pub fn orbit_transversal_check(h: &Subgraph, orbits: &[EdgeOrbit]) -> TransversalCheck {
    let mut owner: HashMap<Edge, usize> = HashMap::new();
    for (i, o) in orbits.iter().enumerate() {
        for &e in &o.edges {
            owner.insert(e, i);
        }
    }
    let mut counts = vec![0; orbits.len()];
    let mut unmatched = Vec::new();
    for &e in h.edges() {
        match owner.get(&e) {
            Some(&i) => counts[i] += 1,
            None => unmatched.push(e),
        }
    }
    TransversalCheck { counts, unmatched }
}

/// Blocks of a decomposition together with where they came from.
#[derive(Debug, Clone)]
pub struct Decomposition {
    pub graph: Graph,
    pub group: FiniteGroup,
    pub base: Subgraph,
    pub blocks: Vec<Subgraph>,
}

impl Decomposition {
    pub fn edge_total(&self) -> usize {
        self.blocks.iter().map(Subgraph::edge_count).sum()
    }
}

/// `H^G = {H^g : g ∈ G}` in group-element order, after checking that `G` is
/// semiregular on edges and `H` is an orbit transversal.
pub fn build_orbit_decomposition(graph: &Graph, group: &FiniteGroup, h: &Subgraph) -> Result<Decomposition> {
    if let Some(&e) = h.edges().iter().find(|&&e| !graph.has_edge(e)) {
        return Err(Error::PreconditionFailed(Precondition::ForeignEdge { edge: graph.edge_label(e) }));
    }
    if let Some((element, e)) = find_fixed_edge(graph, group) {
        return Err(Error::PreconditionFailed(Precondition::NotSemiregular { element, edge: graph.edge_label(e) }));
    }
    let orbits = edge_orbits(graph, group);
    let check = orbit_transversal_check(h, &orbits);
    if let Some((i, count)) = check.first_violation() {
        return Err(Error::PreconditionFailed(Precondition::NotTransversal {
            orbit: orbits[i].id.label(graph),
            count,
        }));
    }
    let mut seen: HashSet<Vec<Edge>> = HashSet::new();
    let mut blocks = Vec::with_capacity(group.order());
    for g in group.elements() {
        let img = h.image(g);
        if seen.insert(img.edges.clone()) {
            blocks.push(img);
        }
    }
    Ok(Decomposition { graph: *graph, group: group.clone(), base: h.clone(), blocks })
}

/// The staircase path's images under the row shift on `K_n □ K_n`, with the
/// verifier's report. `force` admits odd composite `n`; the construction is
/// still certified and fails with [`Error::ConstructionInvalid`] if it breaks.
pub fn staircase_decomposition(n: usize, force: bool) -> Result<(Decomposition, VerificationReport)> {
    let walk = build_staircase_path(n, force)?;
    let grid = GridGraph::square(n)?;
    let graph: Graph = grid.into();
    let group = FiniteGroup::row_shift(grid);
    let base = Subgraph::from_walk(&walk)?;
    let dec = build_orbit_decomposition(&graph, &group, &base)?;
    let report = verify_decomposition(&dec);
    Ok((dec, report))
}

/// Gallai bound: every block is a path and there are at most `(|V|+1)/2` of them.
pub fn gallai_check(dec: &Decomposition) -> bool {
    dec.blocks.iter().all(Subgraph::is_path_shaped) && 2 * dec.blocks.len() <= dec.graph.vertex_count() + 1
}

/// Cuts a path into consecutive segments of `b` edges each.
pub fn haggkvist_split(graph: &Graph, path: &Subgraph, b: usize) -> Result<Vec<Subgraph>> {
    let order = match path.trail() {
        Some(t) if t.len() == path.edge_count() + 1 => t.to_vec(),
        _ => path.path_order().ok_or_else(|| Error::NotAPath(format!("{} edges", path.edge_count())))?,
    };
    let len = order.len() - 1;
    if b == 0 || len % b != 0 {
        return Err(Error::Divisibility { len, segment: b });
    }
    (0..len / b).map(|s| Subgraph::from_trail(graph, order[s * b..=(s + 1) * b].to_vec())).collect()
}

/// Splits every block of `dec` into `b`-edge paths.
pub fn refine_decomposition(dec: &Decomposition, b: usize) -> Result<Vec<Subgraph>> {
    let mut out = Vec::new();
    for block in &dec.blocks {
        out.extend(haggkvist_split(&dec.graph, block, b)?);
    }
    Ok(out)
}
