//! Exhaustive re-verification of a decomposition.
//!
//! Nothing here trusts how the blocks were produced: the partition is checked
//! edge by edge, block shapes are compared against the base, and invariance,
//! transitivity and the base stabilizer are recomputed from the group.

use std::collections::{HashMap, HashSet, VecDeque};

use serde::Serialize;

use super::{Decomposition, Subgraph};
use crate::grid::{Edge, Graph};
use crate::group::find_fixed_edge;

/// Witnesses of each kind kept per report; the flags are computed in full.
const WITNESS_CAP: usize = 16;

/// Largest base handled by the backtracking isomorphism search.
const ISOMORPHISM_VERTEX_CAP: usize = 16;

/// A concrete reason a check failed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// A block uses a pair that is not an edge of the graph.
    ForeignEdge {
        block: usize,
        edge: String,
    },
    DuplicateEdge {
        edge: String,
        blocks: [usize; 2],
    },
    MissingEdge {
        edge: String,
    },
    NotIsomorphic {
        block: usize,
        reason: String,
    },
    /// The image of `block` under generator `generator` is not a block.
    UnmappedBlock {
        block: usize,
        generator: usize,
    },
    UnreachableBlock {
        block: usize,
    },
    BaseNotABlock,
    /// A non-identity element maps the base block onto itself.
    StabilizingElement {
        element: usize,
    },
    /// A non-identity element maps `edge` onto itself.
    FixedEdge {
        element: usize,
        edge: String,
    },
}

impl Witness {
    fn flag(&self) -> &'static str {
        match self {
            Witness::ForeignEdge { .. } | Witness::DuplicateEdge { .. } | Witness::MissingEdge { .. } => "is_partition",
            Witness::NotIsomorphic { .. } => "blocks_isomorphic_to_base",
            Witness::UnmappedBlock { .. } => "group_invariant",
            Witness::UnreachableBlock { .. } | Witness::BaseNotABlock => "group_transitive",
            Witness::StabilizingElement { .. } => "stabilizer_trivial",
            Witness::FixedEdge { .. } => "semiregular",
        }
    }
}

impl std::fmt::Display for Witness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Witness::ForeignEdge { block, edge } => write!(f, "block {block} uses non-edge {edge}"),
            Witness::DuplicateEdge { edge, blocks } => {
                write!(f, "edge {edge} lies in blocks {} and {}", blocks[0], blocks[1])
            }
            Witness::MissingEdge { edge } => write!(f, "edge {edge} lies in no block"),
            Witness::NotIsomorphic { block, reason } => {
                write!(f, "block {block} is not isomorphic to the base: {reason}")
            }
            Witness::UnmappedBlock { block, generator } => {
                write!(f, "generator #{generator} maps block {block} outside the decomposition")
            }
            Witness::UnreachableBlock { block } => write!(f, "block {block} is not an image of the base"),
            Witness::BaseNotABlock => write!(f, "the base subgraph is not one of the blocks"),
            Witness::StabilizingElement { element } => write!(f, "element #{element} fixes the base block"),
            Witness::FixedEdge { element, edge } => write!(f, "element #{element} fixes edge {edge}"),
        }
    }
}

/// Outcome of [`verify_decomposition`]. A flag is true only when its exhaustive
/// check passed; each false flag has at least one witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub is_partition: bool,
    pub blocks_isomorphic_to_base: bool,
    pub group_invariant: bool,
    pub group_transitive: bool,
    pub stabilizer_trivial: bool,
    pub semiregular: bool,
    pub witnesses: Vec<Witness>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.flags().iter().all(|(_, ok)| *ok)
    }

    pub fn flags(&self) -> [(&'static str, bool); 6] {
        [
            ("is_partition", self.is_partition),
            ("blocks_isomorphic_to_base", self.blocks_isomorphic_to_base),
            ("group_invariant", self.group_invariant),
            ("group_transitive", self.group_transitive),
            ("stabilizer_trivial", self.stabilizer_trivial),
            ("semiregular", self.semiregular),
        ]
    }

    pub fn failed_flags(&self) -> Vec<&'static str> {
        self.flags().iter().filter(|(_, ok)| !ok).map(|(name, _)| *name).collect()
    }

    pub fn witnesses_for(&self, flag: &str) -> impl Iterator<Item = &Witness> {
        let flag = flag.to_owned();
        self.witnesses.iter().filter(move |w| w.flag() == flag)
    }
}

fn capped(mut found: Vec<Witness>) -> Vec<Witness> {
    found.truncate(WITNESS_CAP);
    found
}

/// Partition check alone: witnesses for foreign, duplicated and missing edges.
/// Empty iff the blocks partition the edge set.
pub fn check_partition(graph: &Graph, blocks: &[Subgraph]) -> Vec<Witness> {
    let mut owner: HashMap<Edge, usize> = HashMap::with_capacity(graph.edge_count());
    let (mut foreign, mut dup) = (Vec::new(), Vec::new());
    for (i, block) in blocks.iter().enumerate() {
        for &e in block.edges() {
            if !graph.has_edge(e) {
                foreign.push(Witness::ForeignEdge { block: i, edge: graph.edge_label(e) });
            } else if let Some(&j) = owner.get(&e) {
                dup.push(Witness::DuplicateEdge { edge: graph.edge_label(e), blocks: [j, i] });
            } else {
                owner.insert(e, i);
            }
        }
    }
    let missing: Vec<Witness> = graph
        .edges()
        .into_iter()
        .filter(|e| !owner.contains_key(e))
        .map(|e| Witness::MissingEdge { edge: graph.edge_label(e) })
        .collect();
    let mut out = capped(foreign);
    out.extend(capped(dup));
    out.extend(capped(missing));
    out
}

type Adjacency = HashMap<usize, HashSet<usize>>;

fn adjacency(h: &Subgraph) -> Adjacency {
    let mut adj: Adjacency = HashMap::new();
    for e in h.edges() {
        adj.entry(e.lo()).or_default().insert(e.hi());
        adj.entry(e.hi()).or_default().insert(e.lo());
    }
    adj
}

/// Backtracking search for an isomorphism between two edge-induced subgraphs.
fn isomorphic(a: &Subgraph, b: &Subgraph) -> bool {
    if a.edge_count() != b.edge_count() {
        return false;
    }
    let (adj_a, adj_b) = (adjacency(a), adjacency(b));
    if adj_a.len() != adj_b.len() {
        return false;
    }
    let mut deg_a: Vec<usize> = adj_a.values().map(HashSet::len).collect();
    let mut deg_b: Vec<usize> = adj_b.values().map(HashSet::len).collect();
    deg_a.sort_unstable();
    deg_b.sort_unstable();
    if deg_a != deg_b {
        return false;
    }
    // map high-degree vertices first
    let mut order: Vec<usize> = adj_a.keys().copied().collect();
    order.sort_by_key(|v| (std::cmp::Reverse(adj_a[v].len()), *v));
    let targets: Vec<usize> = adj_b.keys().copied().collect();

    fn extend(
        depth: usize,
        order: &[usize],
        targets: &[usize],
        adj_a: &Adjacency,
        adj_b: &Adjacency,
        mapping: &mut HashMap<usize, usize>,
        used: &mut HashSet<usize>,
    ) -> bool {
        let Some(&v) = order.get(depth) else { return true };
        for &t in targets {
            if used.contains(&t) || adj_a[&v].len() != adj_b[&t].len() {
                continue;
            }
            let consistent = order[..depth].iter().all(|u| {
                let mu = mapping[u];
                adj_a[&v].contains(u) == adj_b[&t].contains(&mu)
            });
            if !consistent {
                continue;
            }
            mapping.insert(v, t);
            used.insert(t);
            if extend(depth + 1, order, targets, adj_a, adj_b, mapping, used) {
                return true;
            }
            mapping.remove(&v);
            used.remove(&t);
        }
        false
    }

    extend(0, &order, &targets, &adj_a, &adj_b, &mut HashMap::new(), &mut HashSet::new())
}

fn shape_mismatch(dec: &Decomposition, base_is_path: bool, block: &Subgraph) -> Option<String> {
    let base = &dec.base;
    if block.edge_count() != base.edge_count() {
        return Some(format!("{} edges, base has {}", block.edge_count(), base.edge_count()));
    }
    if base_is_path {
        return (!block.is_path_shaped()).then(|| "not a path".to_owned());
    }
    if base.vertices().len() <= ISOMORPHISM_VERTEX_CAP {
        return (!isomorphic(base, block)).then(|| "no vertex bijection preserves adjacency".to_owned());
    }
    // too large to search; accept only an explicit group image of the base
    let key = block.edges();
    let found = dec.group.elements().iter().any(|g| base.image(g).edges() == key);
    (!found).then(|| {
        format!("base exceeds the {ISOMORPHISM_VERTEX_CAP}-vertex search cap and no group element maps it here")
    })
}

/// Recomputes every property of `dec` from its graph, group and blocks.
pub fn verify_decomposition(dec: &Decomposition) -> VerificationReport {
    let graph = &dec.graph;
    let mut witnesses = check_partition(graph, &dec.blocks);
    let is_partition = witnesses.is_empty();

    let base_is_path = dec.base.is_path_shaped();
    let shape: Vec<Witness> = dec
        .blocks
        .iter()
        .enumerate()
        .filter_map(|(i, b)| {
            shape_mismatch(dec, base_is_path, b).map(|reason| Witness::NotIsomorphic { block: i, reason })
        })
        .collect();
    let blocks_isomorphic_to_base = shape.is_empty();
    witnesses.extend(capped(shape));

    let index: HashMap<&[Edge], usize> = dec.blocks.iter().enumerate().map(|(i, b)| (b.edges(), i)).collect();
    let mut unmapped = Vec::new();
    let mut successors: Vec<Vec<usize>> = vec![Vec::new(); dec.blocks.len()];
    for (i, block) in dec.blocks.iter().enumerate() {
        for (gi, gen) in dec.group.generators().iter().enumerate() {
            match index.get(block.image(gen).edges()) {
                Some(&j) => successors[i].push(j),
                None => unmapped.push(Witness::UnmappedBlock { block: i, generator: gi }),
            }
        }
    }
    let group_invariant = unmapped.is_empty();
    witnesses.extend(capped(unmapped));

    let transitivity: Vec<Witness> = match index.get(dec.base.edges()) {
        None => vec![Witness::BaseNotABlock],
        Some(&start) => {
            let mut reached = vec![false; dec.blocks.len()];
            reached[start] = true;
            let mut queue = VecDeque::from([start]);
            while let Some(i) = queue.pop_front() {
                for &j in &successors[i] {
                    if !std::mem::replace(&mut reached[j], true) {
                        queue.push_back(j);
                    }
                }
            }
            (0..dec.blocks.len()).filter(|&i| !reached[i]).map(|block| Witness::UnreachableBlock { block }).collect()
        }
    };
    let group_transitive = transitivity.is_empty();
    witnesses.extend(capped(transitivity));

    let stabilizers: Vec<Witness> = dec
        .group
        .elements()
        .iter()
        .enumerate()
        .filter(|(_, g)| !g.is_identity() && dec.base.image(g).edges() == dec.base.edges())
        .map(|(element, _)| Witness::StabilizingElement { element })
        .collect();
    let stabilizer_trivial = stabilizers.is_empty();
    witnesses.extend(capped(stabilizers));

    let fixed = find_fixed_edge(graph, &dec.group);
    let semiregular = fixed.is_none();
    if let Some((element, e)) = fixed {
        witnesses.push(Witness::FixedEdge { element, edge: graph.edge_label(e) });
    }

    VerificationReport {
        is_partition,
        blocks_isomorphic_to_base,
        group_invariant,
        group_transitive,
        stabilizer_trivial,
        semiregular,
        witnesses,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::{k9_fixture, staircase_decomposition};
    use crate::grid::CompleteGraph;

    #[test]
    fn moved_edge_breaks_partition() {
        let (mut dec, report) = staircase_decomposition(5, false).unwrap();
        assert!(report.all_passed());
        // replace an edge of block 0 by one that block 1 already owns
        let stolen = dec.blocks[1].edges()[0];
        let mut edges = dec.blocks[0].edges().to_vec();
        let lost = edges.remove(3);
        edges.push(stolen);
        dec.blocks[0] = Subgraph::from_edges(edges).unwrap();

        let report = verify_decomposition(&dec);
        assert!(!report.is_partition);
        let ws: Vec<_> = report.witnesses_for("is_partition").cloned().collect();
        assert!(ws.contains(&Witness::MissingEdge { edge: dec.graph.edge_label(lost) }));
        assert!(ws.contains(&Witness::DuplicateEdge { edge: dec.graph.edge_label(stolen), blocks: [0, 1] }));
        for flag in report.failed_flags() {
            assert!(report.witnesses_for(flag).next().is_some(), "{flag} has no witness");
        }
    }

    #[test]
    fn edge_moved_between_blocks_keeps_partition_but_breaks_shape() {
        let (mut dec, _) = staircase_decomposition(5, false).unwrap();
        let moved = dec.blocks[0].edges()[0];
        let from: Vec<Edge> = dec.blocks[0].edges()[1..].to_vec();
        let mut to = dec.blocks[1].edges().to_vec();
        to.push(moved);
        dec.blocks[0] = Subgraph::from_edges(from).unwrap();
        dec.blocks[1] = Subgraph::from_edges(to).unwrap();
        let report = verify_decomposition(&dec);
        assert!(report.is_partition);
        assert!(!report.blocks_isomorphic_to_base);
        assert!(!report.all_passed());
    }

    #[test]
    fn dropped_block() {
        let (mut dec, _) = staircase_decomposition(3, false).unwrap();
        dec.blocks.pop();
        let report = verify_decomposition(&dec);
        assert!(!report.is_partition);
        assert!(!report.group_invariant);
        assert_eq!(report.witnesses_for("is_partition").count(), 6);
    }

    #[test]
    fn foreign_edge() {
        let (mut dec, _) = staircase_decomposition(3, false).unwrap();
        let mut edges = dec.blocks[2].edges().to_vec();
        edges.push(Edge::new(0, 4).unwrap());
        dec.blocks[2] = Subgraph::from_edges(edges).unwrap();
        let report = verify_decomposition(&dec);
        assert!(report.witnesses.contains(&Witness::ForeignEdge { block: 2, edge: "(0,0)-(1,1)".into() }));
    }

    #[test]
    fn isomorphism_search() {
        let (_, _, h) = k9_fixture().into_parts();
        let relabeled = {
            let k: Graph = CompleteGraph::new(9).unwrap().into();
            let g = crate::group::Permutation::from_cycles(k, &[&[0, 1], &[2, 8, 5]]).unwrap();
            h.image(&g)
        };
        assert!(isomorphic(&h, &relabeled));

        // four triangles vs three triangles plus a 3-edge path
        let e = |a: usize, b: usize| Edge::new(a - 1, b - 1).unwrap();
        let other = Subgraph::from_edges([
            e(1, 4),
            e(4, 5),
            e(1, 5),
            e(2, 6),
            e(6, 8),
            e(2, 8),
            e(3, 7),
            e(7, 9),
            e(3, 9),
            e(5, 6),
            e(6, 7),
            e(7, 8),
        ])
        .unwrap();
        assert!(!isomorphic(&h, &other));
    }
}
