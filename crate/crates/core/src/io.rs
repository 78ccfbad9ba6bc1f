//! Serialized forms: decomposition JSON, permutation and step-array JSON,
//! Graphviz DOT, and the one-edge-per-line text format.
//!
//! Decomposition JSON keeps a fixed key order (`graph`, `group`, `base`,
//! `blocks`, `report`) and sorted edge lists, so equal decompositions
//! serialize to equal bytes. Reading a file never trusts its `report`.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::decomposition::{Decomposition, Subgraph, VerificationReport};
use crate::error::{Error, Result};
use crate::grid::{CompleteGraph, Edge, Graph, GridGraph};
use crate::group::{generate_group, FiniteGroup, PermKind, Permutation, DEFAULT_GROUP_CAP};
use crate::staircase::{walk_from_array, StepArray, Walk};

/// A vertex: `[row, col]` on a grid, a 1-based label on a complete graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum VertexDoc {
    Cell([usize; 2]),
    Label(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum GraphDoc {
    Grid { n: usize, m: usize },
    Complete { n: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum KindDoc {
    RowShift,
    DiagonalShift,
    Explicit,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PermutationDoc {
    pub kind: KindDoc,
    pub n: usize,
    /// Absent for complete graphs.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    /// Image of each vertex in index order; explicit permutations only.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub map: Option<Vec<VertexDoc>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupDoc {
    pub kind: KindDoc,
    pub order: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub generators: Vec<PermutationDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum BaseDoc {
    Walk {
        start: [usize; 2],
        steps: Vec<[usize; 2]>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        vertices: Option<Vec<[usize; 2]>>,
    },
    Edges {
        edges: Vec<[VertexDoc; 2]>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BlockDoc {
    pub edges: Vec<[VertexDoc; 2]>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DecompositionDoc {
    pub graph: GraphDoc,
    pub group: GroupDoc,
    pub base: BaseDoc,
    pub blocks: Vec<BlockDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub report: Option<serde_json::Value>,
}

/// Blocks cut into equal-length paths, with the checks run on them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SplitDoc {
    pub graph: GraphDoc,
    pub segment: usize,
    pub gallai: bool,
    pub is_partition: bool,
    pub all_paths: bool,
    pub paths: Vec<BlockDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StepArrayDoc {
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub start: Option<[usize; 2]>,
    pub steps: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertices: Option<Vec<[usize; 2]>>,
}

fn schema(path: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Schema { path: path.into(), message: message.into() }
}

fn vertex_doc(graph: &Graph, v: usize) -> VertexDoc {
    match graph {
        Graph::Grid(g) => {
            let x = g.vertex_at(v);
            VertexDoc::Cell([x.row(), x.col()])
        }
        Graph::Complete(_) => VertexDoc::Label(v + 1),
    }
}

fn edge_doc(graph: &Graph, e: Edge) -> [VertexDoc; 2] {
    [vertex_doc(graph, e.lo()), vertex_doc(graph, e.hi())]
}

fn vertex_from_doc(graph: &Graph, v: VertexDoc, path: &str) -> Result<usize> {
    match (graph, v) {
        (Graph::Grid(g), VertexDoc::Cell([r, c])) => {
            g.checked_vertex(r, c).map(|x| g.index_of(x)).map_err(|e| schema(path, e.to_string()))
        }
        (Graph::Complete(k), VertexDoc::Label(l)) if (1..=k.order()).contains(&l) => Ok(l - 1),
        (Graph::Complete(k), VertexDoc::Label(l)) => Err(schema(path, format!("label {l} outside 1..={}", k.order()))),
        (Graph::Grid(_), VertexDoc::Label(_)) => Err(schema(path, "grid vertices are [row, col] pairs")),
        (Graph::Complete(_), VertexDoc::Cell(_)) => Err(schema(path, "complete-graph vertices are integer labels")),
    }
}

fn edge_from_doc(graph: &Graph, [a, b]: [VertexDoc; 2], path: &str) -> Result<Edge> {
    let u = vertex_from_doc(graph, a, &format!("{path}[0]"))?;
    let v = vertex_from_doc(graph, b, &format!("{path}[1]"))?;
    Edge::new(u, v).ok_or_else(|| schema(path, "edge endpoints coincide"))
}

pub fn graph_doc(graph: &Graph) -> GraphDoc {
    match graph {
        Graph::Grid(g) => GraphDoc::Grid { n: g.n(), m: g.m() },
        Graph::Complete(k) => GraphDoc::Complete { n: k.order() },
    }
}

pub fn graph_from_doc(doc: &GraphDoc) -> Result<Graph> {
    match *doc {
        GraphDoc::Grid { n, m } => GridGraph::new(n, m).map(Graph::from),
        GraphDoc::Complete { n } => CompleteGraph::new(n).map(Graph::from),
    }
    .map_err(|e| schema("graph", e.to_string()))
}

fn kind_doc(kind: PermKind) -> KindDoc {
    match kind {
        PermKind::RowShift => KindDoc::RowShift,
        PermKind::DiagonalShift => KindDoc::DiagonalShift,
        PermKind::Explicit => KindDoc::Explicit,
    }
}

pub fn permutation_doc(p: &Permutation) -> PermutationDoc {
    let graph = p.graph();
    let (n, m) = match graph {
        Graph::Grid(g) => (g.n(), Some(g.m())),
        Graph::Complete(k) => (k.order(), None),
    };
    let map = (p.kind() == PermKind::Explicit).then(|| p.images().map(|v| vertex_doc(graph, v)).collect());
    PermutationDoc { kind: kind_doc(p.kind()), n, m, map }
}

fn permutation_from_doc_at(doc: &PermutationDoc, path: &str) -> Result<Permutation> {
    let graph: Graph = match doc.m {
        Some(m) => GridGraph::new(doc.n, m).map_err(|e| schema(path, e.to_string()))?.into(),
        None => CompleteGraph::new(doc.n).map_err(|e| schema(path, e.to_string()))?.into(),
    };
    match (doc.kind, &doc.map, graph) {
        (KindDoc::RowShift, None, Graph::Grid(g)) => Ok(Permutation::row_shift(g)),
        (KindDoc::DiagonalShift, None, Graph::Grid(g)) => {
            Permutation::diagonal_shift(g).map_err(|e| schema(format!("{path}.kind"), e.to_string()))
        }
        (KindDoc::Explicit, Some(map), graph) => {
            let images = map
                .iter()
                .enumerate()
                .map(|(i, &v)| vertex_from_doc(&graph, v, &format!("{path}.map[{i}]")))
                .collect::<Result<Vec<_>>>()?;
            Permutation::explicit(graph, images).map_err(|e| schema(format!("{path}.map"), e.to_string()))
        }
        (KindDoc::Explicit, None, _) => Err(schema(format!("{path}.map"), "explicit permutations need a map")),
        (_, Some(_), _) => Err(schema(format!("{path}.map"), "only explicit permutations carry a map")),
        (_, None, Graph::Complete(_)) => Err(schema(format!("{path}.kind"), "shifts act on grids only")),
    }
}

pub fn permutation_from_doc(doc: &PermutationDoc) -> Result<Permutation> {
    permutation_from_doc_at(doc, "$")
}

pub fn permutation_to_json(p: &Permutation) -> String {
    serde_json::to_string(&permutation_doc(p)).expect("plain data serializes")
}

pub fn permutation_from_json(text: &str) -> Result<Permutation> {
    permutation_from_doc(&parse_doc(text)?)
}

pub fn group_doc(group: &FiniteGroup) -> GroupDoc {
    let kind = match group.kind_name() {
        "row_shift" => KindDoc::RowShift,
        "diagonal_shift" => KindDoc::DiagonalShift,
        _ => KindDoc::Explicit,
    };
    let generators = match kind {
        KindDoc::Explicit => group.generators().iter().map(permutation_doc).collect(),
        _ => Vec::new(),
    };
    GroupDoc { kind, order: group.order(), generators }
}

fn group_from_doc(doc: &GroupDoc, graph: &Graph) -> Result<FiniteGroup> {
    let group = match (doc.kind, graph) {
        (KindDoc::RowShift, Graph::Grid(g)) => FiniteGroup::row_shift(*g),
        (KindDoc::DiagonalShift, Graph::Grid(g)) => {
            FiniteGroup::diagonal_shift(*g).map_err(|e| schema("group.kind", e.to_string()))?
        }
        (KindDoc::Explicit, _) => {
            let gens = doc
                .generators
                .iter()
                .enumerate()
                .map(|(i, p)| permutation_from_doc_at(p, &format!("group.generators[{i}]")))
                .collect::<Result<Vec<_>>>()?;
            generate_group(*graph, gens, DEFAULT_GROUP_CAP).map_err(|e| schema("group.generators", e.to_string()))?
        }
        (_, Graph::Complete(_)) => return Err(schema("group.kind", "shifts act on grids only")),
    };
    if !doc.generators.is_empty() && doc.kind != KindDoc::Explicit {
        return Err(schema("group.generators", "only explicit groups list generators"));
    }
    if group.order() != doc.order {
        return Err(schema(
            "group.order",
            format!("declared {}, generated group has order {}", doc.order, group.order()),
        ));
    }
    Ok(group)
}

fn step_pairs(arr: &StepArray) -> Vec<[usize; 2]> {
    arr.steps().iter().map(|s| [s.drow(), s.dcol()]).collect()
}

fn cell_pairs(walk: &Walk) -> Vec<[usize; 2]> {
    walk.vertices().iter().map(|v| [v.row(), v.col()]).collect()
}

fn base_doc(graph: &Graph, base: &Subgraph) -> BaseDoc {
    if let (Graph::Grid(g), Some(trail)) = (graph, base.trail()) {
        let cells: Vec<_> = trail.iter().map(|&v| g.vertex_at(v)).collect();
        let steps = cells
            .windows(2)
            .map(|w| {
                let d = g.difference(w[0], w[1]);
                [d.drow, d.dcol]
            })
            .collect();
        return BaseDoc::Walk {
            start: [cells[0].row(), cells[0].col()],
            steps,
            vertices: Some(cells.iter().map(|v| [v.row(), v.col()]).collect()),
        };
    }
    BaseDoc::Edges { edges: base.edges().iter().map(|&e| edge_doc(graph, e)).collect() }
}

fn walk_from_doc(grid: GridGraph, start: [usize; 2], steps: &[[usize; 2]], path: &str) -> Result<Walk> {
    let v0 = grid.checked_vertex(start[0], start[1]).map_err(|e| schema(format!("{path}.start"), e.to_string()))?;
    let steps = steps
        .iter()
        .enumerate()
        .map(|(i, &[r, c])| {
            if r >= grid.n() || c >= grid.m() {
                return Err(schema(format!("{path}.steps[{i}]"), "step residue out of range"));
            }
            grid.step(r as i64, c as i64).map_err(|e| schema(format!("{path}.steps[{i}]"), e.to_string()))
        })
        .collect::<Result<Vec<_>>>()?;
    walk_from_array(v0, &StepArray::new(grid, steps)).map_err(|e| schema(path, e.to_string()))
}

fn base_from_doc(doc: &BaseDoc, graph: &Graph) -> Result<Subgraph> {
    match doc {
        BaseDoc::Walk { start, steps, vertices } => {
            let Graph::Grid(grid) = graph else {
                return Err(schema("base", "walk-form bases need a grid graph"));
            };
            let walk = walk_from_doc(*grid, *start, steps, "base")?;
            if let Some(vs) = vertices {
                if *vs != cell_pairs(&walk) {
                    return Err(schema("base.vertices", "does not match the walk from start along steps"));
                }
            }
            Subgraph::from_walk(&walk).map_err(|e| schema("base.steps", e.to_string()))
        }
        BaseDoc::Edges { edges } => {
            let edges = edges
                .iter()
                .enumerate()
                .map(|(i, &e)| edge_from_doc(graph, e, &format!("base.edges[{i}]")))
                .collect::<Result<Vec<_>>>()?;
            Subgraph::from_edges(edges).map_err(|e| schema("base.edges", e.to_string()))
        }
    }
}

fn block_from_doc(doc: &BlockDoc, graph: &Graph, i: usize) -> Result<Subgraph> {
    let mut edges = doc
        .edges
        .iter()
        .enumerate()
        .map(|(j, &e)| edge_from_doc(graph, e, &format!("blocks[{i}].edges[{j}]")))
        .collect::<Result<Vec<_>>>()?;
    let count = edges.len();
    edges.sort_unstable();
    edges.dedup();
    if edges.len() != count {
        return Err(schema(format!("blocks[{i}].edges"), "an edge is listed twice"));
    }
    Subgraph::from_edges(edges).map_err(|e| schema(format!("blocks[{i}].edges"), e.to_string()))
}

pub fn blocks_doc(graph: &Graph, blocks: &[Subgraph]) -> Vec<BlockDoc> {
    blocks.iter().map(|b| BlockDoc { edges: b.edges().iter().map(|&e| edge_doc(graph, e)).collect() }).collect()
}

pub fn decomposition_doc(dec: &Decomposition, report: Option<&VerificationReport>) -> DecompositionDoc {
    let graph = &dec.graph;
    DecompositionDoc {
        graph: graph_doc(graph),
        group: group_doc(&dec.group),
        base: base_doc(graph, &dec.base),
        blocks: blocks_doc(graph, &dec.blocks),
        report: report.map(|r| serde_json::to_value(r).expect("plain data serializes")),
    }
}

/// Rebuilds graph, group, base and blocks from a document; the embedded report is ignored.
pub fn decomposition_from_doc(doc: &DecompositionDoc) -> Result<Decomposition> {
    let graph = graph_from_doc(&doc.graph)?;
    let group = group_from_doc(&doc.group, &graph)?;
    let base = base_from_doc(&doc.base, &graph)?;
    let blocks =
        doc.blocks.iter().enumerate().map(|(i, b)| block_from_doc(b, &graph, i)).collect::<Result<Vec<_>>>()?;
    Ok(Decomposition { graph, group, base, blocks })
}

fn parse_doc<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        schema(if path.is_empty() { "$".to_owned() } else { path }, e.inner().to_string())
    })
}

/// Compact JSON, newline-terminated.
pub fn to_json(dec: &Decomposition, report: Option<&VerificationReport>) -> String {
    let mut s = serde_json::to_string(&decomposition_doc(dec, report)).expect("plain data serializes");
    s.push('\n');
    s
}

pub fn from_json(text: &str) -> Result<Decomposition> {
    decomposition_from_doc(&parse_doc(text)?)
}

pub fn step_array_doc(arr: &StepArray) -> StepArrayDoc {
    let g = arr.grid();
    StepArrayDoc { n: g.n(), m: (!g.is_square()).then_some(g.m()), start: None, steps: step_pairs(arr), vertices: None }
}

pub fn walk_doc(walk: &Walk) -> StepArrayDoc {
    let start = walk.start();
    StepArrayDoc {
        start: Some([start.row(), start.col()]),
        vertices: Some(cell_pairs(walk)),
        ..step_array_doc(walk.steps())
    }
}

pub fn step_array_to_json(arr: &StepArray) -> String {
    serde_json::to_string(&step_array_doc(arr)).expect("plain data serializes")
}

pub fn walk_to_json(walk: &Walk) -> String {
    serde_json::to_string(&walk_doc(walk)).expect("plain data serializes")
}

pub fn walk_from_json(text: &str) -> Result<Walk> {
    let doc: StepArrayDoc = parse_doc(text)?;
    let grid = GridGraph::new(doc.n, doc.m.unwrap_or(doc.n)).map_err(|e| schema("n", e.to_string()))?;
    let start = doc.start.ok_or_else(|| schema("start", "missing"))?;
    let walk = walk_from_doc(grid, start, &doc.steps, "$")?;
    if doc.vertices.is_some_and(|vs| vs != cell_pairs(&walk)) {
        return Err(schema("vertices", "does not match the walk from start along steps"));
    }
    Ok(walk)
}

const PALETTE: [&str; 12] = [
    "#e6194b", "#3cb44b", "#4363d8", "#f58231", "#911eb4", "#42d4f4", "#f032e6", "#9a6324", "#469990", "#800000",
    "#808000", "#000075",
];

fn dot_name(graph: &Graph, v: usize) -> String {
    match graph {
        Graph::Grid(g) => {
            let x = g.vertex_at(v);
            format!("\"{},{}\"", x.row(), x.col())
        }
        Graph::Complete(_) => format!("\"{}\"", v + 1),
    }
}

/// Undirected DOT with one palette color per block, cycling after 12.
pub fn export_dot(dec: &Decomposition) -> String {
    export_dot_blocks(&dec.graph, &dec.blocks)
}

pub fn export_dot_blocks(graph: &Graph, blocks: &[Subgraph]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "graph decomposition {{");
    let _ = writeln!(out, "  // {}, {} blocks", graph.describe(), blocks.len());
    for v in 0..graph.vertex_count() {
        let _ = writeln!(out, "  {};", dot_name(graph, v));
    }
    for (i, block) in blocks.iter().enumerate() {
        let color = PALETTE[i % PALETTE.len()];
        for &e in block.edges() {
            let _ = writeln!(out, "  {} -- {} [color=\"{color}\"];", dot_name(graph, e.lo()), dot_name(graph, e.hi()));
        }
    }
    out.push_str("}\n");
    out
}

/// One edge per line, each block introduced by a `# block i` line.
pub fn export_edges(graph: &Graph, blocks: &[Subgraph]) -> String {
    let mut out = String::new();
    for (i, block) in blocks.iter().enumerate() {
        let _ = writeln!(out, "# block {i}");
        for &e in block.edges() {
            let _ = writeln!(out, "{}", graph.edge_label(e));
        }
    }
    out
}

fn parse_vertex(graph: &Graph, s: &str, line: usize) -> Result<usize> {
    let bad = || schema(format!("line {line}"), format!("cannot read vertex {s:?}"));
    match graph {
        Graph::Grid(g) => {
            let inner = s.strip_prefix('(').and_then(|t| t.strip_suffix(')')).ok_or_else(bad)?;
            let (r, c) = inner.split_once(',').ok_or_else(bad)?;
            let (r, c) = (r.trim().parse().map_err(|_| bad())?, c.trim().parse().map_err(|_| bad())?);
            g.checked_vertex(r, c).map(|v| g.index_of(v)).map_err(|e| schema(format!("line {line}"), e.to_string()))
        }
        Graph::Complete(k) => {
            let l: usize = s.trim().parse().map_err(|_| bad())?;
            if !(1..=k.order()).contains(&l) {
                return Err(bad());
            }
            Ok(l - 1)
        }
    }
}

/// Reads [`export_edges`] output: `#` lines start a new group, blank lines are skipped.
pub fn parse_edge_list(graph: &Graph, text: &str) -> Result<Vec<Vec<Edge>>> {
    let mut groups: Vec<Vec<Edge>> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if line.starts_with('#') {
            groups.push(Vec::new());
            continue;
        }
        let (a, b) = match graph {
            Graph::Grid(_) => line.split_once(")-(").map(|(a, b)| (format!("{a})"), format!("({b}"))),
            Graph::Complete(_) => line.split_once('-').map(|(a, b)| (a.to_owned(), b.to_owned())),
        }
        .ok_or_else(|| schema(format!("line {}", i + 1), "expected an edge"))?;
        let (u, v) = (parse_vertex(graph, &a, i + 1)?, parse_vertex(graph, &b, i + 1)?);
        let e = Edge::new(u, v).ok_or_else(|| schema(format!("line {}", i + 1), "loop"))?;
        if groups.is_empty() {
            groups.push(Vec::new());
        }
        groups.last_mut().expect("just ensured").push(e);
    }
    Ok(groups)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::{diagonal_fixture_n4, k9_fixture, staircase_decomposition, verify_decomposition};

    #[test]
    fn json_shape() {
        let (dec, report) = staircase_decomposition(3, false).unwrap();
        let text = to_json(&dec, Some(&report));
        assert!(text.starts_with(r#"{"graph":{"kind":"grid","n":3,"m":3},"group":{"kind":"row_shift","order":3},"base":{"start":[0,0],"steps":[[0,1],[1,0],[0,1],[1,0],[0,1],[2,0]],"vertices":[[0,0],[0,1],[1,1],[1,2],[2,2],[2,0],[1,0]]},"blocks":[{"edges":[[[0,0],[0,1]],"#));
        assert!(text.contains(r#""report":{"is_partition":true,"#));
        assert!(text.ends_with("}\n"));
    }

    #[test]
    fn round_trip_fixtures() {
        let decs = [
            staircase_decomposition(5, false).unwrap().0,
            k9_fixture().decompose().unwrap().0,
            diagonal_fixture_n4().0.decompose().unwrap().0,
        ];
        for dec in decs {
            let text = to_json(&dec, None);
            let back = from_json(&text).unwrap();
            assert_eq!(
                back.blocks,
                dec.blocks.iter().map(|b| Subgraph::from_edges(b.edges().iter().copied()).unwrap()).collect::<Vec<_>>()
            );
            assert_eq!(back.group.order(), dec.group.order());
            assert_eq!(verify_decomposition(&back), verify_decomposition(&dec));
            assert_eq!(to_json(&back, None), text);
        }
    }

    #[test]
    fn k9_json_uses_labels() {
        let (dec, _) = k9_fixture().decompose().unwrap();
        let text = to_json(&dec, None);
        assert!(text.starts_with(r#"{"graph":{"kind":"complete","n":9},"group":{"kind":"explicit","order":3,"generators":[{"kind":"explicit","n":9,"map":[4,5,6,7,8,9,1,2,3]}]},"base":{"edges":[[1,4],[1,5],"#));
    }

    #[test]
    fn schema_errors_carry_paths() {
        let (dec, _) = staircase_decomposition(3, false).unwrap();
        let text = to_json(&dec, None);

        let truncated = &text[..text.len() / 2];
        assert!(matches!(from_json(truncated), Err(Error::Schema { .. })));

        let bad_vertex = text.replacen("[[[0,0],[0,1]]", "[[[0,0],[0,7]]", 1);
        match from_json(&bad_vertex) {
            Err(Error::Schema { path, .. }) => assert_eq!(path, "blocks[0].edges[0][1]"),
            other => panic!("{other:?}"),
        }

        let bad_order = text.replacen(r#""order":3"#, r#""order":4"#, 1);
        match from_json(&bad_order) {
            Err(Error::Schema { path, .. }) => assert_eq!(path, "group.order"),
            other => panic!("{other:?}"),
        }

        let bad_type = text.replacen(r#""n":3"#, r#""n":"three""#, 1);
        match from_json(&bad_type) {
            Err(Error::Schema { path, .. }) => assert_eq!(path, "graph"),
            other => panic!("{other:?}"),
        }

        let bad_walk = text.replacen(r#""vertices":[[0,0],[0,1]"#, r#""vertices":[[0,0],[0,2]"#, 1);
        match from_json(&bad_walk) {
            Err(Error::Schema { path, .. }) => assert_eq!(path, "base.vertices"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn permutation_json() {
        let g = GridGraph::new(3, 4).unwrap();
        let c = Permutation::row_shift(g);
        assert_eq!(permutation_to_json(&c), r#"{"kind":"row_shift","n":3,"m":4}"#);
        assert_eq!(permutation_from_json(&permutation_to_json(&c)).unwrap(), c);

        let sq = GridGraph::square(4).unwrap();
        let d = Permutation::diagonal_shift(sq).unwrap();
        assert_eq!(permutation_to_json(&d), r#"{"kind":"diagonal_shift","n":4,"m":4}"#);

        let swap = Permutation::explicit(GridGraph::new(2, 2).unwrap().into(), vec![1, 0, 3, 2]).unwrap();
        let text = permutation_to_json(&swap);
        assert_eq!(text, r#"{"kind":"explicit","n":2,"m":2,"map":[[0,1],[0,0],[1,1],[1,0]]}"#);
        assert_eq!(permutation_from_json(&text).unwrap(), swap);

        assert!(permutation_from_json(r#"{"kind":"diagonal_shift","n":3,"m":4}"#).is_err());
        assert!(permutation_from_json(r#"{"kind":"explicit","n":2,"m":2,"map":[[0,0],[0,0],[1,1],[1,0]]}"#).is_err());
    }

    #[test]
    fn step_array_and_walk_json() {
        let arr = crate::staircase::stretch(3, 1).unwrap();
        assert_eq!(step_array_to_json(&arr), r#"{"n":3,"steps":[[0,1],[1,0],[0,1],[1,0],[0,1],[2,0]]}"#);
        let walk = walk_from_array(arr.grid().vertex(0, 0), &arr).unwrap();
        let text = walk_to_json(&walk);
        assert_eq!(
            text,
            r#"{"n":3,"start":[0,0],"steps":[[0,1],[1,0],[0,1],[1,0],[0,1],[2,0]],"vertices":[[0,0],[0,1],[1,1],[1,2],[2,2],[2,0],[1,0]]}"#
        );
        assert_eq!(walk_from_json(&text).unwrap().vertices(), walk.vertices());
    }

    #[test]
    fn dot_export() {
        let (dec, _) = staircase_decomposition(3, false).unwrap();
        let dot = export_dot(&dec);
        let edge_lines: Vec<&str> = dot.lines().filter(|l| l.contains(" -- ")).collect();
        assert_eq!(edge_lines.len(), 18);
        let colors: std::collections::BTreeSet<&str> =
            edge_lines.iter().map(|l| l.split("color=").nth(1).unwrap()).collect();
        assert_eq!(colors.len(), 3);
        assert!(dot.contains(r##"  "0,0" -- "0,1" [color="#e6194b"];"##));

        let (k9, _) = k9_fixture().decompose().unwrap();
        let dot = export_dot(&k9);
        assert_eq!(dot.lines().filter(|l| l.contains(" -- ")).count(), 36);
        assert!(dot.contains(r#"  "1" -- "4""#));
    }

    #[test]
    fn edge_list_round_trip() {
        let (dec, _) = staircase_decomposition(5, false).unwrap();
        let text = export_edges(&dec.graph, &dec.blocks);
        assert!(text.starts_with("# block 0\n(0,0)-(0,1)\n"));
        let groups = parse_edge_list(&dec.graph, &text).unwrap();
        assert_eq!(groups.len(), 5);
        for (g, b) in groups.iter().zip(&dec.blocks) {
            assert_eq!(g.as_slice(), b.edges());
        }

        let (k9, _) = k9_fixture().decompose().unwrap();
        let text = export_edges(&k9.graph, &k9.blocks);
        assert_eq!(parse_edge_list(&k9.graph, &text).unwrap().concat().len(), 36);
        assert!(parse_edge_list(&dec.graph, "(0,0)-(9,0)\n").is_err());
    }
}
