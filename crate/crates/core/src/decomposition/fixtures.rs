//! Small worked instances: four triangles in `K_9` under a 3-cycle product,
//! and a 12-step path in `K_4 □ K_4` under the diagonal shift.

use super::{build_orbit_decomposition, verify_decomposition, Decomposition, Subgraph, VerificationReport};
use crate::error::Result;
use crate::grid::{CompleteGraph, Edge, Graph, GridGraph};
use crate::group::{generate_group, FiniteGroup, Permutation, DEFAULT_GROUP_CAP};
use crate::staircase::{walk_from_array, StepArray, Walk};

/// A graph, a group acting on it, and a candidate base subgraph.
#[derive(Debug, Clone)]
pub struct Fixture {
    pub graph: Graph,
    pub group: FiniteGroup,
    pub base: Subgraph,
}

impl Fixture {
    pub fn into_parts(self) -> (Graph, FiniteGroup, Subgraph) {
        (self.graph, self.group, self.base)
    }

    /// Builds `H^G` and verifies it.
    pub fn decompose(&self) -> Result<(Decomposition, VerificationReport)> {
        let dec = build_orbit_decomposition(&self.graph, &self.group, &self.base)?;
        let report = verify_decomposition(&dec);
        Ok((dec, report))
    }
}

/// The four edge-disjoint triangles of the base, as 1-based labels.
pub fn k9_triangles() -> [[usize; 3]; 4] {
    [[1, 4, 5], [2, 6, 8], [3, 7, 9], [5, 6, 7]]
}

/// `K_9` on labels 1..=9, `G = ⟨(1,4,7)(2,5,8)(3,6,9)⟩`, and the union of the
/// four triangles as `H`.
pub fn k9_fixture() -> Fixture {
    let graph: Graph = CompleteGraph::new(9).expect("9 >= 2").into();
    // cycles in 0-based indices
    let gen = Permutation::from_cycles(graph, &[&[0, 3, 6], &[1, 4, 7], &[2, 5, 8]]).expect("valid 3-cycles");
    let group = generate_group(graph, vec![gen], DEFAULT_GROUP_CAP).expect("order 3");
    let edges = k9_triangles()
        .into_iter()
        .flat_map(|[a, b, c]| [(a, b), (b, c), (a, c)].map(|(x, y)| Edge::new(x - 1, y - 1).expect("distinct labels")));
    let base = Subgraph::from_edges(edges).expect("nonempty");
    Fixture { graph, group, base }
}

/// The 12-step array for `K_4 □ K_4` under `c'(a,b) = (a+1,b+1)`.
pub fn diagonal_n4_array() -> StepArray {
    let grid = GridGraph::square(4).expect("4 >= 2");
    StepArray::from_pairs(
        grid,
        &[(0, 1), (0, 1), (0, 1), (1, 0), (1, 0), (1, 0), (0, 2), (2, 0), (0, 3), (2, 0), (0, 2), (3, 0)],
    )
    .expect("each step moves along one line")
}

/// `K_4 □ K_4`, `L = ⟨c'⟩`, and the walk from `(0,0)` along [`diagonal_n4_array`].
pub fn diagonal_fixture_n4() -> (Fixture, Walk) {
    let arr = diagonal_n4_array();
    let grid = arr.grid();
    let walk = walk_from_array(grid.vertex(0, 0), &arr).expect("start is a vertex");
    let group = FiniteGroup::diagonal_shift(grid).expect("square grid");
    let base = Subgraph::from_walk(&walk).expect("nonempty walk");
    (Fixture { graph: grid.into(), group, base }, walk)
}
