//! Transitive path decompositions of `K_n □ K_n`.
//!
//! For an odd prime `n`, the staircase walk from `(0,0)` is a path with
//! `n(n−1)` edges that meets every edge orbit of the row shift
//! `c(a,b) = (a+1,b)` exactly once. Since `⟨c⟩` acts semiregularly on edges,
//! the images of that path under `⟨c⟩` partition the edge set and are permuted
//! transitively by the group.
//!
//! The crate builds that decomposition, builds the general orbit-image
//! decomposition `H^G` for any semiregular group and orbit transversal `H`,
//! and re-verifies every claim by exhaustive checks that do not reuse the
//! construction's shortcuts.

pub mod cli;
pub mod decomposition;
pub mod error;
pub mod grid;
pub mod group;
pub mod io;
pub mod staircase;

pub use decomposition::{
    build_orbit_decomposition, gallai_check, haggkvist_split, necessary_conditions, orbit_transversal_check,
    staircase_decomposition, verify_decomposition, Decomposition, Subgraph, VerificationReport,
};
pub use error::{Error, Result};
pub use grid::{make_grid, CompleteGraph, Edge, EdgeKind, Graph, GridEdge, GridGraph, GridVertex, Step};
pub use group::{
    edge_orbits, generate_group, is_semiregular_on_edges, orbit_census, same_orbit_row_shift, EdgeOrbit, FiniteGroup,
    OrbitId, Permutation,
};
pub use staircase::{
    build_staircase_path, is_path, one_edge_per_orbit, partial_stretch_sum, staircase_array, stretch, walk_from_array,
    StepArray, Walk,
};
