//! Brute-force reference implementations shared by the integration tests.
//! None of these call the closed forms they are compared against.

#![allow(dead_code)]

use std::collections::{HashMap, HashSet};

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use transdec::{edge_orbits, stretch, Edge, FiniteGroup, Graph, GridGraph, StepArray, Walk};

pub const RANDOM_ARRAY_SEED: u64 = 0x7472_616e_7364_6563;
pub const RANDOM_ARRAY_COUNT: usize = 1000;

pub fn odd_primes_upto(limit: usize) -> Vec<usize> {
    (3..=limit).filter(|&n| (2..n).all(|d| n % d != 0)).collect()
}

/// All vertices distinct.
pub fn naive_is_path(walk: &Walk) -> bool {
    let vs = walk.vertices();
    vs.iter().collect::<HashSet<_>>().len() == vs.len()
}

/// Orbit of each edge under the enumerated row-shift group.
pub fn row_shift_orbit_index(grid: GridGraph) -> HashMap<Edge, usize> {
    let graph = Graph::from(grid);
    let group = FiniteGroup::row_shift(grid);
    let mut index = HashMap::new();
    for (i, orbit) in edge_orbits(&graph, &group).iter().enumerate() {
        for &e in &orbit.edges {
            index.insert(e, i);
        }
    }
    index
}

/// No two walk edges (repeats included) share a row-shift orbit.
pub fn naive_one_edge_per_orbit(walk: &Walk, orbit_of: &HashMap<Edge, usize>) -> bool {
    let ids: Vec<usize> = walk.edge_indices().iter().map(|e| orbit_of[e]).collect();
    ids.iter().collect::<HashSet<_>>().len() == ids.len()
}

/// Sum of steps `p..=q` (1-based) of stretch `k`, by adding them up.
pub fn direct_partial_sum(n: usize, k: usize, p: usize, q: usize) -> (usize, usize) {
    let s = stretch(n, k).unwrap();
    s.steps()[p - 1..q].iter().fold((0, 0), |(r, c), st| ((r + st.drow()) % n, (c + st.dcol()) % n))
}

/// A uniformly random step array: direction, then a nonzero residue.
pub fn random_array(rng: &mut ChaCha8Rng) -> StepArray {
    let n = rng.gen_range(2..=7);
    let m = rng.gen_range(2..=7);
    let grid = GridGraph::new(n, m).unwrap();
    let len = rng.gen_range(1..=30);
    let pairs: Vec<(i64, i64)> = (0..len)
        .map(|_| if rng.gen_bool(0.5) { (0, rng.gen_range(1..m) as i64) } else { (rng.gen_range(1..n) as i64, 0) })
        .collect();
    StepArray::from_pairs(grid, &pairs).unwrap()
}

pub fn random_arrays() -> Vec<StepArray> {
    let mut rng = ChaCha8Rng::seed_from_u64(RANDOM_ARRAY_SEED);
    (0..RANDOM_ARRAY_COUNT).map(|_| random_array(&mut rng)).collect()
}

/// Does some ordering of the subgraph's vertices trace exactly its edges as a path?
/// Exhaustive search for a Hamiltonian path of the subgraph from every start vertex.
pub fn brute_force_is_path(edges: &[Edge]) -> bool {
    let mut adj: HashMap<usize, Vec<usize>> = HashMap::new();
    for e in edges {
        adj.entry(e.lo()).or_default().push(e.hi());
        adj.entry(e.hi()).or_default().push(e.lo());
    }
    if adj.len() != edges.len() + 1 {
        return false;
    }
    let mut starts: Vec<usize> = adj.keys().copied().collect();
    starts.sort_unstable();
    starts.into_iter().any(|s| {
        let mut visited = HashSet::from([s]);
        hamiltonian_from(s, &adj, &mut visited)
    })
}

fn hamiltonian_from(v: usize, adj: &HashMap<usize, Vec<usize>>, visited: &mut HashSet<usize>) -> bool {
    if visited.len() == adj.len() {
        return true;
    }
    for &w in &adj[&v] {
        if visited.insert(w) {
            if hamiltonian_from(w, adj, visited) {
                return true;
            }
            visited.remove(&w);
        }
    }
    false
}
