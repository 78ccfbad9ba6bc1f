//! Acceptance checks, one PASS/FAIL line each. Runs without the test harness
//! so the lines always print; exits nonzero if any check fails.

mod common;

use std::collections::HashSet;
use std::process::Command;
use std::time::Instant;

use transdec::decomposition::{check_partition, diagonal_fixture_n4, k9_fixture, k9_triangles, refine_decomposition};
use transdec::group::find_fixed_edge;
use transdec::{
    edge_orbits, gallai_check, is_path, one_edge_per_orbit, orbit_census, partial_stretch_sum, staircase_array,
    staircase_decomposition, walk_from_array, Edge, EdgeKind, Error, FiniteGroup, Graph, GridGraph, StepArray,
    Subgraph,
};

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

const GENERATED: [usize; 8] = [3, 5, 7, 11, 13, 17, 19, 23];

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn staircase_decompositions() -> Check {
    let mut slowest = 0f64;
    for n in GENERATED {
        let t = Instant::now();
        let (dec, report) = staircase_decomposition(n, false).map_err(|e| format!("n={n}: {e}"))?;
        let secs = t.elapsed().as_secs_f64();
        ensure(secs < 5.0, || format!("n={n}: build and verify took {secs:.2}s"))?;
        slowest = slowest.max(secs);
        ensure(dec.blocks.len() == n, || format!("n={n}: {} blocks", dec.blocks.len()))?;
        for (i, b) in dec.blocks.iter().enumerate() {
            ensure(b.edge_count() == n * (n - 1), || format!("n={n}: block {i} has {} edges", b.edge_count()))?;
            ensure(common::brute_force_is_path(b.edges()), || format!("n={n}: block {i} is not a path"))?;
        }
        let total = n * n * (n - 1);
        ensure(dec.graph.edge_count() == total, || format!("n={n}: graph has {} edges", dec.graph.edge_count()))?;
        let mut seen = HashSet::new();
        for b in &dec.blocks {
            for &e in b.edges() {
                ensure(dec.graph.has_edge(e) && seen.insert(e), || format!("n={n}: edge {e:?} repeated or foreign"))?;
            }
        }
        ensure(seen.len() == total, || format!("n={n}: {} of {total} edges covered", seen.len()))?;
        ensure(report.all_passed(), || format!("n={n}: failed {:?}", report.failed_flags()))?;
    }
    Ok(format!("n in {GENERATED:?}: n paths of n(n-1) edges partition E, closed, transitive, trivial stabilizer; slowest build+verify {slowest:.2}s"))
}

fn base_path_for_n3() -> Check {
    let (dec, _) = staircase_decomposition(3, false).map_err(|e| e.to_string())?;
    let grid = *dec.graph.as_grid().ok_or("not a grid")?;
    let trail = dec.base.trail().ok_or("base has no vertex order")?;
    let got: Vec<(usize, usize)> = trail.iter().map(|&v| grid.vertex_at(v)).map(|v| (v.row(), v.col())).collect();
    let want = [(0, 0), (0, 1), (1, 1), (1, 2), (2, 2), (2, 0), (1, 0)];
    ensure(got == want, || format!("got {got:?}"))?;
    Ok("base path (0,0),(0,1),(1,1),(1,2),(2,2),(2,0),(1,0)".into())
}

fn orbit_census_matches() -> Check {
    let mut cases = 0;
    for n in (3..=13).step_by(2) {
        for m in 2..=13 {
            let grid = GridGraph::new(n, m).map_err(|e| e.to_string())?;
            let census = orbit_census(n, m).map_err(|e| e.to_string())?;
            let orbits = edge_orbits(&Graph::from(grid), &FiniteGroup::row_shift(grid));
            let horizontal = orbits
                .iter()
                .filter(|o| grid.from_edge(o.edges[0]).map(|e| e.kind() == EdgeKind::Horizontal).unwrap_or(false))
                .count();
            ensure(horizontal == census.horizontal, || format!("K_{n} x K_{m}: {horizontal} horizontal"))?;
            ensure(orbits.len() - horizontal == census.vertical, || format!("K_{n} x K_{m}: vertical count"))?;
            ensure(orbits.iter().all(|o| o.len() == census.orbit_size), || format!("K_{n} x K_{m}: orbit size"))?;
            cases += 1;
        }
    }
    Ok(format!("{cases} grids, odd n <= 13, m <= 13: counts and sizes agree"))
}

fn partial_sums_match() -> Check {
    let mut cases = 0;
    for n in common::odd_primes_upto(13) {
        for k in 1..=(n - 1) / 2 {
            for q in 1..=2 * n {
                for p in 1..=q {
                    let closed = partial_stretch_sum(n, k, p, q).map_err(|e| e.to_string())?;
                    let direct = common::direct_partial_sum(n, k, p, q);
                    ensure(closed == direct, || format!("n={n} k={k} p={p} q={q}: {closed:?} vs {direct:?}"))?;
                    ensure(closed != (0, 0), || format!("n={n} k={k} p={p} q={q}: vanishes"))?;
                    cases += 1;
                }
            }
        }
    }
    Ok(format!("{cases} (n,k,p,q) cases equal direct sums, none zero"))
}

fn criteria_match_brute_force() -> Check {
    let staircases: Vec<StepArray> = (3..=13).step_by(2).map(|n| staircase_array(n).unwrap()).collect();
    let random = common::random_arrays();
    let mut disagreements = Vec::new();
    for arr in staircases.iter().chain(&random) {
        let grid = arr.grid();
        let walk = walk_from_array(grid.vertex(0, 0), arr).map_err(|e| e.to_string())?;
        let orbit_of = common::row_shift_orbit_index(grid);
        if is_path(&walk) != common::naive_is_path(&walk)
            || one_edge_per_orbit(arr) != common::naive_one_edge_per_orbit(&walk, &orbit_of)
        {
            disagreements.push(arr.to_string());
        }
    }
    ensure(disagreements.is_empty(), || format!("disagree on {}", disagreements.join("; ")))?;
    Ok(format!(
        "{} staircase + {} random arrays (seed {:#x}): exact agreement",
        staircases.len(),
        random.len(),
        common::RANDOM_ARRAY_SEED
    ))
}

fn k9_example() -> Check {
    let (dec, report) = k9_fixture().decompose().map_err(|e| e.to_string())?;
    ensure(report.all_passed(), || format!("failed {:?}", report.failed_flags()))?;
    ensure(dec.blocks.len() == 3, || format!("{} blocks", dec.blocks.len()))?;
    let mut triangles = Vec::new();
    for g in dec.group.elements() {
        for [a, b, c] in k9_triangles() {
            let t = [a - 1, b - 1, c - 1].map(|v| g.apply(v));
            let edges = [(t[0], t[1]), (t[1], t[2]), (t[0], t[2])].map(|(x, y)| Edge::new(x, y).unwrap());
            triangles.push(Subgraph::from_edges(edges).map_err(|e| e.to_string())?);
        }
    }
    ensure(triangles.len() == 12, || format!("{} triangles", triangles.len()))?;
    let witnesses = check_partition(&dec.graph, &triangles);
    ensure(witnesses.is_empty(), || format!("triangles: {}", witnesses[0]))?;
    ensure(dec.graph.edge_count() == 36, || "K_9 edge count".into())?;
    Ok("3 blocks, transitive; 12 triangles partition the 36 edges of K_9".into())
}

fn diagonal_example() -> Check {
    let (fx, walk) = diagonal_fixture_n4();
    ensure(common::naive_is_path(&walk) && walk.len() == 12, || "base is not a 12-edge path".into())?;
    let (dec, report) = fx.decompose().map_err(|e| e.to_string())?;
    ensure(report.all_passed(), || format!("failed {:?}", report.failed_flags()))?;
    ensure(dec.blocks.len() == 4, || format!("{} blocks", dec.blocks.len()))?;
    ensure(dec.blocks.iter().all(|b| b.edge_count() == 12 && common::brute_force_is_path(b.edges())), || {
        "a block is not a 12-edge path".into()
    })?;
    ensure(dec.edge_total() == 48 && dec.graph.edge_count() == 48, || "edge total".into())?;
    Ok("4 paths of 12 edges partition K_4 x K_4, transitive under the diagonal shift".into())
}

fn run_cli(args: &[&str]) -> Result<(i32, String), String> {
    let out = Command::new(env!("CARGO_BIN_EXE_transdec")).args(args).output().map_err(|e| e.to_string())?;
    Ok((out.status.code().unwrap_or(-1), String::from_utf8_lossy(&out.stdout).into_owned()))
}

fn negative_controls() -> Check {
    // composite n: the walk revisits a vertex
    let err = staircase_decomposition(9, true).err().ok_or("n=9 built a decomposition")?;
    let Error::ConstructionInvalid { check: "is_path", detail } = &err else {
        return Err(format!("n=9: unexpected {err}"));
    };
    let arr = staircase_array(9).map_err(|e| e.to_string())?;
    let walk = walk_from_array(arr.grid().vertex(0, 0), &arr).map_err(|e| e.to_string())?;
    let (i, j) = walk.repeated_vertex().ok_or("no repeated vertex")?;
    ensure(walk.vertices()[i] == walk.vertices()[j] && !common::naive_is_path(&walk), || "repeat is not real".into())?;
    let (code, _) = run_cli(&["generate", "--n", "9", "--force"])?;
    ensure(code == 2, || format!("generate --n 9 --force exited {code}"))?;

    // even n: some shift fixes an edge
    let mut fixed = Vec::new();
    for n in [2, 4, 6] {
        let grid = GridGraph::new(n, 3).map_err(|e| e.to_string())?;
        let graph = Graph::from(grid);
        let group = FiniteGroup::row_shift(grid);
        let (k, e) = find_fixed_edge(&graph, &group).ok_or_else(|| format!("n={n}: no fixed edge"))?;
        ensure(k != 0 && group.elements()[k].apply_edge(e) == e, || format!("n={n}: fake fixed edge"))?;
        fixed.push(graph.edge_label(e));
    }
    let (code, _) = run_cli(&["orbits", "--n", "2", "--m", "3"])?;
    ensure(code == 2, || format!("orbits --n 2 exited {code}"))?;

    // a mutated file: block 0 takes an edge that block 1 already owns
    let (code, text) = run_cli(&["generate", "--n", "5"])?;
    ensure(code == 0, || "generate --n 5 failed".into())?;
    let mut doc: serde_json::Value = serde_json::from_str(&text).map_err(|e| e.to_string())?;
    doc["blocks"][0]["edges"][0] = doc["blocks"][1]["edges"][0].clone();
    let file = tempfile::NamedTempFile::new().map_err(|e| e.to_string())?;
    std::fs::write(file.path(), doc.to_string()).map_err(|e| e.to_string())?;
    let (code, out) = run_cli(&["verify", "--input", file.path().to_str().unwrap()])?;
    ensure(code == 2, || format!("verify on mutated file exited {code}"))?;
    let report: serde_json::Value = serde_json::from_str(&out).map_err(|e| e.to_string())?;
    ensure(report["is_partition"] == false, || "mutated file passed is_partition".into())?;
    let witness = report["witnesses"][0].to_string();
    Ok(format!("n=9: {detail}; even n fixes {}; mutated file: {witness}", fixed.join(", ")))
}

fn conjecture_instances() -> Check {
    for n in GENERATED {
        let (dec, _) = staircase_decomposition(n, false).map_err(|e| e.to_string())?;
        ensure(gallai_check(&dec) && n <= (n * n).div_ceil(2), || format!("n={n}: Gallai bound"))?;
        let paths = refine_decomposition(&dec, n - 1).map_err(|e| format!("n={n}: {e}"))?;
        ensure(paths.len() == n * n, || format!("n={n}: {} paths", paths.len()))?;
        ensure(paths.iter().all(|p| p.edge_count() == n - 1 && common::brute_force_is_path(p.edges())), || {
            format!("n={n}: a piece is not an (n-1)-edge path")
        })?;
        let witnesses = check_partition(&dec.graph, &paths);
        ensure(witnesses.is_empty(), || format!("n={n}: {}", witnesses[0]))?;
    }
    Ok(format!("n in {GENERATED:?}: n <= (n^2+1)/2 paths; n^2 paths of n-1 edges partition E"))
}

fn main() {
    let checks: [Criterion; 9] = [
        ("staircase decompositions", staircase_decompositions),
        ("K_3 x K_3 base path", base_path_for_n3),
        ("orbit census", orbit_census_matches),
        ("partial stretch sums", partial_sums_match),
        ("path and orbit criteria", criteria_match_brute_force),
        ("K_9 triangles", k9_example),
        ("diagonal shift on K_4 x K_4", diagonal_example),
        ("negative controls", negative_controls),
        ("path-count bounds and splitting", conjecture_instances),
    ];
    let mut failed = 0;
    for (i, (name, check)) in checks.iter().enumerate() {
        match check() {
            Ok(detail) => println!("criterion {}: PASS {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {}: FAIL {name}: {detail}", i + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria passed", checks.len() - failed, checks.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
