//! The `transdec` command line.
//!
//! [`run`] parses arguments and returns the full output instead of printing it,
//! so the binary stays a thin wrapper and tests can call it in-process.
//! Exit codes: 0 verified, 1 usage or parse error, 2 mathematical failure.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::decomposition::{
    check_partition, diagonal_fixture_n4, gallai_check, k9_fixture, refine_decomposition, staircase_decomposition,
    verify_decomposition, Decomposition, VerificationReport,
};
use crate::error::Error;
use crate::grid::{Graph, GridGraph};
use crate::group::{edge_orbits, find_fixed_edge, orbit_census, FiniteGroup, OrbitId};
use crate::io;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_FAILED: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "transdec", version, about = "Transitive path decompositions of K_n x K_n")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
    Edges,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
pub enum GroupArg {
    RowShift,
    DiagonalShift,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ExampleName {
    /// Four triangles of K_9 under a product of three 3-cycles
    K9,
    /// The staircase path decomposition of K_3 x K_3
    Fig3,
    /// A 12-edge path of K_4 x K_4 under the diagonal shift
    Diag4,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build and verify the staircase decomposition of K_n x K_n
    Generate {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Attempt odd n that is not prime
        #[arg(long)]
        force: bool,
    },
    /// Re-verify a decomposition JSON file from scratch
    Verify {
        #[arg(long)]
        input: PathBuf,
    },
    /// List the edge orbits of a shift group on K_n x K_m
    Orbits {
        #[arg(long)]
        n: usize,
        /// Defaults to n
        #[arg(long)]
        m: Option<usize>,
        #[arg(long, value_enum, default_value_t = GroupArg::RowShift)]
        group: GroupArg,
        /// Print every orbit's edges
        #[arg(long)]
        edges: bool,
    },
    /// Build and verify a small worked example
    Examples {
        #[arg(value_enum)]
        name: ExampleName,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Cut every staircase path into paths of b edges
    Split {
        #[arg(long)]
        n: usize,
        /// Segment length, defaults to n-1
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        b: Option<u64>,
        #[arg(long)]
        force: bool,
        #[arg(long, value_enum, default_value_t = Format::Edges)]
        format: Format,
    },
}

/// Everything one invocation produced.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn fail(code: i32, message: impl std::fmt::Display) -> Self {
        Outcome { code, stdout: String::new(), stderr: format!("error: {message}\n") }
    }
}

/// Exit code for a library error.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::ConstructionInvalid { .. }
        | Error::PreconditionFailed(_)
        | Error::NotAPath(_)
        | Error::EmptySubgraph
        | Error::Divisibility { .. } => EXIT_FAILED,
        _ => EXIT_USAGE,
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(cli.command),
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: EXIT_OK, stdout: text, stderr: String::new() }
            }
        }
    }
}

pub fn execute(command: Command) -> Outcome {
    match command {
        Command::Generate { n, format, force } => generate(n, format, force),
        Command::Verify { input } => verify(&input),
        Command::Orbits { n, m, group, edges } => orbits(n, m.unwrap_or(n), group, edges),
        Command::Examples { name, format } => examples(name, format),
        Command::Split { n, b, force, format } => split(n, b, force, format),
    }
}

fn report_lines(report: &VerificationReport) -> String {
    let mut out = String::new();
    for (flag, ok) in report.flags() {
        let _ = writeln!(out, "{flag}: {ok}");
        if !ok {
            for w in report.witnesses_for(flag) {
                let _ = writeln!(out, "  witness: {w}");
            }
        }
    }
    out
}

fn render(dec: &Decomposition, report: &VerificationReport, format: Format) -> String {
    match format {
        Format::Json => io::to_json(dec, Some(report)),
        Format::Dot => io::export_dot(dec),
        Format::Edges => io::export_edges(&dec.graph, &dec.blocks),
    }
}

/// Output for a built decomposition: exit 0 only if every flag holds.
fn verified_outcome(dec: &Decomposition, report: &VerificationReport, format: Format, extra: &str) -> Outcome {
    let stdout = render(dec, report, format);
    if report.all_passed() {
        let stderr = format!(
            "{extra}verified: {} blocks covering {} edges of {}\n",
            dec.blocks.len(),
            dec.edge_total(),
            dec.graph.describe()
        );
        Outcome { code: EXIT_OK, stdout, stderr }
    } else {
        let stderr =
            format!("{extra}verification failed: {}\n{}", report.failed_flags().join(", "), report_lines(report));
        Outcome { code: EXIT_FAILED, stdout, stderr }
    }
}

fn construction_failure(err: &Error, format: Format) -> Outcome {
    let mut out = Outcome::fail(exit_code(err), err);
    if let (Error::ConstructionInvalid { check, detail }, Format::Json) = (err, format) {
        let doc = serde_json::json!({ "construction_invalid": { "check": check, "detail": detail } });
        out.stdout = format!("{doc}\n");
    }
    out
}

fn generate(n: usize, format: Format, force: bool) -> Outcome {
    match staircase_decomposition(n, force) {
        Ok((dec, report)) => verified_outcome(&dec, &report, format, ""),
        Err(e) => construction_failure(&e, format),
    }
}

fn verify(input: &std::path::Path) -> Outcome {
    let text = match std::fs::read_to_string(input) {
        Ok(t) => t,
        Err(e) => return Outcome::fail(EXIT_USAGE, format!("cannot read {}: {e}", input.display())),
    };
    let dec = match io::from_json(&text) {
        Ok(d) => d,
        Err(e) => return Outcome::fail(exit_code(&e), e),
    };
    let report = verify_decomposition(&dec);
    let stdout = format!("{}\n", serde_json::to_string(&report).expect("plain data serializes"));
    let code = if report.all_passed() { EXIT_OK } else { EXIT_FAILED };
    Outcome { code, stdout, stderr: report_lines(&report) }
}

fn orbits(n: usize, m: usize, group: GroupArg, list_edges: bool) -> Outcome {
    let grid = match GridGraph::new(n, m) {
        Ok(g) => g,
        Err(e) => return Outcome::fail(EXIT_USAGE, e),
    };
    let group = match group {
        GroupArg::RowShift => FiniteGroup::row_shift(grid),
        GroupArg::DiagonalShift => match FiniteGroup::diagonal_shift(grid) {
            Ok(g) => g,
            Err(e) => return Outcome::fail(EXIT_USAGE, e),
        },
    };
    let graph = Graph::from(grid);
    let orbits = edge_orbits(&graph, &group);

    let mut out = Outcome::default();
    let s = &mut out.stdout;
    let _ = writeln!(s, "graph: {}", graph.describe());
    let _ = writeln!(s, "group: {}, order {}", group.kind_name(), group.order());
    let _ = writeln!(s, "orbits: {}", orbits.len());
    let mut sizes: BTreeMap<usize, usize> = BTreeMap::new();
    for o in &orbits {
        *sizes.entry(o.len()).or_default() += 1;
    }
    if sizes.len() == 1 {
        let _ = writeln!(s, "orbit size: {}", orbits[0].len());
    } else {
        let parts: Vec<String> = sizes.iter().map(|(size, count)| format!("{count} of size {size}")).collect();
        let _ = writeln!(s, "orbit sizes: {}", parts.join(", "));
    }

    if group.is_row_shift() && n % 2 == 1 {
        let census = orbit_census(n, m).expect("odd n >= 3 and m >= 2");
        let horizontal = orbits.iter().filter(|o| matches!(o.id, OrbitId::Horizontal { .. })).count();
        let vertical = orbits.iter().filter(|o| matches!(o.id, OrbitId::Vertical { .. })).count();
        let sizes_match = orbits.iter().all(|o| o.len() == census.orbit_size);
        if horizontal == census.horizontal && vertical == census.vertical && sizes_match {
            let _ = writeln!(
                s,
                "census: {} horizontal + {} vertical = {} orbits of size {}, matches enumeration",
                census.horizontal,
                census.vertical,
                census.total(),
                census.orbit_size
            );
        } else {
            let _ = writeln!(
                s,
                "census: MISMATCH formula {}+{} of size {}, enumeration {horizontal}+{vertical}",
                census.horizontal, census.vertical, census.orbit_size
            );
            out.code = EXIT_FAILED;
        }
    }

    match find_fixed_edge(&graph, &group) {
        None => {
            let _ = writeln!(s, "semiregular on edges: yes");
        }
        Some((element, e)) => {
            let fixed = format!("element #{element} fixes {}", graph.edge_label(e));
            let _ = writeln!(s, "semiregular on edges: no, {fixed}");
            let _ = writeln!(out.stderr, "warning: action is not semiregular on edges: {fixed}");
            out.code = EXIT_FAILED;
        }
    }

    let s = &mut out.stdout;
    for o in &orbits {
        if list_edges {
            let members: Vec<String> = o.edges.iter().map(|&e| graph.edge_label(e)).collect();
            let _ = writeln!(s, "{}: {}", o.id.label(&graph), members.join(" "));
        } else {
            let _ = writeln!(s, "{}", o.id.label(&graph));
        }
    }
    out
}

fn examples(name: ExampleName, format: Format) -> Outcome {
    let built = match name {
        ExampleName::K9 => k9_fixture().decompose(),
        ExampleName::Fig3 => staircase_decomposition(3, false),
        ExampleName::Diag4 => diagonal_fixture_n4().0.decompose(),
    };
    let (dec, report) = match built {
        Ok(x) => x,
        Err(e) => return construction_failure(&e, format),
    };
    let extra = match (&dec.graph, dec.base.trail()) {
        (Graph::Grid(_), Some(trail)) => {
            let labels: Vec<String> = trail.iter().map(|&v| dec.graph.vertex_label(v)).collect();
            format!("base path: {}\n", labels.join(" "))
        }
        _ => String::new(),
    };
    verified_outcome(&dec, &report, format, &extra)
}

fn split(n: usize, b: Option<u64>, force: bool, format: Format) -> Outcome {
    if n < 3 || n.is_multiple_of(2) {
        return Outcome::fail(EXIT_USAGE, Error::NotOddPrime(n));
    }
    let b = b.map_or(n - 1, |b| b as usize);
    let len = n * (n - 1);
    if !len.is_multiple_of(b) {
        return Outcome::fail(EXIT_USAGE, Error::Divisibility { len, segment: b });
    }
    let (dec, report) = match staircase_decomposition(n, force) {
        Ok(x) => x,
        Err(e) => return construction_failure(&e, format),
    };
    if !report.all_passed() {
        return verified_outcome(&dec, &report, format, "");
    }
    let paths = match refine_decomposition(&dec, b) {
        Ok(p) => p,
        Err(e) => return Outcome::fail(exit_code(&e), e),
    };
    let gallai = gallai_check(&dec);
    let partition = check_partition(&dec.graph, &paths);
    let all_paths = paths.iter().all(|p| p.edge_count() == b && p.is_path_shaped());

    let stdout = match format {
        Format::Json => {
            let doc = io::SplitDoc {
                graph: io::graph_doc(&dec.graph),
                segment: b,
                gallai,
                is_partition: partition.is_empty(),
                all_paths,
                paths: io::blocks_doc(&dec.graph, &paths),
            };
            format!("{}\n", serde_json::to_string(&doc).expect("plain data serializes"))
        }
        Format::Dot => io::export_dot_blocks(&dec.graph, &paths),
        Format::Edges => io::export_edges(&dec.graph, &paths),
    };
    let mut stderr = String::new();
    let vertices = dec.graph.vertex_count();
    let _ =
        writeln!(stderr, "gallai: {} paths, bound (|V|+1)/2 = {}: {gallai}", dec.blocks.len(), vertices.div_ceil(2));
    let _ = writeln!(stderr, "split: {} paths of {b} edges, all paths: {all_paths}", paths.len());
    let _ = writeln!(stderr, "is_partition: {}", partition.is_empty());
    for w in &partition {
        let _ = writeln!(stderr, "  witness: {w}");
    }
    let code = if gallai && all_paths && partition.is_empty() { EXIT_OK } else { EXIT_FAILED };
    Outcome { code, stdout, stderr }
}
