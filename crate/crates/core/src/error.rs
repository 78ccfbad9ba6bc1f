use thiserror::Error;

/// Why a construction refused to build a decomposition from its inputs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Precondition {
    /// A non-identity element maps `edge` to itself.
    NotSemiregular { element: usize, edge: String },
    /// The candidate subgraph holds `count` edges of orbit `orbit` instead of one.
    NotTransversal { orbit: String, count: usize },
    /// The candidate subgraph uses a pair that is not an edge of the graph.
    ForeignEdge { edge: String },
}

impl std::fmt::Display for Precondition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Precondition::NotSemiregular { element, edge } => {
                write!(f, "group is not semiregular on edges: element #{element} fixes {edge}")
            }
            Precondition::NotTransversal { orbit, count } => {
                write!(f, "subgraph is not an orbit transversal: orbit {orbit} holds {count} of its edges")
            }
            Precondition::ForeignEdge { edge } => write!(f, "{edge} is not an edge of the graph"),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension error: {0}")]
    Dimension(String),

    #[error("not an edge: {0}")]
    NotAnEdge(String),

    #[error("{vertex} is not an endpoint of {edge}")]
    NotAnEndpoint { vertex: String, edge: String },

    #[error("malformed step {0}: exactly one coordinate must be nonzero")]
    MalformedStep(String),

    #[error("index out of range: {0}")]
    IndexRange(String),

    #[error("not a bijection: {0}")]
    NotABijection(String),

    #[error("not an automorphism: {0}")]
    NotAnAutomorphism(String),

    #[error("group closure exceeded the cap of {cap} elements")]
    GroupTooLarge { cap: usize },

    #[error("{0} is not an odd prime (pass --force to build anyway)")]
    NotOddPrime(usize),

    #[error("construction invalid: {check} failed: {detail}")]
    ConstructionInvalid { check: &'static str, detail: String },

    #[error("precondition failed: {0}")]
    PreconditionFailed(Precondition),

    #[error("{len} edges cannot be split into segments of {segment}")]
    Divisibility { len: usize, segment: usize },

    #[error("empty subgraph")]
    EmptySubgraph,

    #[error("subgraph is not a path: {0}")]
    NotAPath(String),

    #[error("schema error at {path}: {message}")]
    Schema { path: String, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
