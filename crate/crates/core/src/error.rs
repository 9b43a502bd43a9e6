use thiserror::Error;

use crate::spectral::SpectralResult;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("uniformity k = {0} is below the minimum of 2")]
    UniformityTooSmall(usize),

    #[error("vertex count n = {n} is smaller than the uniformity k = {k}")]
    TooFewVertices { n: usize, k: usize },

    #[error("edge {index} has cardinality {found}, expected {expected}")]
    EdgeCardinality {
        index: usize,
        found: usize,
        expected: usize,
    },

    #[error("edge {index} contains vertex {vertex}, outside of [0, {n})")]
    VertexOutOfRange { index: usize, vertex: usize, n: usize },

    #[error("edge {index} duplicates edge {first}: {edge:?}")]
    DuplicateEdge {
        index: usize,
        first: usize,
        edge: Vec<usize>,
    },

    #[error("vertex {vertex} is out of range for a hypergraph on {n} vertices")]
    NoSuchVertex { vertex: usize, n: usize },

    #[error("edge swap removes {0:?}, which is not an edge of the hypergraph")]
    MissingEdge(Vec<usize>),

    #[error("role {role:?} maps to index {index}, which is out of range")]
    RoleOutOfRange { role: String, index: usize },

    #[error("role {0:?} is not defined")]
    MissingRole(String),

    #[error("family parameters require k >= 3 and m >= 5 (got k = {k}, m = {m})")]
    FamilyParameters { k: usize, m: usize },

    #[error("isomorphism test limited to {limit} vertices, instance has {n}")]
    InstanceTooLarge { n: usize, limit: usize },

    #[error("vector has length {found}, expected {expected}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("component {index} is negative ({value})")]
    NegativeComponent { index: usize, value: f64 },

    #[error("invalid solver options: {0}")]
    SolverOptions(String),

    #[error("hypergraph is disconnected; its adjacency tensor is not weakly irreducible")]
    Disconnected,

    #[error(
        "no convergence after {} iterations (best bracket [{}, {}])",
        .best.iterations, .best.lower, .best.upper
    )]
    NotConverged { best: Box<SpectralResult> },

    #[error("root solver requires m >= 5 (got {0})")]
    RootParameter(usize),

    #[error("invalid scan range [{lo}, {hi}]: need 5 <= lo < hi")]
    ScanRange { lo: usize, hi: usize },

    #[error("weight for (vertex {vertex}, edge {edge}) is not supported by an incidence")]
    WeightOffSupport { vertex: usize, edge: usize },

    #[error("incidence (vertex {vertex}, edge {edge}) has no weight")]
    MissingWeight { vertex: usize, edge: usize },

    #[error("weight for (vertex {vertex}, edge {edge}) must be positive, got {weight}")]
    NonPositiveWeight {
        vertex: usize,
        edge: usize,
        weight: f64,
    },

    #[error("no explicit certificate is known for family {0}")]
    NoCertificate(&'static str),

    #[error("alpha must be positive, got {0}")]
    NonPositiveAlpha(f64),

    #[error("invalid power spec (t = {t}, k = {k}, s = {s}): {reason}")]
    PowerSpec {
        t: usize,
        k: usize,
        s: usize,
        reason: &'static str,
    },

    #[error("seed is {found}-uniform but the power spec expects t = {expected}")]
    SeedUniformity { expected: usize, found: usize },

    #[error("seed vertex {0} is isolated")]
    IsolatedSeedVertex(usize),

    #[error("expected a positive value, got {0}")]
    NonPositive(f64),

    #[error("(mu, x) is not an eigenpair of the seed: residual {residual} exceeds {limit}")]
    NotAnEigenpair { residual: f64, limit: f64 },

    #[error("hypergraph file: {0}")]
    Format(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
