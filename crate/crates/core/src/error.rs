use thiserror::Error;

/// Errors raised by the library. Validation failures are not errors; they are
/// carried by [`crate::graph::ValidationReport`].
#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed graph document: {0}")]
    Malformed(String),

    #[error("duplicate vertex id {0}")]
    DuplicateVertex(usize),

    #[error("edge {edge} references unknown vertex {vertex}")]
    UnknownVertex { edge: usize, vertex: usize },

    #[error("index vector of length {found} on edge {edge}, expected dimension {expected}")]
    IndexLength {
        edge: usize,
        expected: usize,
        found: usize,
    },

    #[error("point {0:?} does not match any vertex representative modulo Z^d")]
    UnmatchedEndpoint(Vec<f64>),

    #[error("vertices {0} and {1} have representatives that coincide modulo Z^d")]
    AmbiguousRepresentative(usize, usize),

    #[error("{0} is not a potential value of the graph")]
    NotAPotentialValue(f64),

    #[error("quotient graph is disconnected")]
    Disconnected,

    #[error("distance source set is empty")]
    EmptySourceSet,

    #[error("vertices {0} and {1} are not adjacent")]
    NotAdjacent(usize, usize),

    #[error("quotient graph has no homotopically nontrivial cycle")]
    NoNontrivialCycle,

    #[error("quasimomentum has dimension {found}, expected {expected}")]
    MomentumDimension { expected: usize, found: usize },

    #[error("matrix is not Hermitian (deviation {0:e})")]
    NotHermitian(f64),

    #[error("grid needs at least 2 points per axis, got {0}")]
    GridTooSmall(usize),

    #[error("compute budget exceeded: {cost:e} > {budget:e} (N^d * nu^3)")]
    BudgetExceeded { cost: f64, budget: f64 },

    #[error("band {band} out of range 1..={count}")]
    BandOutOfRange { band: usize, count: usize },

    #[error("spectral clusters overlap at mu = {mu}: increase the coupling")]
    ClusterOverlap { mu: f64 },

    #[error("width {width:e} at mu = {mu} is not positive")]
    NonPositiveWidth { mu: f64, width: f64 },

    #[error("need at least {needed} points, got {found}")]
    TooFewPoints { needed: usize, found: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("unknown fixture {0:?}")]
    UnknownFixture(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
