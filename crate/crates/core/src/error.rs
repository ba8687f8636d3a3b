use thiserror::Error;

/// Errors shared across the crate. Validation problems that a caller may want
/// to inspect one by one are reported through `embedding::ValidationReport`
/// instead; this enum covers hard failures of operations.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("malformed rotation system: {0}")]
    Malformed(String),

    #[error("graph is not 2-connected")]
    NotTwoConnected,

    #[error("graph is a cycle: every vertex has degree 2")]
    IsCycle,

    #[error("graph has {found} faces but the operation needs at least {needed}")]
    TooFewFaces { needed: usize, found: usize },

    #[error("reduction is a simple 3-connected plane graph; the separating-cycle construction does not apply")]
    ReductionSimple3Connected,

    #[error("reduction is not a simple 3-connected plane graph")]
    ReductionNotSimple3Connected,

    #[error("cycle is not separating: {0}")]
    NotSeparating(String),

    #[error("exact-search guard exceeded: instance size {size} > guard {guard}")]
    GuardExceeded { size: usize, guard: usize },

    #[error("no proper edge coloring with {budget} colors")]
    BudgetExhausted { budget: usize },

    #[error("coloring does not assign a color to every vertex")]
    PartialAssignment,

    #[error("shared vertices are not injectively colored in both pieces")]
    NonInjectiveShared,

    #[error("hypothesis not met: {0}")]
    Hypothesis(String),

    #[error("bad generator parameter: {0}")]
    BadParameter(String),

    #[error("unknown platonic solid: {0}")]
    UnknownSolid(String),

    #[error("no face contains both vertex {0} and vertex {1}")]
    NoCommonFace(usize, usize),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
