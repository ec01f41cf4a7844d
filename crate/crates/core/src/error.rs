//! Error type shared by every module of the crate.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A measure cannot supply moments up to the order an operation needs.
    #[error("insufficient moments: order {required} required, only {available} available")]
    InsufficientMoments { required: usize, available: usize },

    /// A Jensen coefficient sequence is too short for the requested polynomial.
    #[error("insufficient Maclaurin coefficients: index {required} required, only {available} available")]
    InsufficientGammas { required: usize, available: usize },

    /// Evaluation point arity does not match the polynomial arity.
    #[error("arity mismatch: polynomial has arity {expected}, point has length {got}")]
    ArityMismatch { expected: usize, got: usize },

    /// Elementary symmetric function index out of `0..=len`.
    #[error("symmetric function index {k} out of range for {len} values")]
    SymmetricIndexOutOfRange { k: usize, len: usize },

    /// The leading principal moment matrix is singular, so the orthogonal
    /// polynomial of the requested degree does not exist.
    #[error("degenerate measure: moment matrix of order {order} is singular")]
    DegenerateMeasure { order: usize },

    /// A parameter is outside the domain of a measure family or closed form.
    #[error("unsupported parameter: {0}")]
    UnsupportedParameter(String),

    /// Nodes were required to be pairwise distinct but are not.
    #[error("nodes must be pairwise distinct")]
    DuplicateNodes,

    /// A row plan does not match the node set or the matrix order.
    #[error("malformed row plan: {0}")]
    MalformedPlan(String),

    /// A node-set or index-vector argument is structurally invalid.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A verification plan cannot produce the cases an identity needs.
    #[error("infeasible plan: {0}")]
    InfeasiblePlan(String),

    /// Text input (measure grammar, rational literal) failed to parse.
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
