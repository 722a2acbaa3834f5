//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by graph construction, numerics, search, and the I/O codecs.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An edge endpoint does not name a vertex of the graph.
    #[error("vertex {vertex} out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    /// A self-loop was requested; graphs here are simple.
    #[error("self-loop at vertex {vertex} is not allowed")]
    SelfLoop { vertex: usize },

    /// A scalar argument is outside its documented domain.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// A construction would exceed the size cap.
    #[error("graph of order {requested} exceeds the cap of {cap} vertices")]
    TooLarge { requested: usize, cap: usize },

    /// A routine with an explicit input-size limit was called past it.
    #[error("input too large for {what}: {detail}")]
    SizeLimit { what: &'static str, detail: String },

    /// The Jacobi iteration failed to reach its target residual.
    #[error("eigensolver did not converge after {sweeps} sweeps (off-diagonal residual {residual:.3e})")]
    NoConvergence { sweeps: usize, residual: f64 },

    /// A construction's internal self-check failed; the result was discarded.
    #[error("construction self-check failed: {0}")]
    ConstructionCheck(String),

    /// A caller-asserted precondition does not hold for the given input.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// Malformed graph6 input; `position` is the byte offset of the failure.
    #[error("graph6 parse error at byte {position}: {message}")]
    Graph6Parse { position: usize, message: String },

    /// Malformed edge-list input; `line` is 1-based.
    #[error("edge list parse error at line {line}: {message}")]
    EdgeListParse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
