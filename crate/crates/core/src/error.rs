//! Crate-wide error type.
//!
//! Mathematical failures, scope boundaries, and I/O are kept in distinct
//! variants so the command-line layer can map them to exit codes.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch in {context}: expected {expected}, got {got}")]
    DimensionMismatch {
        context: &'static str,
        expected: usize,
        got: usize,
    },

    #[error("invalid group table: {reason} (witness {witness:?})")]
    InvalidGroup {
        reason: &'static str,
        witness: Vec<usize>,
    },

    #[error("functional is not convolution invertible")]
    NotConvInvertible,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error(
        "unsupported coalgebra shape: grouplikes and (g,g)-skew-primitives span a subspace of \
         codimension {complement_dim}{detail}"
    )]
    UnsupportedShape {
        complement_dim: usize,
        detail: String,
    },

    #[error("out of scope for {module}: {reason}")]
    OutOfScope { module: &'static str, reason: String },

    #[error("unsupported relation in quotient: {0}")]
    UnsupportedRelation(String),

    #[error("representative dependence detected in d2: {0}")]
    RepresentativeDependence(String),

    #[error("element cannot be rewritten in Hopf-kernel coordinates: {0}")]
    RewriteFailure(String),

    #[error("group order {order} exceeds the configured bound {bound}")]
    SizeBound { order: usize, bound: usize },

    #[error("axiom check failed: {0}")]
    AxiomFailure(String),

    #[error("unknown builtin '{0}'")]
    UnknownBuiltin(String),

    #[error("cannot parse rational '{0}'")]
    BadRational(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
