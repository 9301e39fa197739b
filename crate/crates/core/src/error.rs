//! Error type shared by all modules.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("self-loop ({0},{0}) is not allowed")]
    SelfLoop(usize),

    #[error("edge ({u},{v}) has an endpoint out of range for n={n}")]
    EdgeOutOfRange { u: usize, v: usize, n: usize },

    #[error("vertex {v} out of range for n={n}")]
    VertexOutOfRange { v: usize, n: usize },

    #[error("vertex counts differ: {left} vs {right}")]
    MismatchedVertexCount { left: usize, right: usize },

    #[error("expected a symmetric digraph")]
    NotSymmetric,

    #[error("invalid graph family: {0}")]
    InvalidFamily(String),

    #[error("graph would have {required} vertices, above the limit {limit}")]
    TooLarge { required: usize, limit: usize },

    #[error("enumeration exceeded the limit of {limit} (emitted {partial} so far)")]
    EnumerationOverflow { limit: usize, partial: usize },

    #[error("vertex-transitivity test limited to n <= {limit} (got n={n}); raise the limit explicitly")]
    TransitivityLimit { n: usize, limit: usize },

    #[error("invalid type vector: {0}")]
    InvalidTypeVector(String),

    #[error("malformed certificate: {0}")]
    MalformedCertificate(String),

    #[error("coloring failed verification: {0}")]
    UnverifiedColoring(String),

    #[error("cover failed verification: {0}")]
    UnverifiedCover(String),

    #[error("invalid probability distribution: {0}")]
    InvalidDistribution(String),

    #[error("invalid set pair: {0}")]
    InvalidSetPair(String),

    #[error("set system is not a cover: element {0} belongs to no set")]
    UncoveredElement(usize),

    #[error("LP certificate check failed: {0}")]
    LpCertificate(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
