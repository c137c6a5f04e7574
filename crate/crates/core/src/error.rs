use thiserror::Error;

/// Errors produced by the workbench library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty graph")]
    EmptyGraph,

    #[error("oracle size limit: {n} vertices exceeds {limit}")]
    OracleSizeLimit { n: usize, limit: usize },

    #[error("enumeration size limit: m = {m} exceeds {limit}")]
    EnumerationLimit { m: usize, limit: usize },

    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("color {color} out of range for {k} colors")]
    ColorOutOfRange { color: usize, k: usize },

    #[error("invalid edge {{{u}, {v}}}: {reason}")]
    InvalidEdge { u: usize, v: usize, reason: &'static str },

    #[error("duplicate bitstring at indices {first} and {second}")]
    DuplicateString { first: usize, second: usize },

    #[error("use n even at desk scale (got n = {0})")]
    OddVertexCount(usize),

    #[error("not subadditive: {0}")]
    NotSubadditive(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("malformed model: {0}")]
    MalformedModel(String),

    #[error("instance too large: about {estimate} clauses (limit {limit})")]
    CnfTooLarge { estimate: u128, limit: u128 },

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}
