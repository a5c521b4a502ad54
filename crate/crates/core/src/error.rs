use thiserror::Error;

/// Errors shared across the graph, word, extension and embedding layers.
#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("duplicate vertex label `{0}`")]
    DuplicateVertex(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("vertex set is not anticonnected: {0}")]
    NotAnticonnected(String),
    #[error("identity word has no pure factor decomposition")]
    IdentityWord,
    #[error("words are defined over different graphs")]
    GraphMismatch,
    #[error("empty input: {0}")]
    EmptyInput(String),
    #[error("input graph is not a forest")]
    NotAForest,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("certificate is invalid: {0}")]
    InvalidCertificate(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
