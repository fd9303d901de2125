use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("domain error: {0}")]
    Domain(String),
    #[error("search budget of {0} nodes exceeded")]
    BudgetExceeded(u64),
    #[error("vertex cap of {0} exceeded")]
    CapExceeded(usize),
    #[error("graph is not a partial 2-tree")]
    NotPartial2Tree,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("map is not an injective homomorphism into the projective cube")]
    NotEmbedding,
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse { line, msg: msg.into() }
    }
}
