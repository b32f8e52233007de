use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unknown graph family `{0}`")]
    UnknownFamily(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("malformed graph6 input: {0}")]
    Graph6(String),

    #[error("{what}: graph has {size} vertices, limit is {limit}")]
    SizeLimit {
        what: &'static str,
        size: usize,
        limit: usize,
    },

    #[error("infeasible linear program: {0}")]
    Infeasible(String),

    #[error("unbounded linear program")]
    Unbounded,

    #[error("evaluation failed at d = {d}: {source}")]
    Evaluator {
        d: usize,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    /// True for errors caused by a configured capability limit rather than bad input.
    pub fn is_limit(&self) -> bool {
        match self {
            Error::SizeLimit { .. } => true,
            Error::Evaluator { source, .. } => source.is_limit(),
            _ => false,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
