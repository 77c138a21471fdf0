use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("training category {0} is empty")]
    EmptyCategory(u8),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("non-finite coordinate in feature vector")]
    NonFinite,

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("reject threshold must be non-negative, got {0}")]
    NegativeThreshold(f64),

    #[error("filter precondition failed: {0} original training point(s) misclassified")]
    FilterPreconditionFailed(usize),

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("empty input")]
    EmptyInput,

    #[error("kernel matrix is singular")]
    SingularKernel,

    #[error("support vectors must include both categories")]
    MixedCategoriesMissing,

    #[error("unknown dataset `{0}`")]
    UnknownDataset(String),

    #[error("malformed row: {0}")]
    MalformedRow(String),

    #[error("invalid split: {0}")]
    InvalidSplit(String),

    #[error("split fraction {fraction} of {count} points is not an integer")]
    NonIntegralSplit { fraction: f64, count: usize },

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("sink failure: {0}")]
    Sink(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }
}
