use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("not a partition: {0:?}")]
    NotAPartition(Vec<u32>),

    #[error("incomparable sizes: {0} vs {1}")]
    IncomparableSizes(u32, u32),

    #[error("complement requires m >= largest part (m = {m}, largest = {largest})")]
    ComplementTooSmall { m: u32, largest: u32 },

    #[error("{0} is not an odd prime")]
    NotOddPrime(u32),

    #[error("extension degree must be at least 1")]
    ZeroDegree,

    #[error("field mismatch: GF({left}) vs GF({right})")]
    FieldMismatch { left: String, right: String },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("out of range: {0}")]
    OutOfRange(String),

    #[error("not p-nilpotent: N^{p} != 0")]
    NotPNilpotent { p: u32 },

    #[error("matrix is singular")]
    Singular,

    #[error("stage size differences are not weakly decreasing: {0:?}")]
    SizeDifferencesNotDecreasing(Vec<u32>),

    #[error("not a Littlewood-Richardson sequence")]
    NotLrSequence,

    #[error("stages are not a nested chain of partitions")]
    NotNested,

    #[error("Laurent class is not a nonnegative combination of indecomposables: {0}")]
    NotAModuleClass(String),

    #[error("zero point has no cyclic shifted subgroup")]
    ZeroPoint,

    #[error("field too small, raise e (no admissible point over GF({p}^{e}) after {attempts} attempts)")]
    FieldTooSmall { p: u32, e: u32, attempts: usize },

    #[error("invalid module: {0}")]
    InvalidModule(String),

    #[error("unknown suite '{0}'")]
    UnknownSuite(String),

    #[error("unknown module family '{0}'")]
    UnknownModule(String),

    #[error("missing parameter '{0}'")]
    MissingParameter(&'static str),

    #[error("unsupported parameter {name} = {value}: {bound}")]
    Unsupported { name: &'static str, value: u64, bound: String },

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("serialization error: {0}")]
    Serialize(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Serialize(e.to_string())
    }
}

impl From<csv::Error> for Error {
    fn from(e: csv::Error) -> Self {
        Error::Serialize(e.to_string())
    }
}
