use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("index {index} out of range 1..={len}")]
    IndexOutOfRange { index: usize, len: usize },

    /// A write tried to store a value outside `1..=n`.
    #[error("value {value} out of range 1..={len}")]
    ValueOutOfRange { value: usize, len: usize },

    #[error("array length must be positive")]
    EmptyArray,

    #[error("length {len} does not fit the cell type (max {max})")]
    LengthTooLarge { len: usize, max: usize },

    #[error("not a permutation")]
    NotAPermutation,

    #[error("invalid segment code ({segment_size}, {cycle_length}) for k = {k}")]
    InvalidCode {
        segment_size: usize,
        cycle_length: usize,
        k: usize,
    },

    #[error("corrupt segment representation: {0}")]
    CorruptRepresentation(String),

    #[error("contract violation: {0}")]
    ContractViolation(String),

    #[error("invalid profile: {0}")]
    InvalidProfile(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("{path}: {message}")]
    Io { path: String, message: String },
}
