use thiserror::Error;

/// Errors raised anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("conductor must be positive")]
    InvalidConductor,
    #[error("conductor mismatch: {left} vs {right}")]
    ConductorMismatch { left: String, right: String },
    #[error("division by zero")]
    DivisionByZero,
    #[error("conductor {target} is not a multiple of {source_conductor}")]
    NotDivisible { source_conductor: u32, target: u32 },
    #[error("constant `{name}` needs a conductor divisible by {needed}, got {conductor}")]
    InsufficientConductor { name: String, needed: u32, conductor: u32 },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("both forms are zero; ratio is indeterminate")]
    Indeterminate,
    #[error("order exceeds cap {0}")]
    OrderCapExceeded(usize),
    #[error("group closure exceeded cap {0}")]
    ClosureCapExceeded(usize),
    #[error("subgroup is not contained in the group")]
    NotSubgroup,
    #[error("unknown identifier `{0}`")]
    UnknownId(String),
    #[error("bad parameters for `{id}`: {reason}")]
    BadParams { id: String, reason: String },
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn mismatch(left: impl std::fmt::Debug, right: impl std::fmt::Debug) -> Self {
        Error::ConductorMismatch {
            left: format!("{left:?}"),
            right: format!("{right:?}"),
        }
    }

    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse { pos, msg: msg.into() }
    }
}
