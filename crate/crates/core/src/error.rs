use thiserror::Error;

/// Errors produced by the library.
///
/// The variants are grouped by how the command line maps them onto exit
/// codes: input problems, unmet hypotheses, and internal assertion failures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("field mismatch: {0}")]
    FieldMismatch(String),

    #[error("{0} is not a prime below 2^32")]
    NotPrime(u64),

    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("not m-primary within N_max = {max_n}{detail}")]
    NotPrimary { max_n: u32, detail: String },

    #[error("unit ideal: a generator has a nonzero constant term")]
    UnitIdeal,

    #[error("characteristic 2: this operation needs 2 to be invertible")]
    CharacteristicTwo,

    #[error("hypothesis not satisfied: {0}")]
    Hypothesis(String),

    #[error("input exceeds enumeration bounds: {0}")]
    OverBound(String),

    #[error("internal assertion failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
