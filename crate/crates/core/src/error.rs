use thiserror::Error;

/// Errors raised anywhere in the engine.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("ring mismatch: {left} vs {right}")]
    RingMismatch { left: String, right: String },

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("too many variables: {0} (at most {max})", max = crate::polyring::MAX_VARS)]
    TooManyVariables(usize),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("zero polynomial where a nonzero one is required")]
    ZeroPolynomial,

    #[error("unit ideal where a proper ideal is required")]
    UnitIdeal,

    #[error("not homogeneous: {0}")]
    NotHomogeneous(String),

    #[error("linear system has base points; witness ideal: {witness}")]
    BasePoints { witness: String },

    #[error("sections are linearly dependent (rank {rank} < {count})")]
    DependentSections { rank: usize, count: usize },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("maximal jumping set is positive dimensional (dimension {0}); expected finitely many points")]
    JumpingSetNotFinite(i64),

    #[error("degenerate pencil after {attempts} draws: {reason}")]
    DegeneratePencil { attempts: usize, reason: String },

    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),

    #[error("fixture `{id}`: {source}")]
    Fixture { id: String, source: Box<Error> },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
