use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("column {column}: {reason}")]
    InvalidColumn { column: usize, reason: String },

    #[error("invalid matrix: {0}")]
    Invalid(String),

    #[error("invalid generator parameter: {0}")]
    InvalidParameter(String),

    #[error("unknown {kind} {name:?}; expected one of: {valid}")]
    UnknownName {
        kind: &'static str,
        name: String,
        valid: String,
    },

    #[error("size guard: {what} is {actual}, limit is {limit}")]
    SizeGuard {
        what: &'static str,
        actual: usize,
        limit: usize,
    },

    #[error("row {0} has no classification in the augmented pairing")]
    UnknownRow(usize),

    #[error("degenerate fit: {0}")]
    DegenerateFit(String),

    #[error("bound violated: measured {measured} > bound {bound} ({detail})")]
    BoundViolation {
        measured: u64,
        bound: u64,
        detail: String,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
