use thiserror::Error;

/// Errors shared by all modules of the crate.
///
/// Indices and entries in messages use 1-based row/column positions, matching
/// the usual display convention for degree matrices.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("shape error: {0}")]
    Shape(String),

    #[error("monotone convention violated: {0}")]
    Convention(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("numerator is not divisible by (1-z)^2: {0}")]
    NotDivisible(String),

    #[error("ambiguous inversion: {0}")]
    AmbiguousInversion(String),

    #[error("invalid h-vector: {0}")]
    InvalidHVector(String),

    #[error("degree too small: {0}")]
    DegreeTooSmall(String),

    #[error("bad cancellation: {0}")]
    BadCancellation(String),

    #[error("socle obstruction: {0}")]
    SocleObstruction(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("not realizable: {0}")]
    NotRealizable(String),

    #[error("no union pivot: {0}")]
    NoUnionPivot(String),

    #[error("replay error at step {step}: {source}")]
    Replay {
        step: usize,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    /// Stable machine-readable tag, used by the CLI when reporting domain
    /// errors as structured JSON.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Shape(_) => "ShapeError",
            Error::Convention(_) => "ConventionError",
            Error::Precondition(_) => "PreconditionError",
            Error::NotDivisible(_) => "NotDivisible",
            Error::AmbiguousInversion(_) => "AmbiguousInversion",
            Error::InvalidHVector(_) => "InvalidHVector",
            Error::DegreeTooSmall(_) => "DegreeTooSmall",
            Error::BadCancellation(_) => "BadCancellation",
            Error::SocleObstruction(_) => "SocleObstruction",
            Error::InvalidInput(_) => "InvalidInput",
            Error::NotRealizable(_) => "NotRealizable",
            Error::NoUnionPivot(_) => "NoUnionPivot",
            Error::Replay { .. } => "ReplayError",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
