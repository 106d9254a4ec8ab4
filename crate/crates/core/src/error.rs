use thiserror::Error;

/// Errors produced anywhere in the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("modulus must be at least 2, got {0}")]
    InvalidModulus(u64),

    #[error("level {level} exceeds the configured maximum {max}")]
    LevelOutOfRange { level: u32, max: u32 },

    #[error("closed forms exist only for levels 0..=3, got {0}")]
    NoClosedForm(u32),

    #[error("reference oracle limit exceeded: {0} (use the fast evaluator)")]
    ReferenceLimit(String),

    #[error("infeasible size: {what} = {size} exceeds limit {limit}")]
    Infeasible { what: &'static str, size: u64, limit: u64 },

    #[error("modulus {0} is not a power of two")]
    NotPowerOfTwo(u64),

    #[error("residue {value} outside Z_{modulus}")]
    OutOfDomain { value: u64, modulus: u64 },

    #[error("moduli differ: {0} vs {1}")]
    ModulusMismatch(u64, u64),

    #[error("degenerate input: {0}")]
    Degenerate(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("io error: {0}")]
    Io(String),
}

impl Error {
    /// True for errors caused by a problem that is too large to handle at desk scale.
    pub fn is_size_error(&self) -> bool {
        matches!(self, Error::Infeasible { .. } | Error::ReferenceLimit(_))
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
