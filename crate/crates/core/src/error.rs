use thiserror::Error;

/// Errors raised by the solvers, the oracle and the command-line front-end.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("leading coefficient is zero")]
    ZeroLeadingCoefficient,

    #[error("unsupported degree {0}; expected 1..=4")]
    UnsupportedDegree(usize),

    #[error("polynomial has non-real coefficients")]
    NotRealCoefficients,

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("domain error: {0}")]
    DomainError(String),

    #[error("oracle did not converge after {iterations} iterations (last movement {movement:e})")]
    NoConvergence { iterations: usize, movement: f64 },

    #[error("parse error: {0}")]
    ParseError(String),

    #[error("{0}")]
    MethodPrecondition(String),

    #[error("file not found: {0}")]
    FileNotFound(String),
}

impl Error {
    /// Short machine-readable name used in reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::ZeroLeadingCoefficient => "ZeroLeadingCoefficient",
            Error::UnsupportedDegree(_) => "UnsupportedDegree",
            Error::NotRealCoefficients => "NotRealCoefficients",
            Error::PreconditionViolated(_) => "PreconditionViolated",
            Error::DomainError(_) => "DomainError",
            Error::NoConvergence { .. } => "NoConvergence",
            Error::ParseError(_) => "ParseError",
            Error::MethodPrecondition(_) => "MethodPreconditionError",
            Error::FileNotFound(_) => "FileNotFound",
        }
    }

    /// Process exit status for this error: 2 parse/usage, 3 method
    /// precondition, 4 numerical failure.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::ZeroLeadingCoefficient
            | Error::UnsupportedDegree(_)
            | Error::ParseError(_)
            | Error::FileNotFound(_) => 2,
            Error::NotRealCoefficients
            | Error::PreconditionViolated(_)
            | Error::MethodPrecondition(_) => 3,
            Error::DomainError(_) | Error::NoConvergence { .. } => 4,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
