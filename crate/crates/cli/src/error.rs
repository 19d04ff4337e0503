use thiserror::Error;

use fatforest_core::closed::ClosedFormError;
use fatforest_core::complex::ComplexError;
use fatforest_core::homology::OracleError;
use fatforest_core::identities::IdentityError;

/// Exit statuses. `0` is success, `1` a disagreement between methods.
pub mod exit {
    pub const OK: i32 = 0;
    pub const DISAGREEMENT: i32 = 1;
    pub const USAGE: i32 = 2;
    pub const INVALID_INPUT: i32 = 3;
    pub const GUARD: i32 = 4;
    pub const IO: i32 = 5;
    pub const COMPUTATION: i32 = 6;
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("invalid input: {0}")]
    Input(String),
    #[error("{0}; raise --guard or FATFOREST_ORACLE_GUARD to allow it")]
    Guard(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{0}")]
    Computation(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => exit::USAGE,
            CliError::Input(_) => exit::INVALID_INPUT,
            CliError::Guard(_) => exit::GUARD,
            CliError::Io { .. } => exit::IO,
            CliError::Computation(_) => exit::COMPUTATION,
        }
    }
}

impl From<ComplexError> for CliError {
    fn from(e: ComplexError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<OracleError> for CliError {
    fn from(e: OracleError) -> Self {
        match e {
            OracleError::GuardExceeded { .. } => CliError::Guard(e.to_string()),
            OracleError::BadField(m) => CliError::Input(m),
        }
    }
}

impl From<ClosedFormError> for CliError {
    fn from(e: ClosedFormError) -> Self {
        match e {
            ClosedFormError::Sizes(inner) => inner.into(),
            other => CliError::Computation(other.to_string()),
        }
    }
}

impl From<IdentityError> for CliError {
    fn from(e: IdentityError) -> Self {
        match e {
            IdentityError::Sizes(inner) => inner.into(),
            other => CliError::Computation(other.to_string()),
        }
    }
}
