use thiserror::Error;

/// Process exit codes.
pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFICATION: i32 = 1;
pub const EXIT_INVALID_INPUT: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] weyl_core::Error),

    #[error("{0}")]
    Usage(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("serialization error: {0}")]
    Serialize(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        use weyl_core::Error as E;
        match self {
            CliError::Usage(_) => EXIT_INVALID_INPUT,
            CliError::Core(E::InvalidType { .. } | E::InvalidCartan(_)) => EXIT_INVALID_INPUT,
            CliError::Core(E::SizeLimit { .. } | E::NonFinite { .. }) => EXIT_RESOURCE,
            CliError::Core(_) | CliError::Io(_) | CliError::Serialize(_) => EXIT_VERIFICATION,
        }
    }
}
