use thiserror::Error;

/// Process exit codes.
pub const EXIT_INSIDE: i32 = 0;
pub const EXIT_OUTSIDE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NUMERIC: i32 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Outside(String),
    #[error("numerical failure: {0}")]
    Numeric(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Outside(_) => EXIT_OUTSIDE,
            CliError::Numeric(_) | CliError::Io(_) => EXIT_NUMERIC,
        }
    }
}

impl From<karpelevich::Error> for CliError {
    fn from(e: karpelevich::Error) -> Self {
        use karpelevich::Error as E;
        match e {
            E::OutsideUnitDisc(_) | E::NotInRegion { .. } | E::NotFoundBelowCap { .. } => {
                CliError::Outside(e.to_string())
            }
            E::NonConvergence { .. } | E::NoSignChange { .. } => CliError::Numeric(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Numeric(e.to_string())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Numeric(e.to_string())
    }
}
