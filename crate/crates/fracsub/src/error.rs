use thiserror::Error;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("configuration error: {0}")]
    Config(String),
    #[error("numerical failure: {0}")]
    Numerical(fracsub_core::Error),
    #[error("{0} golden check(s) failed")]
    GoldenMismatch(usize),
    #[error("{0} invariant check(s) failed")]
    CheckFailed(usize),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl From<fracsub_core::Error> for HarnessError {
    fn from(e: fracsub_core::Error) -> Self {
        if e.is_config_error() {
            HarnessError::Config(e.to_string())
        } else {
            HarnessError::Numerical(e)
        }
    }
}

impl HarnessError {
    /// 2 for bad input, 3 for numerical failures and failed checks, 1 for IO.
    pub fn exit_code(&self) -> i32 {
        match self {
            HarnessError::Config(_) => 2,
            HarnessError::Numerical(_) | HarnessError::GoldenMismatch(_) | HarnessError::CheckFailed(_) => 3,
            HarnessError::Io(_) | HarnessError::Csv(_) => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, HarnessError>;
