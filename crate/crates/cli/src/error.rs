use balpha_core::Error as CoreError;
use thiserror::Error;

/// Failures surfaced by the command-line tool, each tied to a fixed exit code.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read graph source: {0}")]
    Source(String),

    #[error("invalid alpha: {0}")]
    Alpha(String),

    #[error("{0}")]
    IsolatedVertex(CoreError),

    #[error("{0}; pass --chi to supply a colour count")]
    SolverBudget(CoreError),

    #[error("{0}")]
    SachsBudget(CoreError),

    #[error("verification failed")]
    VerifyFailed,

    #[error("{0}")]
    Usage(String),

    #[error("{0}")]
    Numeric(CoreError),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::VerifyFailed => 1,
            CliError::Source(_) | CliError::Usage(_) => 2,
            CliError::Alpha(_) => 3,
            CliError::IsolatedVertex(_) => 4,
            CliError::SolverBudget(_) => 5,
            CliError::SachsBudget(_) => 6,
            CliError::Numeric(_) => 7,
        }
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::Graph6(_)
            | CoreError::EdgeList(_)
            | CoreError::Loop(_)
            | CoreError::VertexOutOfRange { .. }
            | CoreError::InvalidFamily(_) => CliError::Source(e.to_string()),
            CoreError::AlphaOutOfRange(_) | CoreError::AlphaHalf | CoreError::AlphaZero => {
                CliError::Alpha(e.to_string())
            }
            CoreError::IsolatedVertex(_) | CoreError::NoEdges => CliError::IsolatedVertex(e),
            other => CliError::Numeric(other),
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
