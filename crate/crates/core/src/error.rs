use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Every failure the library reports.
///
/// Variants fall into two families: validation errors (bad parameters,
/// malformed input, unmet preconditions) and numerical failures (accuracy
/// not attained, divergence). The CLI maps them to exit codes 1 and 2 via
/// [`Error::is_numerical`].
#[derive(Debug, Error)]
pub enum Error {
    #[error("parameter error: {0}")]
    Parameter(String),

    #[error("gamma function pole at {0}")]
    Pole(f64),

    #[error("accuracy not attained: {0}")]
    Accuracy(String),

    #[error("series did not converge: {0}")]
    Convergence(String),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("kernel is singular at t = {0}")]
    Singularity(f64),

    #[error("kernel is not integrable at the origin: {0}")]
    Divergence(String),

    #[error("ill-posed first-kind equation: {0}")]
    IllPosed(String),

    #[error("implicit step rejected at step {step}: denominator {denominator}")]
    StepRejection { step: usize, denominator: f64 },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("query {query} beyond the enumerated spectrum (horizon {horizon})")]
    Horizon { query: f64, horizon: f64 },

    #[error("degenerate fit: {0}")]
    DegenerateFit(String),

    #[error("unknown operator `{0}`")]
    UnknownOperator(String),

    #[error("exponent error: {0}")]
    Exponent(String),

    #[error("supremum is unbounded: {0}")]
    UnboundedSup(String),

    #[error("window error: {0}")]
    Window(String),

    #[error("index mismatch: {0}")]
    IndexMismatch(String),

    #[error("grid mismatch: {0}")]
    GridMismatch(String),

    #[error("aliasing: {0}")]
    Aliasing(String),

    #[error("iteration diverged: {0}")]
    Diverged(String),

    #[error("supercritical exponent: {0}")]
    Supercritical(String),

    #[error("empty interval: {0}")]
    EmptyInterval(String),

    #[error("{path}:{line}: {message}")]
    Parse {
        path: String,
        line: usize,
        message: String,
    },

    #[error("unknown key `{key}` at line {line}")]
    UnknownKey { key: String, line: usize },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Numerical failures (as opposed to invalid input).
    pub fn is_numerical(&self) -> bool {
        matches!(
            self,
            Error::Accuracy(_)
                | Error::Convergence(_)
                | Error::IllPosed(_)
                | Error::StepRejection { .. }
                | Error::Diverged(_)
                | Error::Window(_)
                | Error::DegenerateFit(_)
                | Error::UnboundedSup(_)
        )
    }
}

pub(crate) fn param(msg: impl Into<String>) -> Error {
    Error::Parameter(msg.into())
}
