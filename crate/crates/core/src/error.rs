use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("tolerance must be finite and nonnegative, got {0}")]
    InvalidTolerance(f64),

    #[error("vector has non-finite entries")]
    NonFinite,

    #[error("dimension must be positive")]
    ZeroDimension,

    #[error("{what} must be nonzero (index {index})")]
    ZeroVector { what: &'static str, index: usize },

    #[error("{0} must not be empty")]
    Empty(&'static str),

    #[error(
        "generator {generator} and dual generator {dual} are inconsistent: inner product {inner}"
    )]
    InconsistentDual {
        generator: usize,
        dual: usize,
        inner: f64,
    },

    #[error("cone is not pointed")]
    NotPointed,

    #[error("cone has empty interior")]
    EmptyInterior,

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("dual vector {index} does not lie in the positive polar cone")]
    NotInDualCone { index: usize },

    #[error(
        "dual set does not generate the positive polar cone (dual generator {index} is missing)"
    )]
    DoesNotGenerate { index: usize },

    #[error("{what} did not converge after {iterations} iterations (residual {residual:e})")]
    Convergence {
        what: &'static str,
        iterations: usize,
        residual: f64,
    },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("objective returned non-finite values at x = {x:?}")]
    NonFiniteObjective { x: Vec<f64> },

    #[error("linear program failed: {0}")]
    Lp(String),

    #[error("sampling produced no valid dual vector")]
    NoSample,
}
