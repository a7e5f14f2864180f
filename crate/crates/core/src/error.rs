use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("configuration lengths differ ({0} vs {1})")]
    LengthMismatch(usize, usize),

    #[error("{what} for N = {n} exceeds the configured cap N <= {cap}")]
    CapExceeded {
        what: &'static str,
        n: usize,
        cap: usize,
    },

    #[error("matrix has entries that are not exact reals")]
    InexactEntries,

    #[error("argument outside the domain: {0}")]
    Domain(String),

    #[error("pole: {0}")]
    Pole(String),

    #[error("fractional power of a non-positive determinant ({0}); the root zeta is only defined where det(I - uQ) > 0")]
    Branch(f64),

    #[error("not an absolute automorphic form: {0}")]
    NotAbsoluteForm(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("matrix is singular")]
    Singular,

    #[error("outside the convergence region: {0}")]
    ConvergenceRegion(String),

    #[error("eigenvalue iteration did not converge on a {0}x{0} block")]
    EigenSolver(usize),

    #[error("quadrature did not converge: {0}")]
    Quadrature(String),

    #[error("capability limit: {0}")]
    Capability(String),

    #[error("integrality check failed: {value} is {residual:e} away from an integer")]
    Integrality { value: f64, residual: f64 },

    #[error("invalid input: {0}")]
    InvalidInput(String),
}
