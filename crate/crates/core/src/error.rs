use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("root is not bracketed: f({lo}) and f({hi}) have the same sign")]
    NotBracketed { lo: f64, hi: f64 },

    #[error("singular pivot in tridiagonal solve at row {row}")]
    SingularPivot { row: usize },

    #[error("non-finite value encountered in {0}")]
    NonFinite(&'static str),

    #[error("point (t={t}, x={x}) is outside the tabulated surface")]
    OutOfRange { t: f64, x: f64 },

    #[error("missing previous-order result: order {0} required")]
    MissingOrder(usize),

    #[error("Picard refresh did not converge within {max_iter} iterations (residual {residual:e})")]
    NonConvergence { max_iter: usize, residual: f64 },

    #[error("ill-conditioned regression (condition estimate {0:e})")]
    IllConditioned(f64),

    #[error("{0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
