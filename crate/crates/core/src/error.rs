use std::fmt;

/// Errors produced by contract construction, pricers and the optimizer.
#[derive(Debug, Clone, PartialEq)]
pub enum SpreadError {
    /// Input outside the mathematical domain of the operation.
    Domain(String),
    /// Invalid configuration (path counts, step sizes, table specs).
    Config(String),
    /// A limit case where the requested transform or parameterization
    /// collapses (zero variance, zero spread volatility).
    Degenerate(String),
    /// The lower-bound optimizer did not reach the required first-order
    /// residual; carries the best point found.
    Convergence {
        message: String,
        theta: f64,
        d: f64,
        value: f64,
        residual: f64,
    },
    /// A quadrature tolerance could not be met within the node budget.
    Accuracy(String),
}

impl fmt::Display for SpreadError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpreadError::Domain(m) => write!(f, "domain error: {m}"),
            SpreadError::Config(m) => write!(f, "config error: {m}"),
            SpreadError::Degenerate(m) => write!(f, "degenerate case: {m}"),
            SpreadError::Convergence {
                message,
                theta,
                d,
                value,
                residual,
            } => write!(
                f,
                "convergence failure: {message} (best theta={theta}, d={d}, value={value}, residual={residual:e})"
            ),
            SpreadError::Accuracy(m) => write!(f, "accuracy error: {m}"),
        }
    }
}

impl std::error::Error for SpreadError {}

pub type Result<T> = std::result::Result<T, SpreadError>;
