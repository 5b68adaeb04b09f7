//! Error type shared by the evaluation and verification layers.

use thiserror::Error;

/// Failure modes of the numeric routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument fell outside the function's domain.
    #[error("domain: {0}")]
    Domain(String),
    /// The hypergeometric `c` parameter is zero or a negative integer.
    #[error("series parameter c = {0} must not be zero or a negative integer")]
    InvalidC(f64),
    /// An iterative method exhausted its budget before reaching tolerance.
    #[error("{context} did not converge within budget {budget}")]
    NonConvergent {
        context: &'static str,
        budget: usize,
    },
    /// A quotient or power left the representable range.
    #[error("overflow in {0}")]
    Overflow(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
