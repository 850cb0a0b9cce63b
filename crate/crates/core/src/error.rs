use thiserror::Error;

/// Errors raised by the partition toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument is outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Series inversion was asked of a series with zero constant term.
    #[error("series with zero constant term is not invertible")]
    NotInvertible,

    /// A high-precision evaluation lost more accuracy than its contract allows.
    #[error("precision error: {0}")]
    Precision(String),

    /// A truncated series did not settle to an unambiguous value.
    #[error("convergence error: {0}")]
    Convergence(String),

    /// Quasipolynomial verify-and-shift never stabilised.
    #[error("quasipolynomial fit for k = {k} did not stabilise after {shifts} window shifts")]
    Interpolation { k: u64, shifts: u32 },

    /// A method declined a workload above its configured ceiling.
    #[error("method `{method}` refuses n = {n} above ceiling {ceiling}: {reason}")]
    RefusedScale {
        method: &'static str,
        n: u64,
        ceiling: u64,
        reason: String,
    },

    /// The method exists but is not defined for these arguments.
    #[error("unsupported: {0}")]
    Unsupported(String),

    /// No strategy of this name is registered.
    #[error("unknown method `{0}`")]
    UnknownMethod(String),
}

pub type Result<T> = std::result::Result<T, Error>;
