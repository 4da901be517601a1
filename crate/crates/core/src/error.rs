use std::fmt;

/// Errors raised by interval construction, configuration validation, and the
/// solvers themselves.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// The objective (or its derivative) returned a non-finite value at `x`.
    /// Sign logic is meaningless on such values, so the solve is aborted.
    NonFiniteValue { x: f64, fx: f64 },
    /// An interval with `a >= b` was supplied where strict width is required.
    InvalidInterval { a: f64, b: f64 },
    /// A closeness index was requested with zero root separation.
    DivisionDegenerate,
    /// The evaluation budget ran out; `spent` counts evaluations performed
    /// by the affected solve before it stopped.
    BudgetExceeded { spent: usize },
    /// A configuration value failed validation.
    InvalidConfig(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NonFiniteValue { x, fx } => {
                write!(
                    f,
                    "objective evaluated at {x} returned the non-finite value {fx}"
                )
            }
            Error::InvalidInterval { a, b } => {
                write!(
                    f,
                    "invalid interval [{a}, {b}]: left bound must be strictly below right"
                )
            }
            Error::DivisionDegenerate => {
                write!(f, "closeness index is undefined for zero root separation")
            }
            Error::BudgetExceeded { spent } => {
                write!(f, "evaluation budget exhausted after {spent} evaluations")
            }
            Error::InvalidConfig(msg) => write!(f, "invalid configuration: {msg}"),
        }
    }
}

impl std::error::Error for Error {}
