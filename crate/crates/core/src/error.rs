//! Error type shared across the simulator.
//!
//! Equation functions are total over their stated domains and refuse
//! out-of-domain or nonfinite inputs instead of propagating NaN, so sweep
//! outputs stay auditable.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An input fell outside an operation's domain.
    #[error("{op}: {msg}")]
    Domain { op: &'static str, msg: String },

    /// The quantile search did not reach tolerance within the iteration cap.
    #[error(
        "beta_quantile(p={p}, a={a}, b={b}) did not converge: \
         residual {residual:e} after {iterations} iterations"
    )]
    QuantileConvergence {
        p: f64,
        a: f64,
        b: f64,
        residual: f64,
        iterations: usize,
    },

    /// A distributional statistic was requested over an all-zero vector.
    #[error("{op}: distribution is degenerate (all incomes zero)")]
    DegenerateIncomes { op: &'static str },

    /// A failure inside a grid run, with the grid point attached.
    #[error("{label} at K_A={k_a}: {source}")]
    Simulation {
        label: String,
        k_a: f64,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    pub(crate) fn domain(op: &'static str, msg: impl Into<String>) -> Self {
        Error::Domain {
            op,
            msg: msg.into(),
        }
    }

    /// Attach a grid-point context (regime name or heatmap cell) to an error.
    pub fn at_grid_point(self, label: impl Into<String>, k_a: f64) -> Self {
        Error::Simulation {
            label: label.into(),
            k_a,
            source: Box::new(self),
        }
    }
}

/// Reject nonfinite scalars up front; every public equation calls this on
/// each floating-point argument.
pub(crate) fn ensure_finite(op: &'static str, name: &str, value: f64) -> Result<()> {
    if value.is_finite() {
        Ok(())
    } else {
        Err(Error::domain(
            op,
            format!("{name} must be finite, got {value}"),
        ))
    }
}
