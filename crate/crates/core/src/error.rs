use thiserror::Error;

/// Errors raised by the exact and numeric kernels.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Parameter triple is unusable, e.g. `ln a + ln b = 0`.
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    /// A request exceeded a documented size guard.
    #[error("size guard exceeded: {0}")]
    SizeGuard(String),

    /// Formal power series division could not be carried out.
    #[error("series division: {0}")]
    Division(String),

    /// Composition with an inner series that does not vanish at the origin.
    #[error("series composition requires inner(0) = 0")]
    Composition,

    /// Input outside the domain of a numeric routine.
    #[error("domain error: {0}")]
    Domain(String),

    /// A series did not meet its termination rule within the term budget.
    #[error("no convergence after {terms} terms (last error estimate {estimate:e})")]
    NonConvergence { terms: usize, estimate: f64 },

    /// Quadrature could not reach the requested tolerance.
    #[error("tolerance not met: achieved {achieved:e}, wanted {wanted:e}")]
    ToleranceNotMet { achieved: f64, wanted: f64 },

    /// An invariant that should hold by construction was violated.
    #[error("internal error: {0}")]
    Internal(String),

    /// Text input could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
