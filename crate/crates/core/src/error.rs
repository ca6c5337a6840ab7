use thiserror::Error;

/// Errors produced by coefficient, oracle and evaluation routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// `(p, q)` does not name a coefficient: `p + q` is even or `q >= p`.
    #[error("no coefficient a({p},{q}): index must satisfy q < p with p + q odd")]
    Parity { p: u32, q: u32 },

    #[error("domain error: {0}")]
    Domain(String),

    /// The evaluation point is within `guard` of a singularity.
    #[error("x = {x} is too close to a pole (distance {distance:e} <= guard {guard:e})")]
    Pole { x: f64, distance: f64, guard: f64 },

    #[error("malformed coefficient table: {0}")]
    MalformedTable(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
