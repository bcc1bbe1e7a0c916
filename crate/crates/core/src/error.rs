use thiserror::Error;

/// Errors raised by the construction, counting and numerical routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An exhaustive enumeration would exceed the configured cap.
    #[error("{what}: {size} items exceeds the enumeration cap of {cap}")]
    SizeGuard {
        what: &'static str,
        size: u128,
        cap: u64,
    },

    /// Parameters outside the domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Adaptive quadrature hit its depth limit before meeting the tolerance.
    #[error("quadrature on [{a}, {b}] did not reach tolerance {tol:e} within depth {max_depth}")]
    Quadrature {
        a: f64,
        b: f64,
        tol: f64,
        max_depth: u32,
    },

    /// Malformed subset or family input.
    #[error("invalid subset: {0}")]
    InvalidSubset(String),

    /// Parse failure when reading an exported family.
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    /// Guard and domain failures, as opposed to verification failures.
    pub fn is_guard(&self) -> bool {
        matches!(self, Error::SizeGuard { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
