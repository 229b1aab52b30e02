//! Error type shared across the crate.
//!
//! The CLI maps these onto process exit codes: verification mismatches and
//! integrity failures exit 1, parameter/domain/hypothesis problems exit 2,
//! resource caps exit 3.

use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Malformed or inconsistent input (non-prime p, zero c, bad flags, ...).
    #[error("parameter error: {0}")]
    Parameter(String),

    /// Input outside the domain where the operation is meaningful
    /// (e.g. valuation predictions requested for unclassified parameters).
    #[error("domain error: {0}")]
    Domain(String),

    /// A point outside the certified convergence disk of a series.
    #[error("divergence error: {0}")]
    Divergence(String),

    /// A coefficient table failed re-substitution into its defining equation.
    #[error("integrity error: nonzero residual at degree {degree}")]
    Integrity { degree: usize },

    /// An enumeration or truncation budget was exceeded.
    #[error("resource limit exceeded: {0}")]
    Resource(String),

    /// A theorem hypothesis that the caller asked us to verify does not hold.
    #[error("hypothesis error: {0}")]
    Hypothesis(String),
}

impl Error {
    /// Process exit code for the CLI: 1 mismatch/integrity, 2 bad input, 3 resource.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Integrity { .. } => 1,
            Error::Parameter(_) | Error::Domain(_) | Error::Divergence(_) | Error::Hypothesis(_) => 2,
            Error::Resource(_) => 3,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
