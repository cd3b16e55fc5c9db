use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: not a single decimal number")]
    NonNumericLine { line: usize },

    #[error("line {line}: ordinate does not exceed its predecessor")]
    NonMonotonic { line: usize },

    #[error("line {line}: ordinate {value} is not above 14 (first zero ordinate)")]
    OrdinateTooSmall { line: usize, value: f64 },

    #[error("no ordinates in input")]
    EmptyInput,

    #[error("{what} = {value} is outside the covered range (limit {limit})")]
    OutOfRange {
        what: &'static str,
        value: f64,
        limit: f64,
    },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("zeta has a pole at s = 1")]
    PoleAtOne,

    #[error("1 - 2^(1-s) vanishes at s = {re} + {im}i")]
    DegenerateDenominator { re: f64, im: f64 },

    #[error("sieve bound {requested} exceeds the capacity {capacity}")]
    CapacityExceeded { requested: u64, capacity: u64 },

    #[error("h(z) has a removable singularity at z = 1; use h_near_one")]
    RemovableAtOne,

    #[error("domain violation: {0}")]
    DomainViolation(String),

    #[error("|zeta'(1/2 + i gamma)| = {modulus:e} at zero #{index} is below the simplicity guard")]
    DerivativeTooSmall { index: usize, modulus: f64 },

    #[error("need zeros up to {needed}, table ends at {available}")]
    InsufficientZeros { needed: f64, available: f64 },

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("cache file {path}: {reason}")]
    Cache { path: PathBuf, reason: String },
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
