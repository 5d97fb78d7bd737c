use num_bigint::BigInt;
use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("k must be at least 1, got {0}")]
    InvalidK(u32),

    #[error("exhaustive enumeration of {steps} steps exceeds the limit of {limit}")]
    TooLarge { steps: usize, limit: usize },

    #[error("{what} out of range: {value} (allowed {min}..={max})")]
    OutOfRange {
        what: &'static str,
        value: u64,
        min: u64,
        max: u64,
    },

    #[error("missing required parameter '{0}'")]
    MissingParameter(&'static str),

    #[error(transparent)]
    Identity(#[from] IdentityError),
}

/// First coefficient at which two sides of an identity disagree.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdentityError {
    #[error("{name}: coefficient of z^{index} differs: {left} != {right}")]
    Series {
        name: String,
        index: usize,
        left: BigInt,
        right: BigInt,
    },

    #[error("{name}: coefficient of z^{z_deg} u^{u_deg} differs: {left} != {right}")]
    Bivariate {
        name: String,
        z_deg: usize,
        u_deg: usize,
        left: BigInt,
        right: BigInt,
    },
}
