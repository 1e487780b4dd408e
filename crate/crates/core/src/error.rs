use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// A part sequence is not a partition.
    #[error("invalid partition at index {index}: {reason}")]
    InvalidPartition { index: usize, reason: String },

    /// A decomposition record violates the rectangle constraints.
    #[error("invalid Durfee decomposition: {0}")]
    InvalidDecomposition(String),

    /// The input lies outside the domain of the requested map or statistic.
    #[error("domain error: {0}")]
    Domain(String),

    /// Exhaustive work was requested beyond the configured size bound.
    #[error("enumeration of partitions of {n} exceeds the bound {bound}")]
    ResourceLimit { n: usize, bound: usize },

    /// A map produced something that is not a valid partition or decomposition.
    /// Only reachable through a bug or an injected fault.
    #[error("consistency violation: {0}")]
    Consistency(String),

    #[error("configuration error: {0}")]
    Config(String),
}
