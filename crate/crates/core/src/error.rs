use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("domain size mismatch: {left} vs {right}")]
    DomainMismatch { left: usize, right: usize },

    #[error("not a permutation: {0}")]
    InvalidPermutation(String),

    #[error("dart {dart} is outside the domain 0..{domain_size}")]
    NotASubset { dart: usize, domain_size: usize },

    #[error("cycle notation: {0}")]
    Parse(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("cycle type sums to {got}, expected {expected}")]
    SizeMismatch { expected: usize, got: usize },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid combinatorial map: {0}")]
    InvalidMap(String),

    #[error("vertex {vertex} out of range (graph has {vertex_count} vertices)")]
    NoSuchVertex { vertex: usize, vertex_count: usize },

    #[error("probability {0} is outside [0, 1]")]
    InvalidProbability(f64),

    #[error("capacity exceeded: {what} needs {predicted} items, cap is {cap}")]
    Capacity {
        what: String,
        predicted: String,
        cap: u64,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
