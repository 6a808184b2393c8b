use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} must be at least 1")]
    NonPositive(&'static str),

    #[error("arithmetic overflow while computing {0}")]
    Overflow(&'static str),

    #[error("{p} is not a prime divisor of {n}")]
    NotPrimeDivisor { n: u128, p: u128 },

    #[error("exponent {beta} outside [1, {alpha}]")]
    ExponentOutOfRange { beta: u32, alpha: u32 },

    #[error("invalid group specification: {0}")]
    InvalidSpec(String),

    #[error("element {element} does not belong to {spec}")]
    ElementOutOfRange { spec: String, element: String },

    #[error("vertex {vertex} out of range for graph on {count} vertices")]
    VertexOutOfRange { vertex: usize, count: usize },

    #[error("{{{0}, {1}}} is not an edge")]
    NotAnEdge(usize, usize),

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("graph has no vertices")]
    EmptyGraph,

    #[error("group of order {order} exceeds the vertex cap of {cap}")]
    VertexCapExceeded { order: u64, cap: usize },

    #[error("precondition failed: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
