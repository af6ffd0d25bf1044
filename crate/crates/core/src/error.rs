use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("the empty rack is not supported")]
    EmptyRack,

    #[error("table entry {value} at ({x}, {y}) is out of range for size {size}")]
    EntryOutOfRange { x: usize, y: usize, value: usize, size: usize },

    #[error("right translation by {y} is not a bijection")]
    NotRightInvertible { y: usize },

    #[error("self-distributivity fails at ({x}, {y}, {z})")]
    NotSelfDistributive { x: usize, y: usize, z: usize },

    #[error("idempotency fails at {x}")]
    NotIdempotent { x: usize },

    #[error("subset is not closed under conjugation: element {x} conjugated by {y}")]
    NotConjugationClosed { x: usize, y: usize },

    #[error("group closure exceeded the cap of {cap} elements")]
    GroupCapExceeded { cap: usize },

    #[error("size limit exceeded: {0}")]
    SizeLimit(String),

    #[error("index out of range: {0}")]
    OutOfRange(String),

    #[error("operator is not invertible: {0}")]
    NotInvertible(String),

    #[error("map is not entropic")]
    NotEntropic,

    #[error("input does not satisfy the Yang-Baxter equation (first failure at basis triple {0:?})")]
    NotYangBaxter([usize; 3]),

    #[error("constant term does not match the rack operator")]
    NotADeformation,

    #[error("internal inconsistency: {0}")]
    Internal(String),
}
