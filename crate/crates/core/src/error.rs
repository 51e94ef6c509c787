use thiserror::Error;

/// Errors raised by the combinatorial core.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot compose: codomain [{left}] does not match domain [{right}]")]
    MismatchedObjects { left: usize, right: usize },

    #[error("index {index} out of range 0..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("map values must be nonempty")]
    EmptyMap,

    #[error("value {value} at position {position} exceeds codomain bound {bound}")]
    ValueOutOfRange {
        position: usize,
        value: usize,
        bound: usize,
    },

    #[error("map is not monotone at position {position}")]
    NotMonotone { position: usize },

    #[error("interval objects need at least two elements, got {{{m}}}")]
    IntervalTooSmall { m: usize },

    #[error("interval map does not preserve endpoints")]
    NotEndpointPreserving,

    #[error("cube vertex has length {got}, expected {expected}")]
    CubeLength { expected: usize, got: usize },

    #[error("tuple components have unequal lengths")]
    RaggedTuple,

    #[error("malformed oracle: {0}")]
    MalformedOracle(String),

    #[error("cannot parse word: {0}")]
    WordParse(String),

    #[error("boundary of boundary is nonzero in degree {degree}")]
    BoundaryNotNilpotent { degree: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
