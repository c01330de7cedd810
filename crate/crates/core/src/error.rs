use thiserror::Error;

/// Errors produced anywhere in the verification pipeline.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph order {n} exceeds the supported maximum of {max}")]
    OrderTooLarge { n: usize, max: usize },

    #[error("invalid edge ({u}, {v}) for a graph on {n} vertices")]
    InvalidEdge { u: usize, v: usize, n: usize },

    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },

    #[error("malformed graph6 string: {0}")]
    Graph6(String),

    #[error("division by the zero rational function")]
    DivisionByZero,

    #[error("pole at r = {0}")]
    Pole(String),

    #[error("cannot parse rational function: {0}")]
    Parse(String),

    #[error("flag type mismatch")]
    TypeMismatch,

    #[error("flag of order {flag} is smaller than its type of order {ty}")]
    FlagTooSmall { flag: usize, ty: usize },

    #[error("flag embedding does not induce the type")]
    InvalidEmbedding,

    #[error("joint density needs {needed} vertices but the host flag has {available}")]
    SizeOverflow { needed: usize, available: usize },

    #[error("part {0} is empty, nothing to move")]
    EmptyPart(usize),

    #[error("part index {index} out of range for {parts} parts")]
    PartOutOfRange { index: usize, parts: usize },

    #[error("clone source and target must differ (both {0})")]
    SameVertex(usize),

    #[error("invalid search problem: {0}")]
    InvalidProblem(String),

    #[error("checkpoint error: {0}")]
    Checkpoint(String),

    #[error("fixture mismatch:\n{0}")]
    FixtureMismatch(String),
}

pub type Result<T> = std::result::Result<T, Error>;
