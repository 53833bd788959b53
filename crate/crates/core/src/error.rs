use thiserror::Error;

use crate::budget::Exhausted;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("vertex {0} appears in both sides")]
    Overlap(usize),

    #[error("loop or duplicate edge at {{{0}, {1}}}")]
    BadEdge(usize, usize),

    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),

    #[error("duplicate letter `{0}`")]
    DuplicateLetter(String),

    #[error("certificate does not cover the vertex set: {0}")]
    Coverage(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("matrix is not a partial multiplication matrix under the given signs")]
    NotPmm,

    #[error("invalid chain circuit: {0}")]
    Circuit(#[from] CircuitError),

    #[error("invalid locally ordered hypergraph: {0}")]
    Loh(#[from] LohError),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("{0}")]
    Budget(#[from] Exhausted),

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

/// Violations reported by chain-circuit validation, one per defining condition.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CircuitError {
    #[error("a chain circuit needs at least 3 bags, got {0}")]
    TooFewBags(usize),
    #[error("bags do not partition the vertex set (vertex {0})")]
    NotPartition(usize),
    #[error("bag {0} is not independent")]
    BagNotIndependent(usize),
    #[error("edge {{{0}, {1}}} joins non-consecutive bags")]
    StrayEdge(usize, usize),
    #[error("bags {0} and {1} do not induce a chain graph")]
    NonChainPair(usize, usize),
    #[error("order of bag {0} is not decreasing toward the next bag and increasing toward the previous one")]
    OrderViolation(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LohError {
    #[error("element `{0}` lies in no hyperedge")]
    Isolated(String),
    #[error("hyperedges `{first}` and `{second}` disagree on the cell containing `{x}` and `{y}`")]
    Disagreement {
        first: String,
        second: String,
        x: String,
        y: String,
    },
    #[error("hyperedge `{0}` repeats an element")]
    RepeatedMember(String),
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("duplicate element `{0}`")]
    DuplicateElement(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}
