use thiserror::Error;

/// Errors shared across the library.
///
/// `BudgetExceeded` is the only error that a caller is expected to recover
/// from by retrying with a larger budget; everything else signals bad input
/// or, for `InternalConsistency`, a bug worth reporting.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6Parse { offset: usize, reason: String },

    #[error("edge list parse error at line {line}: {reason}")]
    EdgeListParse { line: usize, reason: String },

    #[error("vertex {vertex} out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("graph order {order} exceeds the supported maximum of {max}")]
    CapacityExceeded { order: usize, max: usize },

    #[error("invalid family parameter: {0}")]
    FamilyParameter(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("unknown graph family descriptor {0:?}")]
    UnknownFamily(String),

    #[error("graph must be connected")]
    Disconnected,

    #[error("vertices {u} and {v} lie in different components")]
    DisconnectedPair { u: usize, v: usize },

    #[error("search budget exhausted after {nodes} nodes")]
    BudgetExceeded { nodes: u64 },

    #[error("set is not in monophonic position")]
    NotMpSet,

    #[error("operation requires a {expected} product")]
    WrongProductKind { expected: &'static str },

    #[error("first factor has a single vertex; the product equals the second factor, query it directly")]
    TrivialLexFactor,

    #[error("internal generation is limited to order {max}; supply an external graph6 corpus for larger orders")]
    GeneratorCeiling { max: usize },

    #[error("internal consistency violation: {0}")]
    InternalConsistency(String),

    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
