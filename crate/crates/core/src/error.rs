use thiserror::Error;

/// Errors raised by the model, encoders, solvers and file readers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable x{var} out of range for {arity} variables")]
    VarOutOfRange { var: usize, arity: usize },

    #[error("variable x{0} occurs more than once")]
    DuplicateVariable(usize),

    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },

    #[error("{n} variables exceeds the enumeration cap of {cap}")]
    EnumerationCap { n: usize, cap: usize },

    #[error("expression has {nodes} nodes, bound for {arity} variables is {bound}")]
    ExprTooLarge { nodes: usize, arity: usize, bound: usize },

    #[error("unknown element label {0:?}")]
    UnknownLabel(String),

    #[error("duplicate element label {0:?}")]
    DuplicateLabel(String),

    #[error("{0}")]
    Domain(String),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("{path}: {msg}")]
    Schema { path: String, msg: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse { line, msg: msg.into() }
    }

    pub(crate) fn schema(path: impl Into<String>, msg: impl Into<String>) -> Self {
        Error::Schema { path: path.into(), msg: msg.into() }
    }
}
