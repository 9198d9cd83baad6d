use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("node {0} is out of range")]
    NodeOutOfRange(usize),
    #[error("node {0} is frozen and cannot be mutated")]
    FrozenNode(usize),
    #[error("non-integral arrow count at nodes ({i}, {j}) through {k}")]
    MalformedWeight { i: usize, j: usize, k: usize },
    #[error("arrow multiplicity overflow at nodes ({0}, {1})")]
    ArrowOverflow(usize, usize),
    #[error("invalid quiver: {0}")]
    InvalidQuiver(String),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invalid folding: {0}")]
    InvalidFolding(String),
    #[error("c-vector of node {0} is not sign-coherent")]
    SignCoherence(usize),
    #[error("usage error: {0}")]
    Usage(String),
    #[error("invalid signature: {0}")]
    InvalidSignature(String),
    #[error("tail {tail} has weight {weight}; no twist exists")]
    NoTwist { tail: usize, weight: u32 },
    #[error("invalid group element: {0}")]
    InvalidElement(String),
    #[error("unknown catalog name `{0}`")]
    UnknownName(String),
    #[error("inconsistent decomposition: {0}")]
    InconsistentDecomposition(String),
    #[error("exchange complex is incomplete")]
    IncompleteComplex,
}

pub type Result<T> = std::result::Result<T, Error>;
