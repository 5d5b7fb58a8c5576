use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("unsupported root order N = {0}: {1}")]
    UnsupportedN(u32, &'static str),
    #[error("element is not fixed by complex conjugation")]
    NotReal,
    #[error("matrix is not hermitian")]
    NotHermitian,
    #[error("idempotent lifting did not stabilize after {0} iterations")]
    LiftingDivergence(usize),
    #[error("module is not projective indecomposable: {0}")]
    NotPim(String),
    #[error("star structures do not match: {0}")]
    IncompatiblePair(String),
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("embedding index k = {k} is not coprime to N = {n}")]
    BadEmbedding { k: u32, n: u32 },
    #[error("{0}")]
    Parse(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("unknown representation {0:?}")]
    UnknownRepresentation(String),
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
