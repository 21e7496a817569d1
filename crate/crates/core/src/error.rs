use thiserror::Error;

/// Errors raised when an operation is called outside its domain or when a
/// computed identity fails to hold.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a distinguished double coset representative")]
    NotDoubleCosetRep(String),
    #[error("{0} does not satisfy the even-odd trivial intersection property")]
    NotSuperRep(String),
    #[error("Young subgroup containment fails: {0}")]
    Containment(String),
    #[error("endomorphism is not in the span of the basis: {0}")]
    NotInSpan(String),
    #[error("partition {0} is not restricted")]
    NotRestricted(String),
    #[error("argument outside the domain: {0}")]
    Domain(String),
    #[error("identity check failed: {0}")]
    Mismatch(String),
}

pub type Result<T> = std::result::Result<T, Error>;
