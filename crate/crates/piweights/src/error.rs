use thiserror::Error;

/// Errors surfaced by the workbench.
///
/// `TheoryViolation` deserves a comment: the library verifies theorems whose
/// proofs are external to it, so a situation the theory forbids (a partial
/// character with two non-conjugate vertices, say) is reported as this
/// variant.  It always indicates a bug in the implementation, never a
/// counterexample, and callers are expected to treat it as fatal.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    Input(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("resource limit exceeded: {0}")]
    Resource(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("theory violation (implementation bug): {0}")]
    TheoryViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
    pub fn resource(msg: impl Into<String>) -> Self {
        Error::Resource(msg.into())
    }
    pub fn unsupported(msg: impl Into<String>) -> Self {
        Error::Unsupported(msg.into())
    }
    pub fn theory(msg: impl Into<String>) -> Self {
        Error::TheoryViolation(msg.into())
    }
}
