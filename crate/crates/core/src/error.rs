use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed or inconsistent input data.
    #[error("invalid input: {0}")]
    Input(String),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    /// The degree does not lie in the group generated by the semigroup.
    #[error("degree {0} is not in the group generated by the semigroup")]
    NotInGroup(String),

    /// A semantic precondition of an operation is not met.
    #[error("precondition failed: {0}")]
    Precondition(String),

    /// A vector is too large for the membership oracle in use.
    #[error("value out of range for membership oracle: {0}")]
    OutOfRange(String),

    /// A property that must hold by theory was violated.
    #[error("internal assertion failed: {0}")]
    Assertion(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn input<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Input(msg.into()))
}

pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected != found {
        return Err(Error::DimensionMismatch { expected, found });
    }
    Ok(())
}
