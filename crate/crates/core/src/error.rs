use thiserror::Error;

/// Errors raised by semigroup, ideal, and classification operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator list is empty")]
    EmptyInput,
    #[error("generators must be positive, got {0}")]
    InvalidGenerator(i64),
    #[error("gcd of generators is {0}, not 1, so the complement would be infinite")]
    GcdNotOne(i64),
    #[error("{0} is not an element of the semigroup")]
    NotAnElement(i64),
    #[error("ideals have different parent semigroups")]
    ParentMismatch,
    #[error("ideal is not contained in its parent semigroup")]
    NotIntegral,
    #[error("ideal must be a proper subset of the semigroup")]
    NotProper,
    #[error("second ideal is not contained in the first")]
    NotNested,
    #[error("the semigroup is all of the naturals, so the ring is regular")]
    Regular,
    #[error("operation requires exactly three minimal generators, found {0}")]
    NotEdim3(usize),
    #[error("the semigroup is symmetric, so the two-row presentation does not apply")]
    Symmetric,
    #[error("minimal relation of {multiple} admits {count} positive decompositions")]
    AmbiguousPresentation { multiple: i64, count: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
