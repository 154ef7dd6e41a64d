use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Invalid group or parameter data, e.g. `p` not dividing `r`.
    #[error("domain error: {0}")]
    Domain(String),
    /// Specializing hit a vanishing denominator.
    #[error("pole: denominator factor {factor} vanishes at the requested point")]
    Pole { factor: String },
    /// The triangular solve met a composition with the same weight as the target.
    #[error("non-generic point: weight of {nu:?} coincides with the target weight")]
    NonGeneric { nu: Vec<u32> },
    /// A σ_i denominator vanished on a vector not killed by its numerator.
    #[error("singular intertwiner: {0}")]
    SingularIntertwiner(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    /// An internal consistency check failed; this indicates a bug.
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
