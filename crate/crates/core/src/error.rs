use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not symmetric")]
    NotSymmetric,
    #[error("parameter out of range: {0}")]
    ParameterOutOfRange(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("singular matrix")]
    Singular,
    #[error("not a Lie algebra: Jacobi identity fails")]
    NotJacobi,
    #[error("not antisymmetric: {0}")]
    NotAntisymmetric(String),
    #[error("not a 1-cocycle")]
    NotCocycle,
    #[error("co-Jacobi identity fails")]
    NotCoJacobi,
    #[error("not a coboundary")]
    NotCoboundary,
    #[error("not a Lie algebra automorphism")]
    NotAutomorphism,
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("recognition requires canonical basis: {0}")]
    NeedsCanonicalBasis(String),
    #[error("algebra is not in the canonical basis of {0}")]
    NotCanonicalBasis(String),
    #[error("invalid input field `{field}`: {reason}")]
    Parse { field: String, reason: String },
}

impl Error {
    pub(crate) fn parse(field: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::Parse {
            field: field.into(),
            reason: reason.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
