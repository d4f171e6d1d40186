use num_bigint::BigInt;

/// Errors raised by the library and surfaced by the CLI.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("vector is not primitive (gcd of entries is {0})")]
    NonPrimitiveVector(BigInt),

    #[error("vector is zero")]
    ZeroVector,

    #[error("matrix is not unimodular (determinant {0})")]
    NotUnimodular(BigInt),

    #[error("chain is not a cycle")]
    NotACycle,

    #[error("rank(phi - I) is {rank}, expected {expected}")]
    RankPrecondition { rank: usize, expected: usize },

    #[error("descriptor is not in reduced basis: first column of phi must be e1")]
    NotReducedBasis,

    #[error("chain is not in canonical form: {0}")]
    NotCanonical(String),

    #[error("det(phi - I) = {0} is nonzero")]
    ClassicalNonzero(BigInt),

    #[error("grid resolution too coarse: {0}")]
    ResolutionTooCoarse(String),

    #[error("unsupported dimension n = {n}: {reason}")]
    UnsupportedDimension { n: usize, reason: String },

    #[error("malformed input: {0}")]
    MalformedInput(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    /// Stable machine-readable name of the error variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::NonSquare { .. } => "NonSquare",
            Error::DimensionMismatch(_) => "DimensionMismatch",
            Error::NonPrimitiveVector(_) => "NonPrimitiveVector",
            Error::ZeroVector => "ZeroVector",
            Error::NotUnimodular(_) => "NotUnimodular",
            Error::NotACycle => "NotACycle",
            Error::RankPrecondition { .. } => "RankPrecondition",
            Error::NotReducedBasis => "NotReducedBasis",
            Error::NotCanonical(_) => "NotCanonical",
            Error::ClassicalNonzero(_) => "ClassicalNonzero",
            Error::ResolutionTooCoarse(_) => "ResolutionTooCoarse",
            Error::UnsupportedDimension { .. } => "UnsupportedDimension",
            Error::MalformedInput(_) => "MalformedInput",
            Error::Internal(_) => "Internal",
        }
    }

    pub(crate) fn mismatch(msg: impl Into<String>) -> Self {
        Error::DimensionMismatch(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
