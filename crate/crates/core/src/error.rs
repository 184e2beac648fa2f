use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Every failure the library can report.
///
/// Domain errors (`NotIsolated`, `NoCompactFace`, `NotRationalHomologySphere`)
/// describe inputs outside the supported class; `Internal` signals that one of
/// the built-in cross-checks disagreed, which is always a bug.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("input vector is not primitive")]
    NonPrimitiveInput,
    #[error("input vectors are equal")]
    EqualVectors,
    #[error("input vectors are parallel")]
    ParallelVectors,
    #[error("numerator and denominator are not coprime")]
    NonCoprime,
    #[error("argument out of range: {0}")]
    OutOfRange(String),
    #[error("polygon has an interior lattice point")]
    NotEmpty,
    #[error("polygon is degenerate (affine hull has dimension < 2)")]
    Degenerate,
    #[error("point is not a vertex of the polygon")]
    NotAVertex,
    #[error("boundary condition set on an edge whose dilated support level is not integral")]
    InadmissibleBoundary,
    #[error("invalid support: {0}")]
    InvalidSupport(String),
    #[error("support does not define an isolated singularity")]
    NotIsolated,
    #[error("Newton diagram has no compact two dimensional face")]
    NoCompactFace,
    #[error("link is not a rational homology sphere")]
    NotRationalHomologySphere,
    #[error("intersection matrix is not negative definite")]
    NotNegativeDefinite,
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph is not a tree")]
    NotTree,
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("sequence kind mismatch: {0}")]
    KindMismatch(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

impl Error {
    /// Stable variant name, used in machine-readable reports.
    pub fn name(&self) -> &'static str {
        match self {
            Error::NonPrimitiveInput => "NonPrimitiveInput",
            Error::EqualVectors => "EqualVectors",
            Error::ParallelVectors => "ParallelVectors",
            Error::NonCoprime => "NonCoprime",
            Error::OutOfRange(_) => "OutOfRange",
            Error::NotEmpty => "NotEmpty",
            Error::Degenerate => "Degenerate",
            Error::NotAVertex => "NotAVertex",
            Error::InadmissibleBoundary => "InadmissibleBoundary",
            Error::InvalidSupport(_) => "InvalidSupport",
            Error::NotIsolated => "NotIsolated",
            Error::NoCompactFace => "NoCompactFace",
            Error::NotRationalHomologySphere => "NotRationalHomologySphere",
            Error::NotNegativeDefinite => "NotNegativeDefinite",
            Error::Disconnected => "Disconnected",
            Error::NotTree => "NotTree",
            Error::InvalidGraph(_) => "InvalidGraph",
            Error::KindMismatch(_) => "KindMismatch",
            Error::Precondition(_) => "Precondition",
            Error::Internal(_) => "Internal",
        }
    }
}

macro_rules! ensure_internal {
    ($cond:expr, $($arg:tt)+) => {
        if !$cond {
            return Err($crate::error::Error::Internal(format!($($arg)+)));
        }
    };
}
pub(crate) use ensure_internal;
