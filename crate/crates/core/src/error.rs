use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("expected {expected} points, got {found}")]
    WrongCount { expected: usize, found: usize },

    #[error("degenerate input: {0}")]
    Degenerate(String),

    #[error("zero vector where a nonzero vector is required")]
    ZeroVector,

    #[error("invalid unit ball: {0}")]
    InvalidBall(String),

    #[error("operation requires dimension {required}, got {found}")]
    UnsupportedDimension { required: usize, found: usize },

    #[error("point is not strictly interior to the ball")]
    NotInterior,

    #[error("point is not on the unit sphere (gauge {0})")]
    NotOnSphere(String),

    #[error("point is not a circumcenter of the simplex")]
    NotCircumcenter,

    #[error("hyperplanes are parallel")]
    Parallel,

    #[error("index {index} out of range 0..{len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("norm is not Radon")]
    NotRadon,

    #[error("resource limit exceeded: {what} ({found} > {limit})")]
    ResourceLimit { what: &'static str, found: usize, limit: usize },

    #[error("root finding failed: {0}")]
    RootFinding(String),

    #[error("mixed arithmetic modes: {0}")]
    MixedModes(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invariant violated: {0}")]
    Invariant(String),
}
