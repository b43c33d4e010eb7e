use thiserror::Error;

/// Errors produced by realization construction and exact-geometry queries.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    /// The zero vector does not determine a ray on the sphere.
    #[error("zero vector does not determine a point on the sphere")]
    ZeroVector,
    /// Two vectors from different ambient spaces were combined.
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    /// A coordinate exceeded the supported integer range.
    #[error("coordinate overflow during exact arithmetic")]
    Overflow,
    /// The requested family/rank combination is not constructible.
    #[error("unsupported realization: {0}")]
    UnsupportedRealization(String),
    /// A diagram component is not of type A, D, or E.
    #[error("diagram component outside the A/D/E catalogue: {0}")]
    UnsupportedDiagram(String),
    /// A vertex-type label is out of range for the realization.
    #[error("invalid type label {label} for rank {rank}")]
    InvalidType { label: usize, rank: usize },
    /// Antipodal points admit no unique geodesic or direction.
    #[error("antipodal points admit no unique geodesic")]
    AntipodalPoints,
    /// Coincident endpoints do not span a segment.
    #[error("coincident points do not span a segment")]
    CoincidentPoints,
    /// A midpoint ray with integer coordinates does not exist for this pair.
    #[error("midpoint is not a rational ray: norm ratio {0}/{1} is not a ratio of perfect squares")]
    IrrationalMidpoint(i128, i128),
    /// The half-table identity requires the target type to be fixed under the
    /// antipodal type involution.
    #[error("target type {0} is not fixed by the opposition involution")]
    TargetNotSelfOpposite(usize),
    /// A point violates the defining (in)equalities of the queried region.
    #[error("point is outside the queried region: {0}")]
    OutsideRegion(String),
    /// Free-form invalid argument.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    /// A string could not be parsed into the requested value.
    #[error("parse error: {0}")]
    Parse(String),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
