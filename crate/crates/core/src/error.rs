use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("empty point set")]
    Empty,

    #[error("invalid manifold: {0}")]
    InvalidManifold(String),

    #[error("subsets live in different manifolds")]
    ManifoldMismatch,

    #[error("unsupported manifold for {0}")]
    UnsupportedManifold(&'static str),

    #[error("invalid metric: {0}")]
    InvalidMetric(String),

    #[error("invalid complex: {0}")]
    InvalidComplex(String),

    #[error("lemma scale bound violated: 2r = {doubled} must be below {limit}")]
    ScaleBoundViolated { doubled: f64, limit: f64 },

    #[error("distortion exceeds scale: dis(C) = {distortion} >= r = {scale}")]
    DistortionExceedsScale { distortion: f64, scale: f64 },

    #[error("hausdorff distance too large for scale: 2 d_H = {doubled} >= r = {scale}")]
    HausdorffExceedsScale { doubled: f64, scale: f64 },

    #[error("vertex index {index} out of range for complex with {count} vertices")]
    VertexOutOfRange { index: usize, count: usize },

    #[error("vertex map is not simplicial")]
    NotSimplicial,

    #[error("mismatched complexes: {0}")]
    MismatchedComplexes(&'static str),

    #[error("insufficient skeleton: homology in degree {requested} needs simplices up to dimension {needed}, complex built to {built}")]
    InsufficientSkeleton {
        requested: usize,
        needed: usize,
        built: usize,
    },

    #[error("invalid correspondence: {0}")]
    InvalidCorrespondence(String),

    #[error("requires closed manifold (finite convexity radius)")]
    RequiresClosedManifold,

    #[error("missing filling radius")]
    MissingFillRad,

    #[error("argument out of domain: {0}")]
    OutOfDomain(String),
}
