use num_bigint::BigInt;
use thiserror::Error;

/// Errors raised by the slope, tree, collar and bundle layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("the zero vector (0,0) is not a curve")]
    ZeroCurve,

    #[error("({0},{1}) is not primitive: coordinates share a common factor")]
    NotPrimitive(BigInt, BigInt),

    #[error("slope ({0},{1}) has odd first coordinate and bounds a two-sided surface")]
    NotOneSidedSlope(BigInt, BigInt),

    #[error("{0}:{1} is not a vertex of the Moebius band tree")]
    NotTreeVertex(BigInt, BigInt),

    #[error("{0} has no Farey parents")]
    NoParents(String),

    #[error("0:1 is the root and has no parent")]
    RootHasNoParent,

    #[error("the meridian slope (0,1) is boundary incompressible")]
    BoundaryIncompressible,

    #[error("curves have odd intersection number {0}; no one-sided surface joins them")]
    NotZ2Compatible(BigInt),

    #[error("matrix has determinant {0}, expected 1")]
    NotUnimodular(BigInt),

    #[error("vertex sequence is not a path in the tree: {0}")]
    NotAPath(String),

    #[error("invalid bounds: {0}")]
    InvalidBounds(String),

    #[error("bounds too large: {requested} exceeds the cap of {cap}")]
    BoundsTooLarge { requested: u64, cap: u64 },

    #[error("fixed-width arithmetic overflow in {0}")]
    Overflow(&'static str),

    #[error("reduced-form cycle exceeded {0} steps without closing")]
    CycleBoundExceeded(u64),
}

pub type Result<T> = std::result::Result<T, Error>;
