//! Error type shared by the whole crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: u64, degree: usize },
    #[error("point {0} appears more than once")]
    RepeatedPoint(u64),
    #[error("image sequence is not a bijection")]
    NotABijection,
    #[error("degree must be positive")]
    ZeroDegree,
    #[error("generator list must be non-empty")]
    EmptyGenerators,
    #[error("group order exceeds cap {cap}")]
    OrderCapExceeded { cap: u64 },
    #[error("conjugacy class size exceeds cap {cap}")]
    ClassCapExceeded { cap: u64 },
    #[error("element enumeration refused: group order {order} exceeds cap {cap}")]
    ElementsCapExceeded { order: u64, cap: u64 },
    #[error("permutation is not a member of the group")]
    NotAMember,
    #[error("subgroup is not normal in the parent group")]
    NotNormal,
    #[error("quotient degree {index} exceeds cap {cap}")]
    QuotientDegreeCapExceeded { index: u64, cap: u64 },
    #[error("normal-subgroup scan refused: group order {order} exceeds cap {cap}")]
    NormalScanCapExceeded { order: u64, cap: u64 },
    #[error("element is not real in the group")]
    NotReal,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("expected order {expected} but construction produced {actual}")]
    ExpectedOrderMismatch { expected: u64, actual: u64 },
    #[error("closed-form count does not divide exactly (formula misuse)")]
    NonIntegerDivision,
    #[error("arithmetic overflow in exact integer computation")]
    Overflow,
    #[error("malformed group file: {0}")]
    MalformedFile(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
