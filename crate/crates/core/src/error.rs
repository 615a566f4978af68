use thiserror::Error;

/// Errors raised across the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("Cartan matrix is not square or is empty")]
    NotSquare,
    #[error("bad Cartan matrix entry at ({row}, {col}): diagonal must be 2 and off-diagonal entries must be <= 0")]
    BadDiagonal { row: usize, col: usize },
    #[error("Cartan matrix is not symmetrizable")]
    NotSymmetrizable,
    #[error("symmetrizer entry d_{index} = {value} lies outside {{1,2,3}}")]
    SymmetrizerOutOfRange { index: usize, value: i64 },
    #[error("Cartan matrix is not of finite type (leading principal minor {order} is {value})")]
    NotFiniteType { order: usize, value: String },
    #[error("unknown Cartan type {0}")]
    UnknownType(String),
    #[error("index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("weight {0} is not dominant")]
    NotDominant(String),
    #[error("weight {weight} has {got} coordinates, expected {expected}")]
    WeightArity {
        weight: String,
        got: usize,
        expected: usize,
    },
    #[error("weight set is not saturated (missing {0})")]
    NotSaturated(String),
    #[error("weight set is empty")]
    EmptyPi,
    #[error(
        "Gram rank {rank} at weight {weight} differs from Freudenthal multiplicity {multiplicity}"
    )]
    RankMismatch {
        weight: String,
        rank: usize,
        multiplicity: usize,
    },
    #[error("resource budget exceeded: {0}")]
    ResourceBudgetExceeded(String),
    #[error("pole at evaluation point {0}")]
    PoleAtPoint(String),
    #[error("evaluation point must be nonzero")]
    ZeroEvaluationPoint,
    #[error("modules are defined over different Cartan data")]
    CartanMismatch,
    #[error("cell element c[{lambda}; {s},{t}] is not in the algebra span")]
    MembershipFailure { lambda: String, s: usize, t: usize },
    #[error("degree bound {bound} is smaller than relation degree {degree}")]
    BoundTooSmall { bound: usize, degree: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
