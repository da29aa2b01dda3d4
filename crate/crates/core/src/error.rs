use thiserror::Error;

use crate::rootdata::LieType;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unsupported root datum {0:?}{1}")]
    Unsupported(LieType, usize),
    #[error("weight {0:?} is not dominant for this type")]
    NotDominant(Vec<i64>),
    #[error("weight has {got} coordinates, expected {expected}")]
    WrongLength { expected: usize, got: usize },
    #[error("index out of range: {0}")]
    Index(String),
    #[error("no special idempotent p_{sign}{index} in type {lie_type:?}{rank}")]
    NoSpecialIdempotent { lie_type: LieType, rank: usize, sign: char, index: usize },
    #[error("pair is not in tau(lambda): {0}")]
    NotInTau(String),
    #[error("lattice map is not admissible: {0}")]
    NotAdmissible(String),
    #[error("quotient still nonzero in degree {degree}, past the cutoff {cutoff}")]
    CutoffExceeded { degree: i64, cutoff: i64 },
    #[error("weight support exceeds the depth cap {0}")]
    DepthCap(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
