use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parts are not weakly decreasing: {0:?}")]
    NotWeaklyDecreasing(Vec<i64>),
    #[error("negative part in {0:?}")]
    NegativePart(Vec<i64>),
    #[error("node ({0}, {1}) is not in the Young diagram")]
    NodeOutsideDiagram(usize, usize),
    #[error("partition {0} is not self-conjugate")]
    NotSelfConjugate(String),
    #[error("partition {0} is not {1}-restricted")]
    NotRestricted(String, usize),
    #[error("partition {0} is not {1}-quotient separated")]
    NotQuotientSeparated(String, usize),
    #[error("partition {0} is not a Rouquier partition for p = {1}")]
    NotRouquier(String, usize),
    #[error("partitions have different cores or weights")]
    CoreWeightMismatch,
    #[error("the last ordered quotient entry of {0} is not empty")]
    NotRestrictedQuotient(String),
    #[error("tableau shapes or types do not match")]
    ShapeTypeMismatch,
    #[error("tableau types do not chain: {0}")]
    ChainMismatch(String),
    #[error("invalid Garnir data: {0}")]
    InvalidGarnir(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("prime {0} is not supported here")]
    UnsupportedPrime(usize),
    #[error("oracle data: {0}")]
    OracleData(String),
}

pub type Result<T> = std::result::Result<T, Error>;
