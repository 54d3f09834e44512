use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("group closure exceeded the cap of {cap} elements")]
    CapExceeded { cap: usize },
    #[error("generators are not all of the same kind: {0}")]
    KindMismatch(String),
    #[error("no generators supplied")]
    NoGenerators,
    #[error("the given element set is not a subgroup")]
    NotSubgroup,
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("quotient group is not cyclic")]
    QuotientNotCyclic,
    #[error("non-split class counts differ across cosets: {0:?}")]
    CountMismatch(Vec<usize>),
    #[error("class {0} commutes with every class but is not a central singleton")]
    NonCentralUniversalClass(usize),
    #[error("matching incomplete: {matched} of {needed} matched")]
    MatchingIncomplete { matched: usize, needed: usize },
    #[error("exponent {c} is not coprime to the group order {order}")]
    NotCoprime { c: i64, order: usize },
    #[error("quotient order {0} is not prime")]
    NotPrimeIndex(usize),
    #[error("partition defect: {0}")]
    PartitionDefect(String),
    #[error("partitions of different sizes: {0} and {1}")]
    SizeMismatch(u32, u32),
    #[error("input too large: {0}")]
    TooLarge(String),
    #[error("cross-check failure: {0}")]
    CrosscheckFailure(String),
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("field of even order {0} not supported here")]
    EvenField(u32),
    #[error("matching scheme defect: {0}")]
    SchemeDefect(String),
    #[error("equivalence failure: {0}")]
    EquivalenceFailure(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
