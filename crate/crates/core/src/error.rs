use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("group order must be at least 1")]
    ZeroOrder,
    #[error("group order {n} exceeds the supported search limit {max}")]
    OrderTooLarge { n: usize, max: usize },
    #[error("{d} does not divide {n}")]
    NotADivisor { d: usize, n: usize },
    #[error("cyclotomic index must be at least 1")]
    ZeroCyclotomicIndex,
    #[error("element {x} is out of range for Z_{n}")]
    ElementOutOfRange { x: usize, n: usize },
    #[error("operation requires a set, got a multiset")]
    NotASet,
    #[error("operation requires a nonempty set")]
    EmptySet,
    #[error("group orders differ: Z_{0} vs Z_{1}")]
    MismatchedOrders(usize, usize),
    #[error("{0} is not square-free")]
    NotSquareFree(usize),
    #[error("{m} and {r} are not coprime")]
    NotCoprime { m: usize, r: usize },
    #[error("{p} is not a prime factor of {n}")]
    NotAPrimeFactor { p: usize, n: usize },
    #[error("group order {n} does not have the required factorization shape ({expected})")]
    FactorizationShape { n: usize, expected: &'static str },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid campaign configuration: {0}")]
    Config(String),
    #[error("checkpoint does not match the campaign configuration")]
    CheckpointMismatch,
    #[error("campaign interrupted; progress saved to the checkpoint")]
    Interrupted,
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
