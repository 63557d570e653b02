use thiserror::Error;

use crate::BigNat;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("sequence index must be at least 1, got {0}")]
    InvalidIndex(u32),
    #[error("generators must be positive")]
    ZeroGenerator,
    #[error("invalid generator pair ({0}, {1}): need 2 <= d1 < d2 and gcd 1")]
    InvalidPair(BigNat, BigNat),
    #[error("generators {0:?} are not a minimal generating set")]
    NonMinimalGenerators(Vec<BigNat>),
    #[error("generators do not satisfy the symmetry criterion: {0}")]
    NotSymmetric(&'static str),
    #[error("degree {degree} exceeds truncation limit {limit}")]
    TruncationExceeded { degree: BigNat, limit: u64 },
    #[error("series coefficient overflowed i64")]
    CoefficientOverflow,
    #[error("sieve bound {bound} does not reach the conductor")]
    BoundTooSmall { bound: u64 },
    #[error("generators have gcd {0}, not a numerical semigroup")]
    NotCoprime(BigNat),
    #[error("generator 1 makes every integer a member")]
    TrivialSemigroup,
    #[error("conductor exceeds oracle ceiling {ceiling}")]
    OracleInfeasible { ceiling: u64 },
    #[error("invalid index triple: {0}")]
    InvalidTriple(String),
}
