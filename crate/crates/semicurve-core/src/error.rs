use alloc::string::String;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("no generators")]
    NoGenerators,
    #[error("not co-finite: generators have gcd {0}")]
    NotCofinite(u64),
    #[error("generators must be positive")]
    ZeroGenerator,
    #[error("not a semigroup: {0}")]
    NotASemigroup(String),
    #[error("conductor not minimal")]
    ConductorNotMinimal,
    #[error("{0} is not a member")]
    NotAMember(u64),
    #[error("partition undefined for ordinary semigroups")]
    PartitionUndefined,
    #[error("no gaps")]
    NoGaps,
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("incompatible rings")]
    IncompatibleRings,
    #[error("wrong shape: {0}")]
    WrongShape(String),
    #[error("complete intersection: presentation has 2 generators, out of deformation scope")]
    CompleteIntersection,
    #[error("out of scope: {0}")]
    OutOfScope(String),
    #[error("inconsistent basis at degree {0}")]
    InconsistentBasis(i64),
    #[error("flatness identity failed: {0}")]
    FlatnessFailed(String),
    #[error("bad prime {0}, choose another")]
    BadPrime(u64),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = core::result::Result<T, Error>;
