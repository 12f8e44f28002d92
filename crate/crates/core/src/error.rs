use thiserror::Error;

/// Errors raised anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("action matrix {0} does not stabilize the relation lattice")]
    ActionNotStabilizing(usize),
    #[error("action matrix {0} is not an involution modulo relations")]
    ActionNotInvolution(usize),
    #[error("relator {0} of the source is not killed in the target")]
    RelationNotKilled(usize),
    #[error("elements belong to different groups")]
    ParentMismatch,
    #[error("element does not belong to the subgroup or group in question")]
    ForeignElement,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus is reducible or has the wrong degree")]
    ReducibleModulus,
    #[error("zero is not allowed here")]
    ZeroInput,
    #[error("field kinds do not match")]
    KindMismatch,
    #[error("element is not a unit at this place")]
    NotUnit,
    #[error("uniformizer does not have valuation 1")]
    InvalidUniformizer,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("non-integral coefficient where only integral coefficients are allowed")]
    NonIntegral,
    #[error("bad argument: {0}")]
    BadArgument(String),
    #[error("unknown identity {0:?}")]
    UnknownIdentity(String),
    #[error("point has nontrivial stabilizer")]
    BadStabilizer,
    #[error("second point lies in the orbit of the first")]
    PointInOrbit,
    #[error("operation requires odd characteristic")]
    EvenCharacteristic,
    #[error("element is a square")]
    SquareInput,
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("empty set")]
    EmptySet,
}

pub type Result<T> = std::result::Result<T, Error>;
