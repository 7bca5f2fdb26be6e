use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator list is empty")]
    EmptyGenerators,
    #[error("generators have gcd {0}; they do not generate a numerical semigroup")]
    NonCoprimeGenerators(i64),
    #[error("generator {0} is not a positive integer")]
    ZeroOrNegativeGenerator(i64),
    #[error("generator {0} exceeds the supported bound 2^31")]
    GeneratorTooLarge(i64),
    #[error("membership table for these generators would exceed {0} entries")]
    SieveLimit(u64),
    #[error("{0} is not an element of the semigroup")]
    NotAMember(i64),
    #[error("{0} is not positive")]
    NonPositive(i64),
    #[error("operation needs a gap but the semigroup is the full set of naturals")]
    FullSemigroup,
    #[error("inner valuation set is not contained in the outer one (missing {0})")]
    NotNested(i64),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("invalid gluing: {0}")]
    InvalidGluing(String),
    #[error("closed-form prediction mismatch: {0}")]
    PredictionMismatch(String),
    #[error("set is empty")]
    EmptySet,
    #[error("{what} = {value} is outside the supported range {min}..={max}")]
    OutOfRange {
        what: &'static str,
        value: i64,
        min: i64,
        max: i64,
    },
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),
}

impl Error {
    /// True for errors that signal a bug in this crate rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            Error::InternalInconsistency(_) | Error::PredictionMismatch(_)
        )
    }
}
