use thiserror::Error;

/// Unified error type for all library operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("torus dimensions must both be at least 3, got {m}x{n}")]
    SpecTooSmall { m: i64, n: i64 },

    #[error("point isometries only descend to square tori, got {m}x{n}")]
    IsometryNotApplicable { m: i64, n: i64 },

    #[error("torus {m}x{n} does not satisfy {requirement}")]
    DivisibilityViolation {
        m: i64,
        n: i64,
        requirement: String,
    },

    #[error("component boundary is not an induced cycle")]
    NotAHole,

    #[error("set is not a 1-perfect code")]
    NotAPerfectCode,

    #[error("operation requires a nonempty set")]
    EmptySet,

    #[error("operation requires at least two vertices")]
    SingletonSet,

    #[error("search budget exhausted")]
    BudgetExceeded,

    #[error("no motif found: family parameters are inconsistent with the requested torus")]
    NoMotifFound,

    #[error("motif for this family is unavailable")]
    MotifUnavailable,

    #[error("set is not a K2-quasiperfect dominating set")]
    NotK2Qpds,

    #[error("operation requires at least two components")]
    TooFewComponents,

    #[error("no low-type anchor: the component graph does not admit a periodic table layout")]
    NoLowType,

    #[error("expected exactly two hexagon types, found {found}")]
    NotTwoTypes { found: usize },

    #[error("set does not have sandwiched row structure")]
    NotSandwiched,

    #[error("word parameter must be nonempty")]
    EmptyWord,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
