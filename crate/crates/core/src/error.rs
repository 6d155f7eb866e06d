use thiserror::Error;

/// Errors shared by every kernel module. Verification *failures* are not
/// errors: they come back as `Fail` reports with witnesses. An `Error` means
/// the question itself was ill-posed or a resource budget ran out.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring mismatch: {0} vs {1}")]
    RingMismatch(String, String),
    #[error("shape mismatch: {0} vs {1}")]
    ShapeMismatch(String, String),
    #[error("not a polynomial: {0}")]
    NotAPolynomial(String),
    #[error("value is not exact in this ring: {0}")]
    NotExactInRing(String),
    #[error("fuzzy component out of [0, 1]: {0}")]
    FuzzyOutOfRange(String),
    #[error("closure cap of {cap} elements exceeded")]
    CapExceeded { cap: usize },
    #[error("enumeration budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("candidate is not a proper nonempty subset")]
    NotProperSubset,
    #[error("scalar restriction needs more than one scalar")]
    SubsetScalarsTooSmall,
    #[error("part {index} is not a substructure: {reason}")]
    PartNotSubstructure { index: usize, reason: String },
    #[error("domain and codomain scalar sets differ")]
    ScalarSetMismatch,
    #[error("map table is not total: no image for {0}")]
    NotTotal(String),
    #[error("image {0} lies outside the codomain carrier")]
    ImageNotInCodomain(String),
    #[error("map is not invertible: {0}")]
    NotInvertible(String),
    #[error("given set is not a valid subspace of the operator domain")]
    SubspaceInvalid,
    #[error("structural prerequisite failed: {0}")]
    PrerequisiteFailed(String),
    #[error("candidate is not a subset of the carrier")]
    NotSubset,
    #[error("operation needs an operator (domain = codomain)")]
    NotAnOperator,
    #[error("empty set where a nonempty one is required")]
    EmptySet,
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
