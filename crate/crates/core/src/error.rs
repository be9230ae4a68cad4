use thiserror::Error;

use crate::model::IndexSet;

/// Coarse grouping of errors, used by front ends to pick exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorClass {
    Parse,
    Validation,
    Precondition,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse `{0}` as an exact rational")]
    ParseRational(String),

    #[error("ground set size must satisfy 1 <= n <= {max}, got {n}")]
    GroundSetSize { n: usize, max: usize },
    #[error("collection is missing the empty set")]
    MissingEmptySet,
    #[error("collection is missing the full set")]
    MissingFullSet,
    #[error("index {index} is outside [1, {n}]")]
    OutOfRangeIndex { index: usize, n: usize },
    #[error("collection has {0} sets, above the supported maximum")]
    CollectionTooLarge(usize),

    #[error("measure of the empty set must be 0")]
    NonZeroEmptySet,
    #[error("MonotonicityViolation: {smaller} ⊆ {larger}")]
    MonotonicityViolation { smaller: IndexSet, larger: IndexSet },
    #[error("measure value of {0} is negative")]
    NegativeValue(IndexSet),
    #[error("measure of the full set must be positive")]
    ZeroFullSet,
    #[error("measure has no value for {0}")]
    MissingMeasureValue(IndexSet),
    #[error("measure assigns a value to {0}, which is not in its domain")]
    UnexpectedMeasureValue(IndexSet),

    #[error("step function does not vanish at infinity, the integral diverges")]
    DivergentIntegral,
    #[error("step pieces leave a gap or overlap near {0}")]
    GapOrOverlap(String),

    #[error("set {0} is not in the collection")]
    SetNotInCollection(IndexSet),
    #[error("vector component {0} is negative")]
    NegativeComponent(usize),
    #[error("vector has length {got}, expected {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("measure domain is not the complement collection of the aggregation family")]
    DomainMismatch,
    #[error("measure must be defined on the full power set")]
    MeasureNotOnPowerset,
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("index {index} out of range (size {size})")]
    IndexOutOfRange { index: usize, size: usize },
    #[error("symmetric levels are invalid: {0}")]
    BadLevels(String),

    #[error("division by zero in criterion {0}")]
    ZeroDivision(usize),
    #[error("Shapley targets cannot be normalized: {0}")]
    InconsistentTargets(String),
}

impl Error {
    pub fn class(&self) -> ErrorClass {
        use Error::*;
        match self {
            ParseRational(_) => ErrorClass::Parse,
            DivergentIntegral
            | GapOrOverlap(_)
            | DomainMismatch
            | MeasureNotOnPowerset
            | PreconditionViolated(_)
            | IndexOutOfRange { .. }
            | BadLevels(_)
            | ZeroDivision(_)
            | InconsistentTargets(_) => ErrorClass::Precondition,
            _ => ErrorClass::Validation,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
