//! Error type shared across the crate.

use thiserror::Error;

use crate::rat::Rat;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum EngineError {
    #[error("zero denominator")]
    ZeroDenominator,

    #[error("not a rational number: {0:?}")]
    BadRational(String),

    #[error("level {0} is not a half-integer")]
    BadLevel(Rat),

    #[error("terms of grade {found} mixed into an element of grade {expected}")]
    MixedGrades { expected: String, found: String },

    #[error("level {requested} exceeds the configured cutoff {cutoff}")]
    CutoffExceeded { requested: Rat, cutoff: Rat },

    #[error("the zero vector is not a singular-vector candidate")]
    ZeroCandidate,

    #[error("grade has non-positive level {0}; nothing to search there")]
    NonPositiveLevel(Rat),

    #[error("level denominator u must be positive, got {0}")]
    NonPositiveU(i64),

    #[error("{t}/{u} is not admissible: {reason}")]
    NotAdmissible { t: i64, u: i64, reason: String },

    #[error("the charged-curve test applies to non-integer levels only, and {0} is an integer")]
    CurveUndefined(Rat),

    #[error("(j, k) = ({j}, {k}) is outside the weight table for m = {m}: {reason}")]
    OutsideWeightTable { m: i64, j: Rat, k: Rat, reason: String },

    #[error("internal inconsistency: {0}")]
    Internal(String),
}
