use thiserror::Error;

use crate::skewcurves::SkewCurve;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("weight parameter must be at least 2, got {0}")]
    BadWeight(i64),
    #[error("mismatched weight parameters {0} and {1}")]
    MismatchedN(i64, i64),
    #[error("malformed curve: {0}")]
    MalformedCurve(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("operation not defined for {0}")]
    Unsupported(String),
    #[error("{0} is not an arc of the pseudo-triangulation")]
    NotMember(SkewCurve),
    #[error("expected exactly two complements, found {0}")]
    ComplementCount(usize),
    #[error("ill-formed pseudo-triangulation: {0}")]
    IllFormed(String),
    #[error("not an FV pseudo-triangulation")]
    NotFv,
    #[error("flip does not match any row of the classification table: {0}")]
    Unclassified(String),
    #[error("search exhausted: {0}")]
    SearchExhausted(String),
}

pub type Result<T> = std::result::Result<T, Error>;
