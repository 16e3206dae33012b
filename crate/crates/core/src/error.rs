use thiserror::Error;

use crate::geom::Violation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeomError {
    /// Argument positions (or point indices) of a collinear triple.
    #[error("degenerate input: points {0:?} are collinear")]
    Collinear([usize; 3]),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DepthError {
    #[error("point set is not certified to be in general position")]
    NotCertified,
    #[error("index {index} out of range for {len} points")]
    BadIndex { index: usize, len: usize },
    #[error("pair ({0}, {0}) does not name two distinct points")]
    SamePoint(usize),
    #[error("operation needs at least {need} points, got {got}")]
    TooFewPoints { need: usize, got: usize },
    #[error("no {0} point present")]
    MissingColor(&'static str),
    #[error("{what} = {value} outside [{lo}, {hi}]")]
    OutOfRange {
        what: &'static str,
        value: i64,
        lo: i64,
        hi: i64,
    },
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ConstructionError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("resampling budget of {attempts} draws exhausted")]
    BudgetExhausted { attempts: usize },
    #[error("general position not reached after {attempts} attempts; last violations: {violations:?}")]
    Certification {
        attempts: usize,
        violations: Vec<Violation>,
    },
    #[error("claim failed after {attempts} attempts: {detail}")]
    ClaimFailed { attempts: usize, detail: String },
}
