use thiserror::Error;

use crate::patterns::Violation;

/// Errors raised across the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("square root of negative rational {0}")]
    NegativeRadicand(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("radicand {0} does not fit in 64 bits")]
    RadicandOverflow(String),

    #[error("malformed partition: {0}")]
    MalformedPartition(String),

    #[error("malformed pattern text: {0}")]
    MalformedPattern(String),

    #[error("pattern shape mismatch: {0}")]
    Shape(String),

    #[error("invalid pattern: {}", format_violations(.0))]
    InvalidPattern(Vec<Violation>),

    #[error("patterns belong to different partitions")]
    PartitionMismatch,

    #[error("{what} index {index} out of range for n = {n}")]
    IndexOutOfRange {
        what: &'static str,
        index: usize,
        n: usize,
    },

    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("internal consistency error: {0}")]
    Internal(String),

    #[error("certification failure: {0}")]
    Certification(String),

    #[error("unsupported schedule: {0}")]
    UnsupportedSchedule(String),

    #[error("malformed word: {0}")]
    MalformedWord(String),
}

fn format_violations(v: &[Violation]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("; ")
}

pub type Result<T> = std::result::Result<T, Error>;
