use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid span: a path from x = {start} to x = {end} needs a non-negative even width")]
    InvalidSpan { start: i64, end: i64 },

    #[error("invalid path: {0}")]
    InvalidPath(String),

    #[error("insufficient terms: {required} sequence terms needed, {available} given")]
    InsufficientTerms { required: usize, available: usize },

    #[error("ill-posed profile: pivot determinant for sequence term {index} is zero")]
    IllPosedProfile { index: usize },

    #[error("inconsistent profile: sequence term {index} is not an integer")]
    InconsistentProfile { index: usize },

    #[error("size limit: {what} of order {n} exceeds the enumeration cutoff {cutoff} (raise --max-enum-n)")]
    SizeLimit {
        what: &'static str,
        n: usize,
        cutoff: usize,
    },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("invalid tiling: {0}")]
    InvalidTiling(String),

    #[error("internal consistency error: {0}")]
    Internal(String),
}
