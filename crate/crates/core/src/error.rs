use thiserror::Error;

/// Errors raised by the library.
///
/// Map validation failures each get their own variant so callers (and the
/// CLI) can report which invariant was violated.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("length-mismatch: alpha has {alpha} entries, sigma has {sigma}")]
    LengthMismatch { alpha: usize, sigma: usize },

    #[error("empty-map: a map needs at least one edge")]
    EmptyMap,

    #[error("not-a-permutation: {which} is not a permutation of 0..{len}")]
    NotPermutation { which: &'static str, len: usize },

    #[error("fixed-dart: alpha fixes dart {0}")]
    FixedDart(usize),

    #[error("not-an-involution: alpha(alpha({0})) != {0}")]
    NotInvolution(usize),

    #[error("disconnected: darts reachable from dart 0 cover {reached} of {total}")]
    Disconnected { reached: usize, total: usize },

    #[error("genus: V - E + F = {euler}, expected 2")]
    Genus { euler: i64 },

    #[error("not applicable: {0}")]
    NotApplicable(String),

    #[error("census-mismatch: sum of n*f_n is {found}, expected {expected}")]
    CensusMismatch { expected: usize, found: usize },

    #[error("construction-inconsistency: {0}")]
    ConstructionInconsistency(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub(crate) fn not_applicable(msg: impl Into<String>) -> Self {
        Error::NotApplicable(msg.into())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
