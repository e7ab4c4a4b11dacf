use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("partition parts must be positive and weakly decreasing, got {0:?}")]
    InvalidPartition(Vec<u32>),

    #[error("beta-set elements must be positive and distinct, got {0:?}")]
    InvalidBetaSet(Vec<u32>),

    #[error("invalid core parameters s={s}, t={t}: {reason}")]
    InvalidParams { s: u32, t: u32, reason: &'static str },

    #[error("invalid T parameters {ts:?}: {reason}")]
    InvalidTParams { ts: Vec<u32>, reason: &'static str },

    #[error("row {index} out of range for a beta-set with {len} elements")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("arithmetic overflow")]
    Overflow,

    #[error("{0} is not closed")]
    NotClosed(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("enumeration guard exceeded: {size} elements, limit {limit}")]
    GuardExceeded { size: usize, limit: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
