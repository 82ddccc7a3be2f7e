use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("ground set of size {0} is outside 1..=64")]
    GroundSetSize(usize),
    #[error("subset {bits:#x} is not a {k}-subset of a {v}-set")]
    SubsetMismatch { bits: u64, v: usize, k: usize },
    #[error("rank {rank} is out of range for C({v},{k}) = {count}")]
    RankOutOfRange { rank: u64, v: usize, k: usize, count: u64 },
    #[error("parameter mismatch: {0}")]
    Mismatch(String),
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("invalid design: {0}")]
    InvalidDesign(String),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("C({v},{k}) = {count} ranks exceeds the cap of {cap}")]
    MemoryCap { v: usize, k: usize, count: u64, cap: u64 },
    #[error("group does not preserve the design: generator {generator} maps block {block:?} outside it")]
    NotPreserved { generator: usize, block: Vec<usize> },
    #[error("block {0:?} is not in the design")]
    NotABlock(Vec<usize>),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("result contradicts a classification: {0}")]
    Contradiction(String),
    #[error("unsupported parameter: {0}")]
    Unsupported(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("data integrity: {0}")]
    Integrity(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }
}
