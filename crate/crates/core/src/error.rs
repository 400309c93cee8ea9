use thiserror::Error;

use crate::grp::GroupId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error(
        "unsupported type {label}{rank}: accepted types are A(n>=1), B(n>=2), C(n>=3), D(n>=4), F4, G2"
    )]
    InvalidType { label: String, rank: usize },

    #[error("invalid Cartan matrix: {0}")]
    InvalidCartan(String),

    #[error("root closure exceeded {bound} roots; the Cartan matrix is not of finite type")]
    NonFinite { bound: usize },

    #[error("group order exceeds the configured maximum of {limit}")]
    SizeLimit { limit: usize },

    #[error("character table construction failed: {0}")]
    Irrationality(String),

    #[error("eigenspace splitting did not separate all characters after {rounds} rounds")]
    SplitExhausted { rounds: usize },

    #[error("class function is not a virtual character: {0}")]
    NotVirtual(String),

    #[error("class function lives on group {found:?}, expected group {expected:?}")]
    GroupMismatch { expected: GroupId, found: GroupId },

    #[error("label assignment failed: {0}")]
    Labeling(String),
}
