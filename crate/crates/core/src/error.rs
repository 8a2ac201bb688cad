use thiserror::Error;

use crate::unity::RootOfUnity;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("weight vector is empty")]
    EmptyWeights,

    #[error("weight w_{index} = {value} is not a positive integer")]
    NonPositiveWeight { index: usize, value: i64 },

    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),

    #[error("root with argument {0} fixes no coordinate of the weight vector")]
    EmptyFixedSet(RootOfUnity),

    #[error("basis index {index} out of range 0..{len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("{0} is not a basis element for these weights")]
    InvalidBasis(String),

    #[error("|w| = {total} exceeds the verification cap {cap}")]
    CapExceeded { total: i64, cap: i64 },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
