use alloc::string::String;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    Argument(String),
    #[error("invalid weight: {0}")]
    InvalidWeight(String),
    #[error("polynomial is not bihomogeneous")]
    NotBihomogeneous,
    #[error("function is not traceless (not annihilated by the contraction operator)")]
    NotTraceless,
    #[error("cannot represent {0} exactly in Q(sqrt 3)")]
    Irrational(String),
    #[error("internal consistency failure: {0}")]
    Consistency(String),
}

pub type Result<T> = core::result::Result<T, Error>;
