use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid segment ({b},{e}): the end must be at least begin - 1")]
    InvalidSegment { b: i64, e: i64 },
    #[error("coordinate {0} is outside the supported range")]
    CoordinateOverflow(i64),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("{0} requires a nonzero genuine part")]
    Empty(&'static str),
    #[error("{0} does not accept dummy segments")]
    Enhanced(&'static str),
    #[error("not a ladder: {0}")]
    NotLadder(String),
    #[error("pair is not permissible: {0}")]
    NotPermissible(String),
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("invalid row tuple: {0}")]
    InvalidTuple(String),
    #[error("mismatch: {0}")]
    Mismatch(String),
    #[error("{0}")]
    Domain(String),
    #[error("projected enumeration size {projected} exceeds the cap {cap}")]
    Budget { projected: u128, cap: u128 },
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
