use crate::bichar::TableRejection;

/// Errors raised by the algebra layer.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("conductor mismatch: {0} vs {1}")]
    ConductorMismatch(u64, u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid group spec at position {pos}: {msg}")]
    ParseGroup { pos: usize, msg: String },
    #[error("{what} {exponents:?} is not an element of {group}")]
    NotInGroup {
        what: &'static str,
        exponents: Vec<u32>,
        group: String,
    },
    #[error("group mismatch: {0} vs {1}")]
    SpecMismatch(String, String),
    #[error("not a subgroup: {0}")]
    NotSubgroup(String),
    #[error("invalid bicharacter: {0}")]
    ParseBichar(String),
    #[error("table is not a bicharacter: {0}")]
    NotBicharacter(TableRejection),
    #[error("not invertible: zero value at {0:?}")]
    NotInvertible(Vec<Vec<u32>>),
    #[error("cannot combine star-side and group-side elements")]
    SideMismatch,
    #[error("invalid graded space: {0}")]
    Grading(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("not coquasitriangular: {0} fails")]
    NotCoquasitriangular(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
    #[error("malformed json: {0}")]
    Json(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
