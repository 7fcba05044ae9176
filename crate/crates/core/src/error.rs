use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("element is not a unit")]
    NonUnit,
    #[error("switch does not satisfy either inversion hypothesis")]
    NotInvertible,
    #[error("the two formulas for lambda disagree")]
    LambdaMismatch,
    #[error("study determinant has a nonzero imaginary part")]
    ImaginaryDeterminant,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid Gauss code: {0}")]
    GaussCode(String),
    #[error("invalid braid word: {0}")]
    BraidWord(String),
    #[error("illegal Reidemeister move: {0}")]
    IllegalMove(String),
    #[error("level {level} out of range for a {dim}x{dim} matrix")]
    LevelOutOfRange { level: usize, dim: usize },
    #[error("unknown name `{0}`")]
    UnknownName(String),
    #[error("invalid search config: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
