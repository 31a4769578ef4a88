use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CasError {
    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },

    #[error("unknown identifier `{name}` at offset {offset}")]
    UnknownIdentifier { name: String, offset: usize },

    #[error("division by zero")]
    DivisionByZero,

    #[error("unknown coordinate `{0}`")]
    UnknownCoordinate(String),

    #[error("no value given for coordinate `{0}`")]
    MissingCoordinate(String),

    #[error("denominator vanishes at the evaluation point")]
    Pole,

    #[error("invalid coordinate system: {0}")]
    InvalidCoordinates(String),
}

pub type Result<T, E = CasError> = std::result::Result<T, E>;
