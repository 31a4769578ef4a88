use ratcas::CasError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Cas(#[from] CasError),

    #[error("metric is degenerate (determinant is identically zero)")]
    DegenerateMetric,

    #[error("metric is not symmetric")]
    AsymmetricMetric,

    #[error("frame is degenerate (determinant is identically zero)")]
    DegenerateFrame,

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("expected a tensor of valence ({upper},{lower})")]
    Valence { upper: usize, lower: usize },

    #[error("two-form is not antisymmetric")]
    NotAntisymmetric,

    #[error("{what} has a pole at the base point")]
    PoleAtPoint { what: String },

    #[error("metric is degenerate at the base point")]
    DegenerateAtPoint,

    #[error("no α solves dΦ = 2α η∧Φ: η∧Φ vanishes but dΦ does not")]
    NoAlpha,

    #[error("check requires one of {expected}, structure is {found}")]
    ClassMismatch { expected: String, found: String },

    #[error("vector field is not conformal: L_V g is not a multiple of g")]
    NotConformal,

    #[error("candidate is not a Yamabe soliton for the given λ")]
    NotASoliton,

    #[error("potential gradient does not match the declared vector field")]
    PotentialMismatch,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
