use thiserror::Error;

use crate::signature::Signature;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid signature: {0}")]
    InvalidSignature(String),
    #[error("signature mismatch: {left} vs {right}")]
    SignatureMismatch { left: Signature, right: Signature },
    #[error("grade {grade} out of range for an algebra of dimension {dim}")]
    GradeOutOfRange { grade: usize, dim: usize },
    #[error("element is not invertible")]
    SingularElement,
    #[error("element is not in the {0} group")]
    NotInGroup(&'static str),
    #[error("element is not in Pin(1,3)")]
    NotInPin13,
    #[error("matrix does not preserve the metric")]
    NotOrthogonal,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("idempotent is not primitive")]
    NotPrimitive,
    #[error("element is not in the left ideal generated by the idempotent")]
    NotInIdeal,
    #[error("element does not lie in the division ring f·Cl·f")]
    NotInDivisionRing,
    #[error("no standard-basis blade satisfies s·f°·s⁻¹ = f")]
    NoSuchBlade,
    #[error("gram matrix is singular")]
    SingularGram,
    #[error("dual basis unavailable")]
    DualBasisUnavailable,
}

pub type Result<T> = std::result::Result<T, Error>;
