use thiserror::Error;

/// A physical or numerical parameter outside its admissible range.
#[derive(Debug, Clone, PartialEq, Error)]
#[error("{field} = {value}: {reason}")]
pub struct ParameterError {
    pub field: &'static str,
    pub value: String,
    pub reason: &'static str,
}

impl ParameterError {
    pub(crate) fn new(field: &'static str, value: impl ToString, reason: &'static str) -> Self {
        Self {
            field,
            value: value.to_string(),
            reason,
        }
    }
}

pub(crate) fn require_positive<T: crate::Scalar>(
    field: &'static str,
    value: T,
) -> Result<(), ParameterError> {
    if value.is_finite() && value > T::zero() {
        Ok(())
    } else {
        Err(ParameterError::new(field, value, "must be finite and > 0"))
    }
}
