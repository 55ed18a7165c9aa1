use alloc::string::String;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("variable count {0} outside supported range 1..=26")]
    VariableCount(u32),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: u32, found: u32 },
    #[error("variable index {index} out of range for {n} variables")]
    IndexOutOfRange { index: u32, n: u32 },
    #[error("cannot restrict a 1-variable function")]
    NoRemainingVariables,
    #[error("table length {found} does not match 2^{n}")]
    TableLength { n: u32, found: usize },
    #[error("function is not bent")]
    NotBent,
    #[error("{0}")]
    Premise(String),
    #[error("oracle limited to n <= {cap}, got n = {n}")]
    OracleCap { n: u32, cap: u32 },
    #[error("field degree {0} outside supported range 1..=16")]
    FieldDegree(u32),
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("operands belong to different fields")]
    MixedFields,
    #[error("element {value:#x} does not fit in GF(2^{m})")]
    ElementRange { value: u32, m: u32 },
}

impl Error {
    pub(crate) fn premise(msg: impl Into<String>) -> Self {
        Error::Premise(msg.into())
    }

    /// True for violations of a construction's hypotheses (as opposed to
    /// malformed arguments or oracle limits).
    pub fn is_premise(&self) -> bool {
        matches!(
            self,
            Error::NotBent | Error::Premise(_) | Error::ZeroInverse | Error::MixedFields
        )
    }
}
