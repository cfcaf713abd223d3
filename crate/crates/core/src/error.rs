use alloc::string::String;

/// Errors raised by the exact-arithmetic, characteristic-class and
/// representation layers.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Operands live in incompatible rings (different variables or cutoffs).
    #[error("structural mismatch: {0}")]
    Structural(String),
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// A requested degree or index lies beyond what was computed.
    #[error("out of range: {0}")]
    Range(String),
    /// Two independent computations disagree. Always a bug.
    #[error("consistency failure: {0}")]
    Consistency(String),
    /// Curated representation tables produced an impossible result.
    #[error("model data error: {0}")]
    ModelData(String),
    /// The requested formula does not exist for this input family.
    #[error("not applicable: {0}")]
    NotApplicable(String),
}

pub type Result<T> = core::result::Result<T, Error>;

macro_rules! bail {
    ($variant:ident, $($arg:tt)*) => {
        return Err($crate::error::Error::$variant(alloc::format!($($arg)*)))
    };
}
pub(crate) use bail;
