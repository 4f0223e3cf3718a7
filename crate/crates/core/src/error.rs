use thiserror::Error;

/// Errors shared by every module of the crate.
///
/// The variants are deliberately coarse: callers (the CLI in particular)
/// dispatch on the error *class*, not on its payload.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("a circulant row must contain at least one entry")]
    EmptyRow,

    #[error("dimension mismatch: expected length {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("dense materialization too large: n = {n} exceeds cap {cap}")]
    DenseCapExceeded { n: usize, cap: usize },

    /// The matrix is singular (or numerically indistinguishable from
    /// singular). `witness` identifies the vanishing factor or eigenvalue
    /// index and `margin` is its scale-normalized magnitude.
    #[error("singular matrix: {reason} (witness {witness}, margin {margin:e})")]
    Singular {
        reason: String,
        witness: usize,
        margin: f64,
    },

    /// A singular linear system whose right-hand side violates the
    /// compatibility condition.
    #[error("incompatible system: {0}")]
    Incompatible(String),

    #[error("integer overflow in recurrence at index {0}")]
    Overflow(u32),

    #[error("{0}")]
    InvalidInput(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub(crate) fn singular(reason: impl Into<String>, witness: usize, margin: f64) -> Self {
        Error::Singular {
            reason: reason.into(),
            witness,
            margin,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
