use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension {0} is outside the supported range 1..=32")]
    DimensionOutOfRange(u32),

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: u32, right: u32 },

    #[error("{what} at n={n} exceeds the configured budget (max n={max})")]
    Budget {
        what: &'static str,
        n: u32,
        max: u32,
    },

    #[error("search space of 2^{g} functions exceeds the configured budget (max g={max})")]
    SearchBudget { g: usize, max: usize },

    #[error("invalid bit string: {0}")]
    Parse(String),

    #[error("expected {expected} values, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("truth table is not rotation invariant: f({left}) != f({right})")]
    NotRotationInvariant { left: String, right: String },

    #[error("eigenvalue statement requires n > 2, got n={0}")]
    OutsideTheoremScope(u32),

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    /// True for errors caused by a size limit rather than bad input.
    pub fn is_resource(&self) -> bool {
        matches!(self, Error::Budget { .. } | Error::SearchBudget { .. })
    }
}
