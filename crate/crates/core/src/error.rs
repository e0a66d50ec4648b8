use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An exponent vector or weight list had the wrong length.
    #[error("dimension mismatch: expected {expected} variables, found {found}")]
    Dimension { expected: usize, found: usize },

    /// A raw parameter was out of range (negative degree, j > n, empty list, ...).
    #[error("invalid parameter: {0}")]
    Parameter(String),

    /// The input is well formed but lies outside the regime where the
    /// requested quantity is defined. The payload names the violated condition.
    #[error("regime violation: {0}")]
    Regime(String),

    /// A truncated series without unit constant term was inverted.
    #[error("series is not invertible: constant term is {0}, expected 1")]
    NotInvertible(String),

    /// Torus weights make a localization denominator vanish.
    #[error("singular torus weights: {0}")]
    SingularWeights(String),

    /// A result that must be an integer (or constant in the weights) was not.
    /// Always indicates a bug.
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
}

impl Error {
    pub(crate) fn regime(condition: impl Into<String>) -> Self {
        Error::Regime(condition.into())
    }

    pub(crate) fn param(msg: impl Into<String>) -> Self {
        Error::Parameter(msg.into())
    }

    /// True for errors caused by the request rather than by the library.
    pub fn is_regime(&self) -> bool {
        !matches!(self, Error::Inconsistency(_))
    }
}
