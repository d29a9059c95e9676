use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("cyclic group order must be positive")]
    ZeroOrder,

    #[error("exponent of Z/{p}^{n} must be at least 1")]
    ZeroExponent { p: u64, n: u32 },

    #[error("order {p}^{n} does not fit in 64 bits")]
    OrderOverflow { p: u64, n: u32 },

    #[error("syntax error at position {pos}: {message}")]
    Syntax { pos: usize, message: String },

    #[error("{reason} in `{token}` at position {pos}")]
    InvalidToken { pos: usize, token: String, reason: String },

    #[error("{func} expects {expected} argument(s), got {got}")]
    Arity { func: String, expected: usize, got: usize },

    #[error("type error in {op}: {message}")]
    Type { op: String, message: String },

    #[error("derived objects containing E or E* cannot be used as arguments of {0}")]
    NotSplit(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    pub(crate) fn syntax(pos: usize, message: impl Into<String>) -> Self {
        Error::Syntax { pos, message: message.into() }
    }

    pub(crate) fn type_error(op: &str, message: impl Into<String>) -> Self {
        Error::Type { op: op.to_string(), message: message.into() }
    }

    /// True for errors that signal a broken engine invariant rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Invariant(_))
    }
}
