use thiserror::Error;

/// Errors raised by the library.
///
/// Parsing failures and invalid-knot inputs are kept apart so the command
/// line can map them onto distinct exit codes.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("0/0 is not a rational number")]
    ZeroOverZero,

    #[error("q = {0} is even: K_p/q is a two-component link, not a knot")]
    Link(String),

    #[error("q = 1 gives the unknot")]
    Unknot,

    #[error("gcd({p}, {q}) = {gcd}, fraction is not in lowest terms")]
    NotCoprime { p: String, q: String, gcd: String },

    #[error("invalid knot: {0}")]
    InvalidKnot(String),

    #[error("rewrite precondition failed: {0}")]
    Rewrite(String),

    #[error("not strongly positive: {0}")]
    NotStronglyPositive(String),

    #[error("out of domain: {0}")]
    Domain(String),

    #[error("invalid ORS word: {0}")]
    InvalidWord(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    /// True for errors caused by a syntactically valid but unusable knot.
    pub fn is_invalid_knot(&self) -> bool {
        matches!(
            self,
            Error::Link(_) | Error::Unknot | Error::NotCoprime { .. } | Error::InvalidKnot(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
