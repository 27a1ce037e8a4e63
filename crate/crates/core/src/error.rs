use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed token {0:?}: expected a nonzero integer")]
    MalformedToken(String),

    #[error("letter {letter} out of range for {strands} strands")]
    LetterOutOfRange { letter: i64, strands: usize },

    #[error("strand mismatch: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },

    #[error("at least 2 strands required, got {0}")]
    StrandTooSmall(usize),

    #[error("Markov destabilization not applicable")]
    NotApplicable,

    #[error("closure is not a knot: {components} components")]
    NotAKnot { components: usize },

    #[error("descriptor braid closure is not a knot: {components} components")]
    NotAKnotClosure { components: usize },

    #[error("curve lies on the wrong boundary torus")]
    WrongTorus,

    #[error("no solution within bound {0}")]
    NoSolutionWithinBound(i64),

    #[error("{0} solutions within bound; expected exactly one")]
    MultipleSolutions(usize),

    #[error("search budget of {0} exhausted")]
    BudgetExhausted(usize),

    #[error("exchangeability screening failed for {0}")]
    ScreeningFailed(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    /// Stable variant name, used by the command line front end.
    pub fn name(&self) -> &'static str {
        match self {
            Error::MalformedToken(_) => "MalformedToken",
            Error::LetterOutOfRange { .. } => "LetterOutOfRange",
            Error::StrandMismatch { .. } => "StrandMismatch",
            Error::StrandTooSmall(_) => "StrandTooSmall",
            Error::NotApplicable => "NotApplicable",
            Error::NotAKnot { .. } => "NotAKnot",
            Error::NotAKnotClosure { .. } => "NotAKnotClosure",
            Error::WrongTorus => "WrongTorus",
            Error::NoSolutionWithinBound(_) => "NoSolutionWithinBound",
            Error::MultipleSolutions(_) => "MultipleSolutions",
            Error::BudgetExhausted(_) => "BudgetExhausted",
            Error::ScreeningFailed(_) => "ScreeningFailed",
            Error::InvalidArgument(_) => "InvalidArgument",
            Error::Internal(_) => "Internal",
        }
    }
}
