use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("strand count {0} is outside 2..={max}", max = crate::types::MAX_STRANDS)]
    StrandCount(usize),

    #[error("strand index {index} is outside 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("a letter needs two distinct strands, got {0} twice")]
    RepeatedIndex(usize),

    #[error("strand counts differ: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },

    #[error("crossing position {position} is outside 1..={max}")]
    PositionOutOfRange { position: usize, max: usize },

    #[error("diagram is not pure: strands end in order {0:?}")]
    NotPure(Vec<usize>),

    #[error("letter {position} is bad; reconstruction needs an all-good word")]
    BadLetter { position: usize },

    #[error("word does not act trivially on the canonical sign set")]
    NontrivialAction,

    #[error("sign set before letter {position} is not realizable")]
    Unrealizable { position: usize },

    #[error("internal inconsistency at letter {position}: {message}")]
    Inconsistent { position: usize, message: String },

    #[error("unknown group mode `{0}`")]
    UnknownMode(String),

    #[error("parse error at token {token}: {message}")]
    Parse { token: usize, message: String },
}

impl Error {
    /// True for errors that describe a violated precondition of an otherwise
    /// well-formed input, as opposed to malformed input.
    pub fn is_precondition(&self) -> bool {
        matches!(
            self,
            Error::NotPure(_)
                | Error::BadLetter { .. }
                | Error::NontrivialAction
                | Error::Unrealizable { .. }
                | Error::Inconsistent { .. }
                | Error::StrandMismatch { .. }
        )
    }
}
