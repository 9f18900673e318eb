use thiserror::Error;

/// Errors raised by the algebra, the classification engine and the parser.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An operation was called outside its mathematical domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// Text input could not be parsed. `pos` is a byte offset into the input.
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    /// The closed-form value and the degree-growth value disagree.
    #[error("consistency error: formula gives mu = {formula}, degree growth gives mu = {oracle} ({detail})")]
    Mismatch {
        formula: u64,
        oracle: u64,
        detail: String,
    },

    /// Degree differences never settled into an arithmetic progression.
    #[error("oracle did not stabilize after {kmax} iterates; degrees = {degrees:?}")]
    NotStabilized { kmax: usize, degrees: Vec<u64> },

    /// An internal invariant did not hold.
    #[error("internal consistency error: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            pos,
            msg: msg.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
