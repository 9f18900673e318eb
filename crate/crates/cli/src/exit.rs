//! Process exit codes and serializable error records.

use jonq_core::Error;
use serde::{Deserialize, Serialize};

pub const OK: i32 = 0;
/// Oracle failure or broken internal invariant.
pub const FAILURE: i32 = 1;
pub const PARSE: i32 = 2;
pub const DOMAIN: i32 = 3;
pub const MISMATCH: i32 = 4;

pub fn code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } => PARSE,
        Error::Domain(_) => DOMAIN,
        Error::Mismatch { .. } => MISMATCH,
        Error::NotStabilized { .. } | Error::Internal(_) => FAILURE,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorRecord {
    pub kind: String,
    pub message: String,
    /// Byte offset for parse errors.
    pub position: Option<usize>,
    pub exit_code: i32,
}

impl From<&Error> for ErrorRecord {
    fn from(e: &Error) -> Self {
        let (kind, position) = match e {
            Error::Parse { pos, .. } => ("parse", Some(*pos)),
            Error::Domain(_) => ("domain", None),
            Error::Mismatch { .. } => ("mismatch", None),
            Error::NotStabilized { .. } => ("not-stabilized", None),
            Error::Internal(_) => ("internal", None),
        };
        ErrorRecord {
            kind: kind.into(),
            message: e.to_string(),
            position,
            exit_code: code(e),
        }
    }
}
