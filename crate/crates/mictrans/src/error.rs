//! Crate-wide error type.
//!
//! The CLI maps [`Error`] variants onto exit codes: configuration and
//! format problems exit 2, data problems exit 3.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed file header or container structure.
    #[error("format error: {0}")]
    Format(String),

    /// Recognized container but unsupported encoding.
    #[error("unsupported: {0}")]
    Unsupported(String),

    /// Input signal shorter than the operation's minimum.
    #[error("input too short: {0}")]
    InputTooShort(String),

    /// Inconsistent or invalid configuration.
    #[error("config error: {0}")]
    Config(String),

    /// Tensor or grid dimensions incompatible with the operation.
    #[error("shape error: {0}")]
    Shape(String),

    /// Batch statistics need at least two samples.
    #[error("batch too small: {0}")]
    BatchTooSmall(String),

    /// Not enough data to satisfy the request.
    #[error("insufficient data: {0}")]
    InsufficientData(String),

    /// Unpaired training requested on domains that share source clips.
    #[error("pairing violation: {0}")]
    PairingViolation(String),

    /// Artifact feature contract does not match the runtime configuration.
    #[error("contract error: {0}")]
    Contract(String),

    /// Accuracy recovery undefined (upper bound does not exceed baseline).
    #[error("recovery undefined: {0}")]
    UndefinedRecovery(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    /// CLI exit code for this error: 2 for config/format problems,
    /// 3 for data problems.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InputTooShort(_)
            | Error::InsufficientData(_)
            | Error::PairingViolation(_) => 3,
            _ => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
