use std::fmt;
use std::process::ExitCode;

use mustafin_core::Error;
use serde::{Deserialize, Serialize};

/// Failure of a command, classified by exit status.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    /// Unreadable input, malformed JSON, bad vector syntax or bad usage.
    Parse { kind: &'static str, message: String },
    /// The input is well formed but outside an operation's domain.
    Domain(Error),
    /// A checked invariant failed.
    Invariant(String),
}

impl CliError {
    pub fn parse(kind: &'static str, message: impl Into<String>) -> Self {
        CliError::Parse {
            kind,
            message: message.into(),
        }
    }

    pub fn exit_code(&self) -> ExitCode {
        ExitCode::from(match self {
            CliError::Parse { .. } => 2,
            CliError::Domain(Error::InvariantViolation(_)) | CliError::Invariant(_) => 4,
            CliError::Domain(_) => 3,
        })
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Parse { kind, .. } => kind,
            CliError::Invariant(_) => "invariant_violation",
            CliError::Domain(e) => match e {
                Error::Dimension { .. } => "dimension_mismatch",
                Error::AmbientTooSmall(_) => "ambient_too_small",
                Error::DegenerateSegment(_) => "degenerate_segment",
                Error::Shape { .. } => "shape",
                Error::NotInHull(_) => "not_in_hull",
                Error::Contract(_) => "contract",
                Error::UndefinedMap => "undefined_map",
                Error::InvariantViolation(_) => "invariant_violation",
            },
        }
    }

    pub fn record(&self) -> ErrorRecord {
        ErrorRecord {
            kind: self.kind().to_string(),
            message: self.to_string(),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parse { message, .. } => f.write_str(message),
            CliError::Domain(e) => write!(f, "{e}"),
            CliError::Invariant(message) => f.write_str(message),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Domain(e)
    }
}

/// Machine-readable error written to stderr.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorRecord {
    pub kind: String,
    pub message: String,
}
