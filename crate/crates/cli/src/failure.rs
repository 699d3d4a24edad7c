use double_hurwitz::Error;
use thiserror::Error;

pub const EXIT_PRECONDITION: u8 = 2;
pub const EXIT_RESOURCE: u8 = 3;
pub const EXIT_VERIFICATION: u8 = 4;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Engine(#[from] Error),

    #[error("{0}")]
    Verification(String),

    #[error("output failed: {0}")]
    Output(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Engine(e) => match e {
                Error::Resource { .. } | Error::Inconclusive(_) | Error::Io(_) => EXIT_RESOURCE,
                Error::Inconsistent(_) => EXIT_VERIFICATION,
                _ => EXIT_PRECONDITION,
            },
            CliError::Verification(_) => EXIT_VERIFICATION,
            CliError::Output(_) => EXIT_RESOURCE,
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            CliError::Engine(e) => match e {
                Error::SizeMismatch { .. } => "size_mismatch",
                Error::Precondition(_) => "precondition",
                Error::Resource { .. } => "resource",
                Error::OutOfBounds(_) => "out_of_bounds",
                Error::Inconsistent(_) => "inconsistent",
                Error::Inconclusive(_) => "inconclusive",
                Error::UnsupportedGenus { .. } => "unsupported_genus",
                Error::Excluded { .. } => "excluded",
                Error::Exceptional(_) => "no_closed_form",
                Error::Parse(_) => "parse",
                Error::Io(_) => "io",
            },
            CliError::Verification(_) => "verification",
            CliError::Output(_) => "output",
        }
    }

    /// `{"error": kind, "message": text, "exit_code": n}`.
    pub fn to_json(&self) -> String {
        serde_json::json!({
            "error": self.kind(),
            "message": self.to_string(),
            "exit_code": self.exit_code(),
        })
        .to_string()
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Output(e.to_string())
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Output(e.to_string())
    }
}
