use std::fmt;

use qca_zeta::Error as CoreError;

/// Process exit codes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExitStatus {
    Ok = 0,
    VerifyFailed = 1,
    InvalidInput = 2,
    NotAbsoluteForm = 3,
    Capability = 4,
}

impl ExitStatus {
    pub fn code(self) -> u8 {
        self as u8
    }
}

#[derive(Debug)]
pub enum CliError {
    Core(CoreError),
    Input(String),
    Io(String),
}

impl CliError {
    pub fn status(&self) -> ExitStatus {
        match self {
            CliError::Input(_) | CliError::Io(_) => ExitStatus::InvalidInput,
            CliError::Core(e) => match e {
                CoreError::NotAbsoluteForm(_) => ExitStatus::NotAbsoluteForm,
                CoreError::CapExceeded { .. } | CoreError::Capability(_) => ExitStatus::Capability,
                // Numerical breakdowns are reported as failed verification.
                CoreError::Quadrature(_)
                | CoreError::EigenSolver(_)
                | CoreError::Integrality { .. } => ExitStatus::VerifyFailed,
                _ => ExitStatus::InvalidInput,
            },
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Core(_) => "core",
            CliError::Input(_) => "input",
            CliError::Io(_) => "io",
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Input(m) => write!(f, "invalid input: {m}"),
            CliError::Io(m) => write!(f, "io error: {m}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        CliError::Core(e)
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Input(e.to_string())
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes() {
        assert_eq!(CliError::Input("x".into()).status().code(), 2);
        assert_eq!(
            CliError::Core(CoreError::NotAbsoluteForm("x".into()))
                .status()
                .code(),
            3
        );
        assert_eq!(
            CliError::Core(CoreError::Capability("x".into()))
                .status()
                .code(),
            4
        );
        let cap = CoreError::CapExceeded {
            what: "dense",
            n: 20,
            cap: 12,
        };
        assert_eq!(CliError::Core(cap).status().code(), 4);
        assert_eq!(
            CliError::Core(CoreError::Domain("x".into()))
                .status()
                .code(),
            2
        );
    }
}
