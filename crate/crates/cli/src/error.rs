use std::process::ExitCode;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Numerical(String),
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        match self {
            Self::Usage(_) => ExitCode::from(1),
            Self::Numerical(_) => ExitCode::from(2),
        }
    }
}

/// Attaches the grid point to a library failure.
pub fn at(what: &str, value: f64) -> impl FnOnce(ucn_gas::Error) -> CliError + '_ {
    move |e| CliError::Numerical(format!("at {what} = {value}: {e}"))
}
