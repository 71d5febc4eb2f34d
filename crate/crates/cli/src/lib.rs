//! The `eorbit` command-line front end: argument grammar, command handlers,
//! wire formats and the built-in verification suites.

pub mod args;
pub mod commands;
pub mod table;
pub mod verify;
pub mod wire;

use std::fmt;

/// Why a command failed, which decides the exit status.
#[derive(Debug)]
pub enum CliError {
    /// An error raised by the library; the variant name goes to stderr.
    Domain(eorbit_core::Error),
    /// A file could not be read or written.
    Io(String),
    /// Arguments that parse but cannot be used together.
    Usage(String),
    /// At least one verification check failed.
    VerificationFailed(usize),
}

impl CliError {
    /// Process exit status: 2 for usage errors, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }

    /// The tag printed before the message.
    pub fn name(&self) -> &'static str {
        match self {
            CliError::Domain(e) => e.name(),
            CliError::Io(_) => "IoError",
            CliError::Usage(_) => "UsageError",
            CliError::VerificationFailed(_) => "VerificationFailed",
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Domain(e) => write!(f, "{e}"),
            CliError::Io(m) | CliError::Usage(m) => f.write_str(m),
            CliError::VerificationFailed(n) => write!(f, "{n} check(s) failed"),
        }
    }
}

impl From<eorbit_core::Error> for CliError {
    fn from(e: eorbit_core::Error) -> Self {
        CliError::Domain(e)
    }
}

pub type CliResult<T> = Result<T, CliError>;

/// Reads the thread cap from `EORBIT_THREADS`: `None` when unset.
pub fn thread_cap(value: Option<&str>) -> CliResult<Option<usize>> {
    match value.map(str::trim) {
        None | Some("") => Ok(None),
        Some(v) => match v.parse::<usize>() {
            Ok(n) if n > 0 => Ok(Some(n)),
            _ => Err(CliError::Usage(format!("EORBIT_THREADS must be a positive integer, got `{v}`"))),
        },
    }
}
