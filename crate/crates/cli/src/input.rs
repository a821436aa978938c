//! Argument loading: values arrive either inline as JSON or as a path to a
//! JSON file.

use serde::de::DeserializeOwned;

pub const EXIT_USAGE: u8 = 1;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_NEGATIVE: u8 = 3;

/// A failure with the exit code it maps to.
pub struct CliError {
    pub message: String,
    pub code: u8,
}

impl CliError {
    pub fn input(message: impl Into<String>) -> CliError {
        CliError {
            message: message.into(),
            code: EXIT_INPUT,
        }
    }
}

impl From<multitilde::Error> for CliError {
    fn from(e: multitilde::Error) -> CliError {
        CliError::input(e.to_string())
    }
}

fn load_source(arg: &str) -> Result<String, CliError> {
    let trimmed = arg.trim_start();
    if trimmed.starts_with('{') || trimmed.starts_with('[') {
        return Ok(arg.to_string());
    }
    std::fs::read_to_string(arg).map_err(|e| CliError::input(format!("cannot read {arg}: {e}")))
}

/// Parses an inline JSON value or the contents of a JSON file; `what` names
/// the argument in error messages.
pub fn parse_json<T: DeserializeOwned>(what: &str, arg: &str) -> Result<T, CliError> {
    let source = load_source(arg)?;
    serde_json::from_str(&source)
        .map_err(|e| CliError::input(format!("failed to parse {what}: {e}")))
}

/// Worker count: the flag wins, then the TILDE_WORKERS environment
/// variable, then one.
pub fn resolve_workers(flag: Option<usize>) -> Result<usize, CliError> {
    if let Some(w) = flag {
        return check_workers(w);
    }
    match std::env::var("TILDE_WORKERS") {
        Ok(raw) => {
            let w: usize = raw.parse().map_err(|_| {
                CliError::input(format!("TILDE_WORKERS must be a number, got {raw:?}"))
            })?;
            check_workers(w)
        }
        Err(_) => Ok(1),
    }
}

fn check_workers(w: usize) -> Result<usize, CliError> {
    if w == 0 {
        return Err(CliError::input("worker count must be at least 1"));
    }
    Ok(w)
}
