use serde::Serialize;
use serde_json::Value;

use grundy_core::Error as CoreError;

/// Exit codes shared by every command.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(into = "i32")]
pub enum ExitStatus {
    Success = 0,
    /// Not chordal, a failed verification, an oracle cap.
    DomainFailure = 1,
    /// Bad arguments, unreadable or malformed input.
    Usage = 2,
}

impl From<ExitStatus> for i32 {
    fn from(s: ExitStatus) -> i32 {
        s as i32
    }
}

/// The single JSON object every command prints on stdout.
#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub command: &'static str,
    pub input: Value,
    pub outputs: Value,
    pub timing_ms: f64,
    pub exit_status: ExitStatus,
}

/// What a command produced, before printing.
#[derive(Debug)]
pub struct Execution {
    pub report: RunReport,
    /// Human-readable rendering.
    pub text: String,
    /// Raw artifact that replaces the JSON report on stdout (DIMACS from
    /// `gen` without `--out`).
    pub raw: Option<String>,
}

#[derive(Debug)]
pub struct CliError {
    pub status: ExitStatus,
    pub error: anyhow::Error,
}

impl CliError {
    pub fn usage(error: impl Into<anyhow::Error>) -> Self {
        Self {
            status: ExitStatus::Usage,
            error: error.into(),
        }
    }

    pub fn domain(error: impl Into<anyhow::Error>) -> Self {
        Self {
            status: ExitStatus::DomainFailure,
            error: error.into(),
        }
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::NotChordal(_)
            | CoreError::OracleCapExceeded { .. }
            | CoreError::InvalidColoring => Self::domain(e),
            _ => Self::usage(e),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        Self::usage(e)
    }
}

impl From<anyhow::Error> for CliError {
    fn from(e: anyhow::Error) -> Self {
        Self::usage(e)
    }
}

pub(crate) fn one_based(vs: &[usize]) -> Vec<usize> {
    vs.iter().map(|v| v + 1).collect()
}
