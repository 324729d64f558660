//! Command-line front end for `grundy-core`.
//!
//! The binary is a thin wrapper around [`run`]; everything a command does
//! is available here so it can be driven in-process.

pub mod args;
mod commands;
pub mod report;
pub mod script;
pub mod sweep;

pub use args::Args;
pub use commands::run;
pub use report::{Execution, ExitStatus, RunReport};
