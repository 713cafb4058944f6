//! Session files, command dispatch and report rendering for the `semidual` binary.

pub mod commands;
pub mod polyparse;
pub mod report;
pub mod session;

pub use commands::{run, Cli, Outcome};
