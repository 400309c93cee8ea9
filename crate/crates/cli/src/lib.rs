//! Library half of the `weyl-dl` command: configuration, the character-table
//! cache, command execution and report rendering.

pub mod cache;
pub mod commands;
pub mod config;
pub mod error;
pub mod report;

pub use commands::{run, Command, Outcome, Target};
pub use config::{Config, OutputFormat};
pub use error::CliError;
