//! Command-line front end for `tripartite-core`: JSON state files, CSV tables
//! and the `classify`, `measure`, `gsd`, `sweep` and `random` commands.
//!
//! Exit status: 0 on success, 2 when the state file cannot be read or is not
//! a valid state, 3 when a decision lies within a factor 10 of the threshold
//! (the report is still printed), 1 for anything else.

pub mod commands;
pub mod error;
pub mod report;
pub mod statefile;
pub mod table;

pub use commands::{run, Cli, Command, Outcome};
pub use error::CliError;
