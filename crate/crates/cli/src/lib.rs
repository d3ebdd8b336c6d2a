//! File format, reports and subcommands behind the `dagdiam` binary.

pub mod commands;
pub mod format;
pub mod report;
mod verify;

pub use commands::{run, Cli, CliError, Outcome};
pub use format::{parse, serialize, FormatError, GraphFile};
pub use report::Report;
