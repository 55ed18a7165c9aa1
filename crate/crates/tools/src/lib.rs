//! File formats, JSON reports and command dispatch for the `bentkit` tool.

pub mod build;
pub mod cli;
pub mod error;
pub mod format;
pub mod params;

pub use error::CliError;
pub use format::{parse_truth_table, read_truth_table, serialize_truth_table, write_truth_table, FormatError};
