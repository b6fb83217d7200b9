//! Library side of the `losanitsch` command-line tool.
//!
//! The binary is a thin clap wrapper around [`commands::run`]; everything
//! else (b-file parsing, sequence linearization, shift-search comparison,
//! cached OEIS fetching, triangle rendering) lives here so it can be tested
//! without spawning a process.

pub mod bfile;
pub mod commands;
pub mod compare;
pub mod error;
pub mod fetch;
pub mod render;
pub mod view;

pub use error::{CliError, EXIT_FAILURE, EXIT_SUCCESS, EXIT_USAGE};
