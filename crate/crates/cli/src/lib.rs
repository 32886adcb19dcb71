//! The `ngon` command-line tool: persistence, rendering, and reporting on
//! top of `ngon-core`.
//!
//! Split by concern: [`document`] is the versioned JSON polygon format,
//! [`render`] the deterministic SVG emitter, [`report`] the verification
//! report printers, and [`commands`] the clap surface plus the subcommand
//! bodies and their exit-code mapping.

pub mod commands;
pub mod document;
pub mod render;
pub mod report;

pub use commands::{run, Cli, CliError};
