//! `sog`: batch rendering, trace export and the HTTP service for state-o-grams.

pub mod api;
pub mod commands;

pub use commands::{cmd_dj, cmd_render, cmd_trace, CliError, EXIT_ENVIRONMENT, EXIT_USER};
