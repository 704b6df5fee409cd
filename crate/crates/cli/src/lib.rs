//! Library side of the `ein3` command-line tool: configuration loading,
//! subcommand bodies and point-cloud export.

pub mod commands;
pub mod config;
pub mod export;
