//! Command implementations behind the `nclab` binary. Every command returns a [`Report`]
//! whose JSON form is canonical; CSV and pretty tables are derived from it.

pub mod commands;
pub mod config;
pub mod error;
pub mod report;

pub use config::{Format, RunConfig, Settings};
pub use error::CliError;
pub use report::Report;
