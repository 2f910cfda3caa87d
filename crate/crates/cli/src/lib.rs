//! Scenario files, CSV/SVG emitters and subcommands of the `micromorph`
//! binary.

pub mod app;
pub mod config;
mod error;
pub mod plot;
pub mod report;
pub mod scenarios;

pub use app::{execute, Cli, Command, Options};
pub use config::{parse_config, render, ScenarioConfig};
pub use error::CliError;
