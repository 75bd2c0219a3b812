//! Standard-library companion of `rotsphere-core`: run configuration,
//! CSV/JSON output, figure presets, thread-pool drivers and the CLI.

pub mod cli;
pub mod config;
pub mod output;
pub mod parallel;
pub mod presets;
pub mod run;

pub use config::{parse_config, ConfigError, Format, GridSpec, Mode, RunConfig};
pub use parallel::Executor;
pub use run::{run, Outcome, RunError};
