//! Experiment runner behind the `ratswarm` binary: seeded batches, result files,
//! summary tables and file-to-file comparison.

pub mod app;
pub mod error;
pub mod experiment;
pub mod output;
pub mod report;

pub use error::CliError;
pub use experiment::{run_experiment, stream_id, Entry, Manifest, ResultFile, SCHEMA_VERSION};
