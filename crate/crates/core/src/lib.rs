//! Rat Swarm Optimizer (RSO) and Modified Rat Swarm Optimizer (MRSO).
//!
//! The crate provides the two optimizers, the classical 23-function benchmark
//! suite, six constrained engineering design problems and the statistics
//! used to compare batches of runs.

pub mod benchmarks;
pub mod engineering;
pub mod error;
pub mod optimizer;
pub mod problem;
pub mod registry;
pub mod rng;
pub mod serde_real;
pub mod stats;

pub use error::{Error, Result};
pub use optimizer::{run, run_with_observer, Algorithm, Coefficients, RunConfig, RunRecord, SwarmState, UpdateRule};
pub use problem::{Problem, SearchSpace};
pub use rng::RngStream;
