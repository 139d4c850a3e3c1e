//! Convergence-study harness for the `fracsub-core` solvers: table
//! reproduction with golden comparison, CSV reports, TOML run configuration
//! and a fast invariant suite.

pub mod checks;
pub mod config;
pub mod error;
pub mod golden;
pub mod report;
pub mod tables;

pub use error::{HarnessError, Result};
