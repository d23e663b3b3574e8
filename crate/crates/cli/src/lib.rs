//! Command-line front end for `prefixdp-core`: argument parsing, weight and
//! spec input formats, JSON reports, oracle verification and benchmarks.

pub mod bench;
pub mod cli;
pub mod error;
pub mod input;
pub mod problem;

pub use error::CliError;
