//! Command-line front end for `trig-nderiv`: table generation, evaluation,
//! cross-engine verification, benchmarking and LaTeX output.

pub mod commands;
pub mod latex;
pub mod report;
pub mod wire;
pub mod xarg;

pub use commands::{run, run_args, Cli, Config};
