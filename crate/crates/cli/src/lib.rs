//! Command-line plumbing for `hilbound-core`: run configuration, built-in
//! fixtures, input loading and JSON reports.

pub mod commands;
pub mod config;
pub mod fixtures;
pub mod json;

pub use config::{OutputFormat, RunConfig};
