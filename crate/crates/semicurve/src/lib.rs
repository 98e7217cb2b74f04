//! Command line front end, serializable results, fixtures of the published
//! worked examples, and batch scans over `semicurve-core`.

pub mod cli;
pub mod commands;
pub mod dto;
pub mod error;
pub mod fixtures;
pub mod regress;
pub mod render;
pub mod scan;
pub mod spec;

pub use error::{CliError, Result};
