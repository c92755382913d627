//! File formats, the command-line surface, the example registry, search and suites.

mod commands;
pub mod format;
pub mod registry;
pub mod search;
pub mod suites;
pub mod text;

pub use commands::{check_file, run, Kind, Outcome};
