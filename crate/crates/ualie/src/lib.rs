//! File formats, report rendering and the `ualie` command line, on top of
//! [`ualie_core`].

pub mod cli;
pub mod format;
pub mod report;

pub use cli::run;
pub use ualie_core as core;
