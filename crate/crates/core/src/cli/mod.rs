//! Command-line layer: configuration, bundled fixtures, report documents and
//! the dispatcher used by the `perispec` binary.

mod config;
pub mod fixtures;
mod report;
mod run;

pub use config::{Command, GraphArgs, OutputFormat, RunConfig};
pub use report::{Cell, ReportDocument, Section};
pub use run::{load_graph, run, RunOutcome, EXIT_IO, EXIT_NUMERIC, EXIT_OK, EXIT_USAGE, EXIT_VALIDATION};
