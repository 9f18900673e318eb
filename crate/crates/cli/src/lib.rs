//! Reports, batch runs and subcommands behind the `jonq` binary.

pub mod batch;
pub mod commands;
pub mod exit;
pub mod report;

pub use batch::{run_batch, BatchEntry, BatchOutput, EntryDefaults};
pub use commands::Outcome;
pub use report::{build_report, Options, Report};
