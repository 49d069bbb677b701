//! Building, querying and measuring critical simplex diagrams from files.
//!
//! The `csd` binary is a thin layer over these functions. Exit codes: 0 on
//! success, 2 for unreadable or malformed input, 3 for input that cannot form
//! a valid filtration, 4 when `stats --verify` finds a difference.

pub mod commands;
pub mod error;
pub mod input;
pub mod klein;
pub mod quantize;
pub mod report;

pub use commands::{QueryKind, StatsOptions};
pub use error::{CliError, CliResult};
pub use quantize::Quantizer;
pub use report::StatsReport;
