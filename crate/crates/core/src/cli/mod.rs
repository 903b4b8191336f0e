//! Pieces of the `ecckit` binary that are worth testing without a process.

pub mod io;
pub mod report;
pub mod verify;

pub use io::{format_graph, load_graph, parse_graph, save_graph, GraphFormat};
pub use report::{classify_report, cover_report, ClassifyReport, CoverReport, Method, ReportOptions};
pub use verify::{run_verify, Checks, VerifyOptions, VerifySummary, Violation};
