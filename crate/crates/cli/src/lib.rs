//! Command-line front end: map parsing, job dispatch, reports and the benchmark harness.

pub mod bench;
pub mod field;
pub mod parse;
pub mod print;
pub mod run;

pub use field::FieldSpec;
pub use parse::{parse_map, ParseError};
pub use run::{run, Command, Job, Report, RunError};
