//! Model-file parsing and report rendering shared by the binary and the web demo.

pub mod parse;
pub mod report;

pub use parse::{
    parse_expr, parse_model, parse_model_file, parse_ring, render_model_file, ModelFile, ParseError,
};
pub use report::{
    parse_prime, render_report, render_table, verify, Format, PrimeSelection, Record, Report,
};
