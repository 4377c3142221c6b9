//! Command-line front end for `newton-core`: expression parsing, text and
//! JSON reports, Newton polygon output and oracle verification.

pub mod app;
pub mod parse;
pub mod polygon;
pub mod report;

pub use app::{run, run_from, Cli, CliError, Outcome};
pub use parse::{parse_expr, parse_poly, ParseError, PolyExpr};
