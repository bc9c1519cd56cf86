//! Command-line front end: expression parsing, evaluation and rendering.

pub mod commands;
pub mod eval;
pub mod golden;
pub mod parse;

pub use commands::{run, Outcome};
pub use eval::{CliError, EvalMode, Field};
pub use parse::{parse, Expr, SyntaxError};
