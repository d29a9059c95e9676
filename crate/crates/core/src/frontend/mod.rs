//! Expression language, tables, and the command-line driver.

pub mod cli;
mod eval;
mod parse;
pub mod table;
mod value;

pub use eval::{eval_str, evaluate};
pub use parse::{parse, Arg, Expr, Func};
pub use value::{k0_json, Value};
