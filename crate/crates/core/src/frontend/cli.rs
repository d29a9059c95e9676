//! The `flca` command line: `eval`, `table` and `selftest`.

use std::io::Write;

use clap::{Parser, Subcommand};

use crate::atom::Prime;
use crate::frontend::eval_str;
use crate::frontend::table::{self, TableOp};
use crate::k0::select_left_inverse;
use crate::selftest::{self, SUITES};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_INTERNAL: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "flca", version, about = "Calculator for locally compact abelian groups of finite ranks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate an expression, e.g. `rhom(Q, Z)` or `k0mul(k0(T), k0(T))`.
    Eval {
        expr: String,
        /// Print `{"kind", "value"}` JSON instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Tabulate a binary operation over a catalogue of atoms.
    Table {
        /// rhom, hom, tensor, dtensor or k0mul.
        #[arg(long, default_value = "rhom")]
        op: TableOp,
        #[arg(long, value_delimiter = ',', default_value = "2")]
        primes: Vec<u64>,
        #[arg(long = "exps", value_delimiter = ',', default_value = "1")]
        exponents: Vec<u32>,
        /// Include the finite adeles among the atoms.
        #[arg(long)]
        with_afin: bool,
        /// Tab-separated output (the default).
        #[arg(long, conflicts_with = "json")]
        tsv: bool,
        /// JSON output: `{"op", "atoms", "cells"}`.
        #[arg(long)]
        json: bool,
    },
    /// Run the built-in consistency suites.
    Selftest {
        /// Run only this suite.
        #[arg(long)]
        suite: Option<String>,
    },
}

/// Runs the command line on `args` (including the program name) and returns
/// the process exit code.
pub fn run_cli<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(rendered.as_bytes()) } else { out.write_all(rendered.as_bytes()) };
            return code;
        }
    };
    match cli.command {
        Command::Eval { expr, json } => eval(&expr, json, out, err),
        Command::Table { op, primes, exponents, with_afin, json, .. } => {
            run_table(op, &primes, &exponents, with_afin, json, out, err)
        }
        Command::Selftest { suite } => run_selftest(suite.as_deref(), out, err),
    }
}

fn eval(expr: &str, json: bool, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match eval_str(expr) {
        Ok(v) => {
            let line = if json { v.to_json().to_string() } else { v.render_text() };
            let _ = writeln!(out, "{line}");
            EXIT_OK
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if e.is_internal() { EXIT_INTERNAL } else { EXIT_INPUT }
        }
    }
}

fn run_table(
    op: TableOp,
    primes: &[u64],
    exponents: &[u32],
    with_afin: bool,
    json: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    let atoms = primes
        .iter()
        .map(|&p| Prime::new(p))
        .collect::<crate::Result<Vec<_>>>()
        .and_then(|ps| table::table_atoms(&ps, exponents, with_afin));
    let atoms = match atoms {
        Ok(a) => a,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_INPUT;
        }
    };
    let _ = if json {
        writeln!(out, "{}", table::to_json(op, &atoms))
    } else {
        out.write_all(table::to_tsv(op, &atoms).as_bytes())
    };
    EXIT_OK
}

fn run_selftest(only: Option<&str>, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let suites: Vec<_> = match only {
        Some(name) => match selftest::suite(name) {
            Some(s) => vec![s],
            None => {
                let names: Vec<&str> = SUITES.iter().map(|s| s.name).collect();
                let _ = writeln!(err, "error: unknown suite `{name}` (expected one of {})", names.join(", "));
                return EXIT_INPUT;
            }
        },
        None => SUITES.iter().collect(),
    };
    let mut failed = false;
    for s in suites {
        match (s.run)() {
            Ok(n) if s.name == "left_inverse" => {
                let winner = select_left_inverse().map_or("none".to_string(), |w| w.to_string());
                let _ = writeln!(out, "{}: ok ({n} checks, {winner} recipe selected)", s.name);
            }
            Ok(n) => {
                let _ = writeln!(out, "{}: ok ({n} checks)", s.name);
            }
            Err(msg) => {
                failed = true;
                let _ = writeln!(out, "{}: FAILED: {msg}", s.name);
            }
        }
    }
    if failed { EXIT_INTERNAL } else { EXIT_OK }
}

impl clap::builder::ValueParserFactory for TableOp {
    type Parser = clap::builder::ValueParser;

    fn value_parser() -> Self::Parser {
        clap::builder::ValueParser::new(|s: &str| s.parse::<TableOp>())
    }
}
