//! Command dispatch. Reports go to stdout (or `--out`), diagnostics to stderr.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use nonassoc::builtin_algebra;
use nonassoc::io::{export_algebra, load_algebra};
use nonassoc::laws::Status;
use nonassoc::susy::{spectral_pairing_report, SpectrumConfig, Superpotential};
use nonassoc::Algebra;
use serde::Serialize;

use crate::expr::{evaluate, parse_expression};
use crate::suites::{run_suite, Suite, SuiteOptions};
use crate::tables::{table_json, table_text};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_IO: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "nonassoc",
    version,
    about = "Exact nonassociative algebra and SUSY operator checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the multiplication table of a built-in algebra.
    Tables {
        algebra: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run a verification suite; exit 1 if any check misses its expectation.
    Verify {
        #[arg(long, default_value = "all")]
        suite: Suite,
        /// Omit elapsed times so that reports are byte-for-byte reproducible.
        #[arg(long)]
        no_timing: bool,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Zero-divisor scan: maximum number of signed basis elements per factor.
        #[arg(long, default_value_t = 2)]
        zero_divisor_depth: usize,
        /// Random pairs per algebra for the composition law.
        #[arg(long, default_value_t = 1000)]
        samples: usize,
    },
    /// Evaluate an expression in a built-in algebra.
    Eval {
        #[arg(long)]
        algebra: String,
        expression: String,
    },
    /// Compare the low spectra of the two partner Hamiltonians.
    Spectrum {
        #[arg(long, default_value = "quadratic")]
        superpotential: Superpotential,
        /// `lo,hi`
        #[arg(long, default_value = "-10,10", allow_hyphen_values = true, value_parser = parse_domain)]
        domain: (f64, f64),
        #[arg(long, default_value_t = 2000)]
        grid: usize,
        #[arg(long, default_value_t = 6)]
        levels: usize,
        #[arg(long, default_value_t = 1e-3)]
        tol: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write a built-in algebra to a JSON definition file.
    ExportAlgebra { name: String, path: PathBuf },
    /// Read a JSON definition file and print its table.
    LoadAlgebra {
        path: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

fn parse_domain(s: &str) -> Result<(f64, f64), String> {
    let (lo, hi) = s.split_once(',').ok_or("expected lo,hi")?;
    let parse = |v: &str| v.trim().parse::<f64>().map_err(|e| format!("{v:?}: {e}"));
    Ok((parse(lo)?, parse(hi)?))
}

/// Sorted keys, trailing newline.
pub fn to_json(value: &impl Serialize) -> String {
    let value = serde_json::to_value(value).expect("reports serialize");
    let mut text = serde_json::to_string_pretty(&value).expect("values serialize");
    text.push('\n');
    text
}

struct Io<'a> {
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

impl Io<'_> {
    fn fail(&mut self, code: i32, message: impl std::fmt::Display) -> i32 {
        let _ = writeln!(self.err, "error: {message}");
        code
    }

    fn emit(&mut self, text: &str, path: Option<&Path>) -> i32 {
        match path {
            Some(p) => match std::fs::write(p, text) {
                Ok(()) => EXIT_OK,
                Err(e) => self.fail(EXIT_IO, format_args!("{}: {e}", p.display())),
            },
            None => match self.out.write_all(text.as_bytes()) {
                Ok(()) => EXIT_OK,
                Err(e) => self.fail(EXIT_IO, e),
            },
        }
    }

    fn table(&mut self, alg: &Algebra, format: Format) -> i32 {
        let text = match format {
            Format::Text => table_text(alg),
            Format::Json => to_json(&table_json(alg)),
        };
        self.emit(&text, None)
    }
}

/// Runs one command line (including the program name) and returns the exit code.
pub fn execute<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let mut io = Io { out, err };
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { io.err } else { io.out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match cli.command {
        Command::Tables { algebra, format } => match builtin_algebra(&algebra) {
            Ok(alg) => io.table(&alg, format),
            Err(e) => io.fail(EXIT_USAGE, e),
        },
        Command::Verify {
            suite,
            no_timing,
            out,
            zero_divisor_depth,
            samples,
        } => {
            let opts = SuiteOptions {
                zero_divisor_depth,
                composition_samples: samples,
                timing: !no_timing,
            };
            let report = match run_suite(suite, &opts) {
                Ok(r) => r,
                Err(e) => return io.fail(EXIT_USAGE, e),
            };
            for c in report.checks.iter().filter(|c| !c.met) {
                let _ = writeln!(
                    io.err,
                    "unmet: {} on {} (expected {:?}, got {:?})",
                    c.report.law_id, c.report.algebra, c.expected, c.report.status
                );
            }
            match io.emit(&to_json(&report), out.as_deref()) {
                EXIT_OK if report.status == Status::Fail => EXIT_FAILED,
                code => code,
            }
        }
        Command::Eval {
            algebra,
            expression,
        } => {
            let alg = match builtin_algebra(&algebra) {
                Ok(a) => a,
                Err(e) => return io.fail(EXIT_USAGE, e),
            };
            let parsed = match parse_expression(&expression) {
                Ok(p) => p,
                Err(e) => return io.fail(EXIT_USAGE, e),
            };
            for w in &parsed.warnings {
                let _ = writeln!(io.err, "warning: {w}");
            }
            match evaluate(&parsed.expr, &alg) {
                Ok(value) => io.emit(&format!("{value}\n"), None),
                Err(e) => io.fail(EXIT_USAGE, e),
            }
        }
        Command::Spectrum {
            superpotential,
            domain,
            grid,
            levels,
            tol,
            out,
        } => {
            let cfg = SpectrumConfig {
                superpotential,
                domain,
                grid,
                levels,
                tol,
            };
            match spectral_pairing_report(&cfg) {
                Ok(report) => match io.emit(&to_json(&report), out.as_deref()) {
                    EXIT_OK if report.status == Status::Fail => EXIT_FAILED,
                    code => code,
                },
                Err(e) => io.fail(EXIT_USAGE, e),
            }
        }
        Command::ExportAlgebra { name, path } => {
            let alg = match builtin_algebra(&name) {
                Ok(a) => a,
                Err(e) => return io.fail(EXIT_USAGE, e),
            };
            match export_algebra(&alg, &path) {
                Ok(()) => EXIT_OK,
                Err(e) => io.fail(EXIT_IO, e),
            }
        }
        Command::LoadAlgebra { path, format } => match load_algebra(&path) {
            Ok(alg) => io.table(&alg, format),
            Err(e @ nonassoc::io::FileError::Io { .. }) => io.fail(EXIT_IO, e),
            Err(e) => io.fail(EXIT_USAGE, e),
        },
    }
}
