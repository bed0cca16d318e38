//! Command-line front end for `linegeom`.
//!
//! [`run`] takes the argument list and two sinks so the whole CLI can be
//! driven in-process by tests; `main` only wires it to the real process.

mod commands;

use std::ffi::OsString;
use std::fmt;
use std::io::Write;

use clap::{Parser, Subcommand};

pub use commands::eval::EvalArgs;

/// Exit statuses.
pub mod exit {
    pub const OK: i32 = 0;
    pub const VERIFICATION_FAILED: i32 = 1;
    pub const USAGE: i32 = 2;
    pub const DOMAIN: i32 = 3;
}

#[derive(Parser, Debug)]
#[command(name = "linegeom", version, about = "Exact one-dimensional metrical geometry")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Evaluate one formula exactly
    Eval(EvalArgs),
    /// Print spread polynomial coefficient rows
    Spreadpoly(commands::spreadpoly::SpreadpolyArgs),
    /// Reproduce a built-in worked example
    Example(commands::example::ExampleArgs),
    /// Run an identity verification suite and print a JSON report
    Verify(commands::verify::VerifyArgs),
    /// Evaluate one request per line of a file
    Batch(commands::batch::BatchArgs),
}

/// A failure that ends a command.
#[derive(Debug)]
pub enum CliError {
    Core(linegeom::Error),
    Usage(String),
    FileNotFound(String),
}

impl CliError {
    pub fn name(&self) -> &str {
        match self {
            CliError::Core(e) => e.name(),
            CliError::Usage(_) => "UsageError",
            CliError::FileNotFound(_) => "FileNotFound",
        }
    }

    pub fn code(&self) -> i32 {
        match self {
            CliError::Core(e) if !e.is_parse() => exit::DOMAIN,
            _ => exit::USAGE,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "error: {}: {e}", e.name()),
            CliError::Usage(m) => write!(f, "error: UsageError: {m}"),
            CliError::FileNotFound(path) => write!(f, "error: FileNotFound: cannot read `{path}`"),
        }
    }
}

impl From<linegeom::Error> for CliError {
    fn from(e: linegeom::Error) -> Self {
        CliError::Core(e)
    }
}

/// Prefixes negative numeric literals such as `-3` or `-1/2,4;5,6` with a
/// space so the argument parser reads them as values, not flags. Element
/// parsing trims the space again.
pub(crate) fn shield_negative_literals<I, T>(args: I) -> Vec<OsString>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString>,
{
    args.into_iter()
        .map(|a| {
            let a: OsString = a.into();
            match a.to_str() {
                Some(s) if s.len() > 1 && s.starts_with('-') && s.as_bytes()[1].is_ascii_digit() => {
                    OsString::from(format!(" {s}"))
                }
                _ => a,
            }
        })
        .collect()
}

/// Runs the CLI and returns the process exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(shield_negative_literals(args)) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { exit::USAGE } else { exit::OK };
            let text = e.render().to_string();
            if code == exit::OK {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    let result = match &cli.command {
        Command::Eval(args) => commands::eval::run(args).map(|line| {
            let _ = writeln!(out, "{line}");
            exit::OK
        }),
        Command::Spreadpoly(args) => commands::spreadpoly::run(args, out),
        Command::Example(args) => commands::example::run(args, out),
        Command::Verify(args) => commands::verify::run(args, out),
        Command::Batch(args) => commands::batch::run(args, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "{e}");
            e.code()
        }
    }
}
