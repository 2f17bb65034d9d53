//! Model files, reports and plots for Minkowskian branching structures, and
//! the `mbs` command line tool built on them.

pub mod args;
pub mod commands;
pub mod file;
pub mod plot;

use std::ffi::OsString;
use std::io::Write;

use clap::Parser;

pub use commands::{Failure, Status};

/// Exit code when every executed check passed.
pub const EXIT_PASS: u8 = 0;
/// Exit code when a check failed.
pub const EXIT_FAIL: u8 = 1;
/// Exit code for unreadable input: bad flags, files or model contents.
pub const EXIT_INPUT: u8 = 2;

/// Runs one command line and returns the process exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match args::Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let informational = !e.use_stderr();
            let text = e.render().to_string();
            let _ = if informational { write!(out, "{text}") } else { write!(err, "{text}") };
            return if informational { EXIT_PASS } else { EXIT_INPUT };
        }
    };
    match commands::execute(&cli.command, out) {
        Ok(Status::Pass) => EXIT_PASS,
        Ok(Status::Fail) => EXIT_FAIL,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INPUT
        }
    }
}
