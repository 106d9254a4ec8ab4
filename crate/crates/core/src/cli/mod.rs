//! `modack` command-line front end.
//!
//! All logic lives here so commands can be driven in-process; `main.rs` only
//! forwards `std::env::args_os()` to [`run`]. Exit codes: 0 success, 1
//! fast/reference mismatch or I/O failure, 2 usage error, 3 infeasible size.

mod args;
mod commands;

use std::ffi::OsString;
use std::io::Write;

use clap::error::ErrorKind;
use clap::Parser;

pub use args::{Cli, Command, Format, Method};

use crate::error::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INFEASIBLE: i32 = 3;

#[derive(Debug)]
pub(crate) enum Failure {
    Lib(Error),
    Mismatch(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

fn exit_code(f: &Failure) -> i32 {
    match f {
        Failure::Mismatch(_) => EXIT_FAILURE,
        Failure::Lib(Error::Io(_)) => EXIT_FAILURE,
        Failure::Lib(e) if e.is_size_error() => EXIT_INFEASIBLE,
        Failure::Lib(_) => EXIT_USAGE,
    }
}

/// Parses `args` (including the program name) and runs one command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{rendered}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(stderr, "{rendered}");
                    EXIT_USAGE
                }
            };
        }
    };
    match commands::execute(&cli, stdout, stderr) {
        Ok(()) => EXIT_OK,
        Err(f) => {
            match &f {
                Failure::Lib(e) => {
                    let _ = writeln!(stderr, "error: {e}");
                }
                Failure::Mismatch(msg) => {
                    let _ = writeln!(stderr, "{msg}");
                }
            }
            exit_code(&f)
        }
    }
}
