//! Command-line front end. [`run`] is the whole program minus process exit.

mod args;
mod commands;
mod output;

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufWriter, Write};

use clap::Parser;

pub use args::{Cli, Command, Format};
pub use output::{Cell, Document, Table, SCHEMA, UNITS};

use crate::error::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_REJECTED: i32 = 2;
pub const EXIT_VERIFICATION: i32 = 3;

/// Why a command did not succeed.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Rejected(Error),
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Usage(_) => EXIT_USAGE,
            Failure::Rejected(_) => EXIT_REJECTED,
        }
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Usage(m) => write!(f, "usage error: {m}"),
            Failure::Rejected(e) => write!(f, "{e}"),
        }
    }
}

/// Parses `argv`, runs the command and returns the process exit code.
/// `version` is printed in output headers.
pub fn run<I, T>(argv: I, version: &str, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(stderr, "{text}");
                EXIT_USAGE
            } else {
                let _ = write!(stdout, "{text}");
                EXIT_OK
            };
        }
    };
    let (output, result) = dispatch(&cli.command);
    let (doc, passed) = match result {
        Ok(v) => v,
        Err(failure) => {
            let _ = writeln!(stderr, "hyperlandau {}: {failure}", cli.command.name());
            return failure.exit_code();
        }
    };
    let format = output.format.unwrap_or(match cli.command {
        Command::Verify(_) => Format::Json,
        _ => Format::Csv,
    });
    let written = match &output.out {
        Some(path) => File::create(path).and_then(|f| {
            let mut w = BufWriter::new(f);
            doc.write(format, version, &mut w)?;
            w.flush()
        }),
        None => doc.write(format, version, stdout),
    };
    if let Err(e) = written {
        let _ = writeln!(stderr, "hyperlandau: cannot write output: {e}");
        return EXIT_USAGE;
    }
    if passed {
        EXIT_OK
    } else {
        let _ = writeln!(stderr, "hyperlandau verify: checks failed");
        EXIT_VERIFICATION
    }
}

fn dispatch(command: &Command) -> (&args::OutputArgs, Result<(Document, bool), Failure>) {
    let ok = |r: Result<Document, Failure>| r.map(|d| (d, true));
    match command {
        Command::Spectrum(a) => (&a.output, ok(commands::spectrum(a))),
        Command::Eigenfunction(a) => (&a.output, ok(commands::eigenfunction(a))),
        Command::Field(a) => (&a.output, ok(commands::field(a))),
        Command::ZeroMode(a) => (&a.output, ok(commands::zero_mode(a))),
        Command::Verify(a) => (&a.output, commands::verify(a)),
        Command::Sweep(a) => (&a.output, ok(commands::sweep(a))),
    }
}
