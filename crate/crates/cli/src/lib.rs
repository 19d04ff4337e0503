//! Command-line front end for `fatforest-core`.
//!
//! [`run`] parses arguments, runs one subcommand and writes exactly one
//! document. The exit status is 0 when every agreement flag in that document
//! is true; see [`error::exit`] for the failure codes.

pub mod args;
pub mod commands;
pub mod error;
pub mod input;
pub mod render;
pub mod verify;

use std::ffi::OsString;
use std::fs;
use std::io::Write;

use clap::error::ErrorKind;
use clap::Parser;

use args::{Cli, Command, OutputArgs};
use commands::Emission;
use error::{exit, CliError};
use input::Subject;

/// Runs one invocation. `argv[0]` is the program name.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    exit::OK
                }
                _ => {
                    let text = e.to_string();
                    let line = text.lines().find(|l| !l.trim().is_empty()).unwrap_or("usage error");
                    let _ = writeln!(err, "{line}");
                    exit::USAGE
                }
            };
        }
    };
    match dispatch(&cli.command).and_then(|(emission, output)| {
        write_document(&emission.text, output, out)?;
        Ok(emission)
    }) {
        Ok(emission) => {
            for note in &emission.notes {
                let _ = writeln!(err, "{note}");
            }
            if emission.agreed {
                exit::OK
            } else {
                exit::DISAGREEMENT
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(command: &Command) -> Result<(Emission, &OutputArgs), CliError> {
    Ok(match command {
        Command::Fvector { input, method, oracle, output } => {
            (commands::fvector(&Subject::from_args(input)?, *method, oracle, output)?, output)
        }
        Command::Hilbert { input, method, oracle, output } => {
            (commands::hilbert(&Subject::from_args(input)?, *method, oracle, output)?, output)
        }
        Command::Betti { input, method, oracle, output } => {
            (commands::betti(&Subject::from_args(input)?, *method, oracle, output)?, output)
        }
        Command::Invariants { input, method, oracle, output } => {
            (commands::invariants(&Subject::from_args(input)?, *method, oracle, output)?, output)
        }
        Command::Verify { input, oracle, output } => {
            (commands::verify_command(&Subject::from_args(input)?, oracle, output)?, output)
        }
        Command::Identities { sizes, output } => (commands::identities(sizes, output)?, output),
        Command::PaperExamples { oracle, output } => (commands::paper_examples(oracle, output)?, output),
    })
}

fn write_document(text: &str, output: &OutputArgs, out: &mut dyn Write) -> Result<(), CliError> {
    match &output.out {
        Some(path) => {
            fs::write(path, text).map_err(|source| CliError::Io { path: path.display().to_string(), source })
        }
        None => {
            out.write_all(text.as_bytes()).map_err(|source| CliError::Io { path: "<stdout>".into(), source })
        }
    }
}
