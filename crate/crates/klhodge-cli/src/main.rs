//! `klhodge`: Hodge numbers, dimensions, counting tables, graded bases and
//! consistency reports for symmetric-power moments, as JSON, CSV or Markdown.
//!
//! Exit codes: 0 on success, 1 when routes disagree or a check fails, 2 on
//! invalid input.

mod args;
mod commands;
mod render;

use std::fs;
use std::io::{self, Write};
use std::process::ExitCode;

use anyhow::Context;
use clap::Parser;

use args::{Cli, Command};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error(transparent)]
    Library(#[from] klhodge::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        use klhodge::Error as E;
        match self {
            CliError::Invalid(_) => 2,
            CliError::Library(
                E::BadFamilyParams { .. }
                | E::CoprimalityRequired { .. }
                | E::VanishingSums { .. }
                | E::NonIntegralDimension { .. },
            ) => 2,
            CliError::Library(_) => 1,
        }
    }
}

fn emit(cli: &Cli, text: &str) -> anyhow::Result<()> {
    match &cli.out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => io::stdout()
            .lock()
            .write_all(text.as_bytes())
            .context("writing to stdout"),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let outcome = match &cli.command {
        Command::Hodge(a) => commands::cmd_hodge(a),
        Command::Dims(a) => commands::cmd_dims(a),
        Command::Counts(a) => commands::cmd_counts(a),
        Command::Basis(a) => commands::cmd_basis(a),
        Command::Verify(a) => commands::cmd_verify(a),
    };
    let outcome = match outcome {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(e.exit_code());
        }
    };
    let text = render::render(cli.format, &outcome.doc, &outcome.table);
    if let Err(e) = emit(&cli, &text) {
        eprintln!("error: {e:#}");
        return ExitCode::from(1);
    }
    if outcome.ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
