//! `nabundle` command-line front end.
//!
//! Exit codes: 0 on success, 1 for usage or validation errors, 2 for I/O and
//! runtime failures.

mod args;
mod csv;
mod op;
mod summary;

use std::fmt;
use std::fs::File;
use std::io::{self, BufWriter};
use std::process::ExitCode;

use clap::Parser;
use nabundle::experiments::{self, ExperimentKind};

use args::{Cli, Command, ExperimentArgs};

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Runtime(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            Self::Usage(_) => 1,
            Self::Runtime(_) => 2,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Usage(m) | Self::Runtime(m) => f.write_str(m),
        }
    }
}

fn run_experiment(kind: ExperimentKind, args: ExperimentArgs) -> Result<(), CliError> {
    let config = args.resolve(kind)?;
    for w in config.params.warnings() {
        eprintln!("warning: {w}");
    }
    let table = experiments::run(&config).map_err(|e| CliError::Runtime(e.to_string()))?;
    let text = summary::render(&config, &table);
    match &config.out {
        Some(path) => {
            let io_err =
                |e: io::Error| CliError::Runtime(format!("cannot write {}: {e}", path.display()));
            let file = File::create(path).map_err(io_err)?;
            csv::write_csv(&table, BufWriter::new(file)).map_err(io_err)?;
            print!("{text}");
            println!("wrote {} rows to {}", table.rows.len(), path.display());
        }
        None => {
            csv::write_csv(&table, io::stdout().lock())
                .map_err(|e| CliError::Runtime(format!("cannot write output: {e}")))?;
            eprint!("{text}");
        }
    }
    Ok(())
}

fn dispatch(cli: Cli) -> Result<(), CliError> {
    let (kind, args) = match cli.command {
        Command::Op(args) => {
            println!("{}", op::evaluate(&args)?);
            return Ok(());
        }
        Command::Activity(a) => (ExperimentKind::Activity, a),
        Command::Gradient(a) => (ExperimentKind::Gradient, a),
        Command::Similarity(a) => (ExperimentKind::Similarity, a),
        Command::Convergence(a) => (ExperimentKind::Convergence, a),
        Command::SerialPosition(a) => (ExperimentKind::SerialPosition, a),
        Command::Properties(a) => (ExperimentKind::Properties, a),
        Command::Filter(a) => (ExperimentKind::FilterDemo, a),
    };
    run_experiment(kind, args)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    ExitCode::SUCCESS
                }
                _ => ExitCode::from(1),
            };
        }
    };
    match dispatch(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
