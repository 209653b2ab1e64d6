mod args;
mod commands;
mod report;

use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;

use args::Cli;

/// Errors that end a run before any verdict. Exit 2 for usage and parse
/// problems, 3 for I/O.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Io(String),
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Io(_) => 3,
        }
    }
}

impl From<rmx_core::Error> for Failure {
    fn from(e: rmx_core::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    let echo: Vec<String> = std::env::args().skip(1).collect();
    let start = Instant::now();
    match commands::run(cli.command, echo) {
        Ok(mut report) => {
            report.elapsed = start.elapsed();
            println!("({:.2}s)", report.elapsed.as_secs_f64());
            ExitCode::from(report.exit_code as u8)
        }
        Err(f) => {
            match &f {
                Failure::Usage(m) => eprintln!("error: {m}"),
                Failure::Io(m) => eprintln!("I/O error: {m}"),
            }
            ExitCode::from(f.exit_code())
        }
    }
}
