//! Command-line front end for `hypdual`.

pub mod args;
pub mod commands;
pub mod report;

use args::{Cli, Command, Format};
use hypdual::Error;
use report::Report;

pub const EXIT_PASS: u8 = 0;
pub const EXIT_MISMATCH: u8 = 1;
pub const EXIT_PARSE: u8 = 2;
pub const EXIT_DEGENERATE: u8 = 3;
pub const EXIT_PRECISION: u8 = 4;

#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse(_) | Error::InvalidArgument(_) => EXIT_PARSE,
            Error::PrecisionInsufficient { .. } => EXIT_PRECISION,
            _ => EXIT_DEGENERATE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

pub struct Run {
    pub stdout: String,
    pub code: u8,
}

pub fn reports(cli: &Cli) -> Result<Vec<Report>, Failure> {
    match &cli.command {
        Command::Dual(o) => commands::dual(o),
        Command::Psi(o) => commands::psi(o),
        Command::Matrix(o) => commands::matrix(o),
        Command::Verify(o) => commands::verify(o),
        Command::PaperRegression(o) => commands::regression(o),
    }
}

fn format(cli: &Cli) -> Format {
    match &cli.command {
        Command::Dual(o) | Command::Psi(o) | Command::Matrix(o) | Command::Verify(o) => o.format,
        Command::PaperRegression(o) => o.format,
    }
}

/// Runs the command and renders its reports; JSON output is one report per line.
pub fn run(cli: &Cli) -> Result<Run, Failure> {
    let reports = reports(cli)?;
    let passed = reports.iter().filter(|r| r.pass()).count();
    let mut stdout = String::new();
    for r in &reports {
        match format(cli) {
            Format::Json => {
                stdout.push_str(&serde_json::to_string(r).expect("report serializes"));
                stdout.push('\n');
            }
            Format::Text => stdout.push_str(&report::render_text(r)),
        }
    }
    if format(cli) == Format::Text {
        stdout.push_str(&format!("{passed} of {} runs pass\n", reports.len()));
    }
    let code = if passed == reports.len() { EXIT_PASS } else { EXIT_MISMATCH };
    Ok(Run { stdout, code })
}
