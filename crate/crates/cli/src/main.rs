use std::process::ExitCode;

use clap::Parser;
use hypdual_cli::args::Cli;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match hypdual_cli::run(&cli) {
        Ok(run) => {
            print!("{}", run.stdout);
            ExitCode::from(run.code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
