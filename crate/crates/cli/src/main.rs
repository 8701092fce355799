use std::process::ExitCode;

use clap::Parser;
use rextmorse_cli::args::Cli;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match rextmorse_cli::run(&cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
