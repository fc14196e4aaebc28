use std::process::ExitCode;

use clap::Parser;
use tripartite::commands::emit;
use tripartite::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(outcome) => {
            emit(&outcome.stdout, false);
            emit(&outcome.stderr, true);
            ExitCode::from(outcome.exit as u8)
        }
        Err(e) => {
            emit(&format!("error: {e}\n"), true);
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
