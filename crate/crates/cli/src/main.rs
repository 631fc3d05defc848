use std::process::ExitCode;

use clap::Parser;
use ehrhart_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match std::panic::catch_unwind(|| run(&cli)) {
        Ok(Ok(outcome)) => {
            print!("{}", outcome.stdout);
            ExitCode::from(outcome.code as u8)
        }
        Ok(Err(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
        Err(_) => ExitCode::from(3),
    }
}
