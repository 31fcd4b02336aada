use std::process::ExitCode;

use accelkey_cli::{run, Cli};
use clap::Parser;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    match run(&cli, &mut stdout.lock()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("accelkey: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
