use std::process::ExitCode;

use clap::Parser;
use eorbit_cli::args::Cli;
use eorbit_cli::{commands, thread_cap, CliError};

fn report(e: &CliError) -> ExitCode {
    eprintln!("error: {}: {e}", e.name());
    ExitCode::from(e.exit_code() as u8)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match thread_cap(std::env::var("EORBIT_THREADS").ok().as_deref()) {
        Ok(Some(n)) => {
            if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
                return report(&CliError::Io(format!("cannot start {n} worker threads: {e}")));
            }
        }
        Ok(None) => {}
        Err(e) => return report(&e),
    }
    match commands::run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => report(&e),
    }
}
