use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use strq_cli::args::Cli;
use strq_cli::{run, EXIT_MISMATCH, EXIT_USAGE};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(outcome) => {
            let mut out = std::io::stdout().lock();
            if out.write_all(outcome.report.render(cli.output).as_bytes()).is_err() {
                return ExitCode::from(EXIT_USAGE);
            }
            if outcome.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_MISMATCH)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
