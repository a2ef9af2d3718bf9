//! Command-line front end for `strq`.

pub mod args;
pub mod commands;
pub mod harness;
pub mod input;
pub mod report;

use anyhow::Result;

use crate::args::{Cli, Command};
pub use crate::commands::Outcome;

/// Exit status for a report whose invariants failed.
pub const EXIT_MISMATCH: u8 = 1;
/// Exit status for usage and input errors.
pub const EXIT_USAGE: u8 = 2;

pub fn run(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Arrays(a) => commands::arrays(a),
        Command::Measures(a) => commands::measures(a),
        Command::Ilf(a) => commands::ilf(a),
        Command::IlfBench(a) => commands::ilf_bench(a),
        Command::LcpRmq(a) => commands::lcp_rmq(a),
        Command::Lce(a) => commands::lce(a),
        Command::GadgetVerify(a) => commands::gadget_verify(a),
    }
}
