//! Command-line front end; `main` only parses and maps outcomes to exit codes.

pub mod args;
pub mod commands;
pub mod input;

use args::{Cli, Command};
use commands::Status;

pub const EXIT_USAGE: u8 = 1;
pub const EXIT_MISMATCH: u8 = 2;
pub const EXIT_REFUSAL: u8 = 3;

pub fn run(cli: &Cli) -> anyhow::Result<Status> {
    let catalog = input::catalog(cli.catalog.as_deref())?;
    match &cli.command {
        Command::Check(a) => commands::check::run(a, &catalog),
        Command::Search(a) => commands::search::run(a),
        Command::Bound(a) => commands::bound::run(a),
        Command::Catalog { action } => commands::catalog::run(action, &catalog),
        Command::Reproduce(a) => commands::reproduce::run(a, &catalog),
    }
}

pub fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<linecfg::Error>() {
        Some(linecfg::Error::CeilingExceeded { .. }) => EXIT_REFUSAL,
        _ => EXIT_USAGE,
    }
}
