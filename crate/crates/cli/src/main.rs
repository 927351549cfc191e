mod args;
mod commands;
mod input;
mod report;

use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};
use gbooks::Error;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
        {
            eprintln!("error: cannot configure thread pool: {e}");
            return ExitCode::from(2);
        }
    }
    let result = match &cli.command {
        Command::Books(a) => commands::books(a),
        Command::Stability(a) => commands::stability(a),
        Command::Constants(a) => commands::constants(a),
        Command::Regularity(a) => commands::regularity(a),
        Command::Ramsey(a) => commands::ramsey(a),
        Command::Witness(a) => commands::witness(a),
        Command::LowerBound(a) => commands::lower_bound(a),
    };
    match result {
        Ok(outcome) => {
            if let Err(e) = report::emit(&outcome.records, cli.format) {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            ExitCode::from(u8::from(outcome.failed))
        }
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::ContractViolation(_) => ExitCode::from(1),
                _ => ExitCode::from(2),
            }
        }
    }
}
