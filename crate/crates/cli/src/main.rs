mod args;
mod commands;
mod error;
mod output;
mod verify;

use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;

use args::Cli;
use error::{CliError, EXIT_NUMERICAL, EXIT_OK, EXIT_USAGE};

const TOL_ENV: &str = "SCHLICHT_SCOPE_TOL";

fn settings() -> Result<schlicht_core::NumericSettings, CliError> {
    let mut s = schlicht_core::NumericSettings::default();
    if let Ok(raw) = std::env::var(TOL_ENV) {
        let tol: f64 = raw.trim().parse().map_err(|_| CliError::Input(format!("{TOL_ENV}={raw} is not a number")))?;
        if !(tol > 0.0 && tol.is_finite()) {
            return Err(CliError::Input(format!("{TOL_ENV} must be positive, got {raw}")));
        }
        s.eval_tol = tol;
    }
    Ok(s)
}

fn run(cli: &Cli) -> Result<i32, CliError> {
    let settings = settings()?;
    let output = commands::dispatch(cli, &settings)?;
    output::emit(&output.render(cli.format)?, cli.out.as_deref())?;
    Ok(if output.failed { EXIT_NUMERICAL } else { EXIT_OK })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::from(EXIT_OK as u8),
                _ => ExitCode::from(EXIT_USAGE as u8),
            };
        }
    };
    match run(&cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
