mod amplitudes;
mod commands;
mod config;
mod error;
mod report;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use config::{Cli, Command, RunConfig};
use error::CliError;
use report::Report;

fn run(cli: &Cli) -> Result<(RunConfig, Report), CliError> {
    match &cli.command {
        Command::Verify(a) => {
            let cfg = RunConfig::try_from(a)?;
            let r = commands::verify(&cfg)?;
            Ok((cfg, r))
        }
        Command::Localization(a) => {
            let cfg = RunConfig::try_from(a)?;
            let r = commands::localization(&cfg)?;
            Ok((cfg, r))
        }
        Command::Resolution(a) => commands::resolution(a),
        Command::Spectrum(a) => commands::spectrum(a),
        Command::UrAudit(a) => commands::ur_audit(a),
    }
}

fn emit(cfg: &RunConfig, report: &Report) -> Result<(), CliError> {
    let bytes = report::render(report, cfg)?;
    match &cfg.out {
        Some(path) => report::write_atomic(path, &bytes),
        None => Ok(std::io::stdout().lock().write_all(&bytes)?),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = run(&cli).and_then(|(cfg, report)| emit(&cfg, &report).map(|_| report));
    match outcome {
        Ok(report) => {
            let bad: Vec<_> = report.violations().collect();
            match bad.iter().max_by(|a, b| a.value.0.abs().total_cmp(&b.value.0.abs())) {
                None => ExitCode::SUCCESS,
                Some(worst) => {
                    eprintln!(
                        "{} violation(s); worst: {} at Λ={} with value {:e}",
                        bad.len(),
                        worst.name,
                        worst.lambda,
                        worst.value.0
                    );
                    ExitCode::from(1)
                }
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
