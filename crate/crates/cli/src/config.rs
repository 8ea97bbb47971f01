use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use fuzzy_core::KPolicy;

use crate::error::CliError;

#[derive(Debug, Parser)]
#[command(name = "fuzzy", version, about = "Checks on the fuzzy circle and fuzzy sphere models")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Residuals of every defining relation; exit 1 if any exceeds --tol.
    Verify(CommonArgs),
    /// Dispersions of the distinguished states against their bounds.
    Localization(CommonArgs),
    /// Quadrature checks of the coherent-state resolutions of the identity.
    Resolution(ResolutionArgs),
    /// Spectra of the coordinate blocks; on the circle also the L - iμx₁ eigenproblem.
    Spectrum(SpectrumArgs),
    /// Minimum slacks of the uncertainty relations over seeded random states.
    UrAudit(UrArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Space {
    Circle,
    Sphere,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PolicyArg {
    MinKineq,
    Lambda6,
    Explicit,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Args)]
pub struct CommonArgs {
    #[arg(long, value_enum)]
    pub space: Space,
    #[arg(long, default_value_t = 1)]
    pub lambda_min: usize,
    #[arg(long, default_value_t = 4)]
    pub lambda_max: usize,
    #[arg(long, value_enum, default_value_t = PolicyArg::MinKineq)]
    pub k_policy: PolicyArg,
    /// Required with --k-policy explicit.
    #[arg(long)]
    pub k: Option<f64>,
    #[arg(long, default_value_t = 1e-11)]
    pub tol: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Report path; stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct ResolutionArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    #[arg(long)]
    pub nodes_phi: Option<usize>,
    #[arg(long)]
    pub nodes_theta: Option<usize>,
    #[arg(long)]
    pub nodes_psi: Option<usize>,
    /// Plain-text amplitudes, `n re im` (circle) or `l m re im` (sphere) per line.
    #[arg(long)]
    pub amplitudes: Option<PathBuf>,
    /// Largest sphere cutoff checked.
    #[arg(long, default_value_t = 8)]
    pub sphere_cap: usize,
}

#[derive(Debug, Clone, Args)]
pub struct SpectrumArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    /// Values of μ for the circle eigenproblem.
    #[arg(long, value_delimiter = ',')]
    pub mu: Vec<f64>,
}

#[derive(Debug, Clone, Args)]
pub struct UrArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    #[arg(long, default_value_t = 1000)]
    pub samples: usize,
}

/// Validated settings shared by every subcommand.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub space: Space,
    pub lambdas: std::ops::RangeInclusive<usize>,
    pub policy: KPolicy,
    pub policy_name: &'static str,
    pub tol: f64,
    pub seed: u64,
    pub format: Format,
    pub out: Option<PathBuf>,
}

impl TryFrom<&CommonArgs> for RunConfig {
    type Error = CliError;

    fn try_from(a: &CommonArgs) -> Result<Self, CliError> {
        if a.lambda_min == 0 {
            return Err(CliError::Config("--lambda-min must be at least 1".into()));
        }
        if a.lambda_min > a.lambda_max {
            return Err(CliError::Config(format!(
                "--lambda-min {} exceeds --lambda-max {}",
                a.lambda_min, a.lambda_max
            )));
        }
        if !(a.tol > 0.0 && a.tol.is_finite()) {
            return Err(CliError::Config(format!("--tol must be positive, got {}", a.tol)));
        }
        let (policy, policy_name) = match (a.k_policy, a.k) {
            (PolicyArg::MinKineq, None) => (KPolicy::MinKineq, "min_kineq"),
            (PolicyArg::Lambda6, None) => (KPolicy::Lambda6, "lambda6"),
            (PolicyArg::Explicit, Some(k)) => (KPolicy::Explicit(k), "explicit"),
            (PolicyArg::Explicit, None) => return Err(CliError::Config("--k-policy explicit needs --k".into())),
            (_, Some(_)) => return Err(CliError::Config("--k is only valid with --k-policy explicit".into())),
        };
        for lambda in a.lambda_min..=a.lambda_max {
            policy.resolve(lambda).map_err(|e| CliError::Config(format!("Λ={lambda}: {e}")))?;
        }
        Ok(Self {
            space: a.space,
            lambdas: a.lambda_min..=a.lambda_max,
            policy,
            policy_name,
            tol: a.tol,
            seed: a.seed,
            format: a.format,
            out: a.out.clone(),
        })
    }
}
