//! Command-line front end.  Each subcommand selects a run mode; the rest of
//! the run (input data, section sizes, tolerances, output directory) comes
//! from a TOML config file.  If the config file also names a mode, it must
//! agree with the subcommand.
//!
//! Exit codes: `0` when every enabled check passed, `1` when the run finished
//! but a check failed, `2` on configuration or computation errors.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use hankel_spectra::cli::{load_config, run, RunMode};

#[derive(Parser)]
#[command(
    name = "hankel-spectra",
    version,
    about = "Spectral band charts and finite-section spectra of self-adjoint Hankel operators"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Band chart (essential spectrum, bands, thresholds) from jump data.
    Predict(ModeArgs),
    /// Eigenvalues of finite sections or a Nystrom grid, with band-fill metrics.
    Spectrum(ModeArgs),
    /// Model-identity verification suite with per-check residuals.
    VerifyModels(VerifyArgs),
    /// Translate circle jump data to the line representation.
    Convert(ModeArgs),
    /// Weighted resolvent norms at configured spectral shifts.
    ProbeResolvent(ModeArgs),
}

#[derive(Args)]
struct ModeArgs {
    /// TOML run description.
    #[arg(long)]
    config: PathBuf,
    /// Output directory (overrides the config's `out`; default `.`).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// TOML run description.
    #[arg(long)]
    config: PathBuf,
    /// Output directory (overrides the config's `out`; default `.`).
    #[arg(long)]
    out: Option<PathBuf>,
    /// Run a single check group (e.g. `zeta`, `mehler`).
    #[arg(long)]
    only: Option<String>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (mode, config_path, out, only) = match cli.command {
        Command::Predict(a) => (RunMode::Predict, a.config, a.out, None),
        Command::Spectrum(a) => (RunMode::Spectrum, a.config, a.out, None),
        Command::VerifyModels(a) => (RunMode::VerifyModels, a.config, a.out, a.only),
        Command::Convert(a) => (RunMode::Convert, a.config, a.out, None),
        Command::ProbeResolvent(a) => (RunMode::ProbeResolvent, a.config, a.out, None),
    };

    let config = match load_config(&config_path, Some(mode), out, only) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };

    match run(&config) {
        Ok(bundle) => {
            for line in &bundle.summary {
                println!("{line}");
            }
            for file in &bundle.files {
                println!("wrote {}", file.display());
            }
            if bundle.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
