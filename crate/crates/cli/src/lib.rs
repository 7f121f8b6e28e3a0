//! Command-line front end for `witgen-core`: model files, commands and JSON reports.

pub mod commands;
pub mod complex;
pub mod error;
pub mod model;
pub mod report;

use clap::{Parser, Subcommand};
use commands::{
    cmd_check, cmd_residue_demo, cmd_theta_verify, cmd_witten, CommandOutput, WittenArgs,
};
use error::{CliError, EXIT_VALIDATION};
use model::ModelFile;
use num_complex::Complex64;
use std::path::{Path, PathBuf};

/// Environment variable capping the worker thread count.
pub const THREADS_ENV: &str = "WITGEN_THREADS";

#[derive(Debug, Parser)]
#[command(
    name = "witgen",
    version,
    about = "Witten genera of complete intersections in toric varieties"
)]
pub struct Cli {
    /// Include wall-clock timings in the report (makes output nondeterministic).
    #[arg(long, global = true)]
    pub timings: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Validate the fan, extract Picard data and run the string check.
    Check { model: PathBuf },
    /// Compute the Witten genus q-expansion.
    Witten {
        model: PathBuf,
        #[arg(long)]
        q_order: Option<usize>,
        #[arg(long)]
        with_oracle: bool,
        #[arg(long)]
        with_table: bool,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Check theta translation laws and the Jacobi identity numerically.
    ThetaVerify {
        /// Comma-separated values such as "i,0.5+i".
        #[arg(long, allow_hyphen_values = true, value_parser = parse_taus)]
        tau: TauList,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
    /// Ellipticity check and residue sum for a Picard-rank-one model.
    ResidueDemo {
        model: PathBuf,
        #[arg(long, default_value = "2i", allow_hyphen_values = true, value_parser = parse_tau)]
        tau: Complex64,
    },
}

/// Values of `--tau` for theta-verify.
#[derive(Clone, Debug, PartialEq)]
pub struct TauList(pub Vec<Complex64>);

fn parse_taus(s: &str) -> Result<TauList, String> {
    complex::parse_complex_list(s)
        .map(TauList)
        .ok_or_else(|| format!("cannot parse complex list {s:?}"))
}

fn parse_tau(s: &str) -> Result<Complex64, String> {
    complex::parse_complex(s).ok_or_else(|| format!("cannot parse complex number {s:?}"))
}

/// What the process should print and return.
#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: u8,
}

fn load(path: &Path) -> Result<ModelFile, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::validation("io_error", format!("{}: {e}", path.display())))?;
    ModelFile::parse(&text)
}

fn dispatch(cli: &Cli) -> Result<CommandOutput, CliError> {
    match &cli.command {
        Command::Check { model } => cmd_check(&load(model)?),
        Command::Witten {
            model,
            q_order,
            with_oracle,
            with_table,
            seed,
        } => cmd_witten(
            &load(model)?,
            &WittenArgs {
                q_order: *q_order,
                seed: *seed,
                with_oracle: *with_oracle,
                with_table: *with_table,
                timings: cli.timings,
            },
        ),
        Command::ThetaVerify { tau, tol } => cmd_theta_verify(&tau.0, *tol),
        Command::ResidueDemo { model, tau } => cmd_residue_demo(&load(model)?, *tau),
    }
}

/// Caps the global thread pool from [`THREADS_ENV`], if set.
pub fn configure_threads(value: Option<&str>) -> Result<(), CliError> {
    let Some(v) = value else { return Ok(()) };
    let n: usize = v.trim().parse().ok().filter(|&n| n > 0).ok_or_else(|| {
        CliError::validation(
            "invalid_env",
            format!("{THREADS_ENV}={v:?} is not a positive integer"),
        )
    })?;
    // A pool may already exist when called twice in one process; the first cap wins.
    let _ = rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global();
    Ok(())
}

/// Parses arguments and runs one command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_VALIDATION } else { 0 };
            let rendered = e.render().to_string();
            return if code == 0 {
                Outcome {
                    stdout: rendered,
                    stderr: String::new(),
                    code,
                }
            } else {
                let err = CliError::validation("usage", rendered.trim_end());
                Outcome {
                    stdout: String::new(),
                    stderr: err.to_json(),
                    code,
                }
            };
        }
    };
    match dispatch(&cli) {
        Ok(out) => Outcome {
            stdout: out.report.to_json(),
            stderr: out
                .failure
                .as_ref()
                .map(CliError::to_json)
                .unwrap_or_default(),
            code: out.failure.map_or(0, |f| f.exit),
        },
        Err(e) => Outcome {
            stdout: String::new(),
            stderr: e.to_json(),
            code: e.exit,
        },
    }
}
