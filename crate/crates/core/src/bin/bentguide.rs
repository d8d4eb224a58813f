use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use bentguide::cli::{self, exit, CliError, OutputFormat, RunConfig};

/// Analytical modes of a bent rectangular dielectric waveguide.
#[derive(Debug, Parser)]
#[command(name = "bentguide", version)]
struct Args {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print vertical mode counts and radial bounds.
    Count {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the full mode catalog.
    Modes {
        #[arg(long)]
        config: PathBuf,
        #[arg(long, value_enum, default_value = "csv")]
        format: OutputFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sample one mode's field on an (r, z) grid.
    Profile {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        l: usize,
        #[arg(long, default_value_t = 200)]
        nr: usize,
        #[arg(long, default_value_t = 200)]
        nz: usize,
        #[arg(long = "z-pad-um", default_value_t = 0.5)]
        z_pad_um: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare every mode against the finite-difference oracles.
    Verify {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Relative error injected into every β_w before comparing.
        #[arg(long, hide = true, default_value_t = 0.0)]
        inject_beta_error: f64,
    },
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn run(args: Args) -> Result<i32, CliError> {
    match args.command {
        Command::Count { config, out } => {
            let cfg = RunConfig::from_path(&config)?;
            emit(&cli::cmd_count(&cfg)?, out.as_ref())?;
        }
        Command::Modes {
            config,
            format,
            out,
        } => {
            let cfg = RunConfig::from_path(&config)?;
            emit(&cli::cmd_modes(&cfg, format)?, out.as_ref())?;
        }
        Command::Profile {
            config,
            i,
            l,
            nr,
            nz,
            z_pad_um,
            out,
        } => {
            let cfg = RunConfig::from_path(&config)?;
            emit(
                &cli::cmd_profile(&cfg, i, l, nr, nz, z_pad_um)?,
                out.as_ref(),
            )?;
        }
        Command::Verify {
            config,
            out,
            inject_beta_error,
        } => {
            let cfg = RunConfig::from_path(&config)?;
            let report = cli::cmd_verify(&cfg, inject_beta_error)?;
            emit(&report.render(), out.as_ref())?;
            if !report.passed() {
                return Ok(exit::VERIFY_FAILED);
            }
        }
    }
    Ok(exit::OK)
}

fn main() -> ExitCode {
    match run(Args::parse()) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
