//! Command implementations behind the `bentguide` binary.
//!
//! Every command returns its output as a `String` so the binary only has to
//! route it to stdout or a file and pick the exit code.

pub mod config;
pub mod format;

use std::fmt::Write as _;

use crate::error::Error;
use crate::modes::{assemble_catalog, field_grid, ModeRecord};
use crate::oracle::{default_z_half_width, radial_fd_eigen, z_fd_eigen};
use crate::radial::l_max;
use crate::slab::{count_z_modes, solve_z_modes};

pub use config::{ConfigError, RunConfig};

/// Relative tolerance a physical mode must meet in `verify`.
pub const VERIFY_TOLERANCE: f64 = 5e-3;

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const VERIFY_FAILED: i32 = 1;
    pub const CONFIG: i32 = 2;
    pub const UNKNOWN_MODE: i32 = 3;
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error(transparent)]
    Solver(#[from] Error),
    #[error("mode (i={i}, l={l}) is not in the catalog")]
    UnknownMode { i: usize, l: usize },
    #[error("cannot write output: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::UnknownMode { .. } => exit::UNKNOWN_MODE,
            _ => exit::CONFIG,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
}

/// Mode counts and radial bounds per vertical mode.
pub fn cmd_count(cfg: &RunConfig) -> Result<String, CliError> {
    let g = cfg.geometry();
    g.validate()?;
    let zmodes = solve_z_modes(&g);
    if zmodes.is_empty() {
        return Ok("no guided modes\n".to_string());
    }
    let (n_odd, n_even) = count_z_modes(&g);
    let bounds: Vec<String> = zmodes
        .iter()
        .map(|z| format!("i{}={}", z.index_i, l_max(z.h, &g)))
        .collect();
    Ok(format!(
        "N_odd={n_odd} N_even={n_even}; l_max: {}\n",
        bounds.join(" ")
    ))
}

pub fn catalog(cfg: &RunConfig) -> Result<Vec<ModeRecord>, CliError> {
    Ok(assemble_catalog(&cfg.geometry(), &cfg.solver_options())?)
}

pub fn cmd_modes(cfg: &RunConfig, fmt: OutputFormat) -> Result<String, CliError> {
    let rows = format::catalog_rows(&catalog(cfg)?);
    Ok(match fmt {
        OutputFormat::Csv => format::catalog_csv(&rows),
        OutputFormat::Json => format::catalog_json(&rows),
    })
}

pub fn cmd_profile(
    cfg: &RunConfig,
    i: usize,
    l: usize,
    nr: usize,
    nz: usize,
    z_pad: f64,
) -> Result<String, CliError> {
    let g = cfg.geometry();
    let cat = catalog(cfg)?;
    let mode = cat
        .iter()
        .find(|r| r.i == i && r.l == l)
        .ok_or(CliError::UnknownMode { i, l })?;
    let grid = field_grid(mode, &g, nr, nz, z_pad)?;
    Ok(format::profile_csv(&grid))
}

/// Oracle comparison for one mode.
#[derive(Debug, Clone, PartialEq)]
pub struct VerifyEntry {
    pub i: usize,
    pub l: usize,
    pub physical: bool,
    pub h: f64,
    pub z_fd: Option<f64>,
    pub radial_fd: Option<f64>,
}

impl VerifyEntry {
    fn rel(oracle: Option<f64>, h: f64) -> f64 {
        oracle.map_or(f64::INFINITY, |v| (v - h).abs() / h)
    }

    pub fn z_rel_error(&self) -> f64 {
        Self::rel(self.z_fd, self.h)
    }

    pub fn radial_rel_error(&self) -> f64 {
        Self::rel(self.radial_fd, self.h)
    }

    pub fn passes(&self, tol: f64) -> bool {
        self.z_rel_error() < tol && self.radial_rel_error() < tol
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyReport {
    pub entries: Vec<VerifyEntry>,
    pub tolerance: f64,
}

impl VerifyReport {
    /// True iff every physical mode agrees with both oracles.
    pub fn passed(&self) -> bool {
        self.entries
            .iter()
            .filter(|e| e.physical)
            .all(|e| e.passes(self.tolerance))
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            let status = if !e.physical {
                "skip (non-physical)"
            } else if e.passes(self.tolerance) {
                "ok"
            } else {
                "FAIL"
            };
            let _ = writeln!(
                out,
                "i={} l={} h={} z_fd_rel={} radial_fd_rel={} {status}",
                e.i,
                e.l,
                format::fmt_sig6(e.h),
                format::fmt_sig6(e.z_rel_error()),
                format::fmt_sig6(e.radial_rel_error()),
            );
        }
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        let _ = writeln!(
            out,
            "verify: {verdict} (tolerance {})",
            format::fmt_sig6(self.tolerance)
        );
        out
    }
}

/// Runs both oracles against a catalog.
pub fn verify_catalog(
    cfg: &RunConfig,
    records: &[ModeRecord],
    tolerance: f64,
) -> Result<VerifyReport, CliError> {
    let g = cfg.geometry();
    let z_hs = if records.is_empty() {
        Vec::new()
    } else {
        z_fd_eigen(&g, cfg.oracle_points, default_z_half_width(&g))?
    };
    let mut entries = Vec::with_capacity(records.len());
    for r in records {
        let radial = radial_fd_eigen(r.m, &g, cfg.oracle_points)?;
        entries.push(VerifyEntry {
            i: r.i,
            l: r.l,
            physical: r.physical,
            h: r.h,
            z_fd: z_hs.get(r.i - 1).copied(),
            radial_fd: radial.get(r.l - 1).copied(),
        });
    }
    Ok(VerifyReport { entries, tolerance })
}

/// `verify`. `beta_fault` perturbs every `β_w` by that relative amount
/// before comparing; it exists to prove the check can fail.
pub fn cmd_verify(cfg: &RunConfig, beta_fault: f64) -> Result<VerifyReport, CliError> {
    let g = cfg.geometry();
    let mut records = catalog(cfg)?;
    if beta_fault != 0.0 {
        let kn = g.k() * g.n_w;
        for r in &mut records {
            r.beta_w *= 1.0 + beta_fault;
            r.h = (kn * kn - r.beta_w * r.beta_w).max(0.0).sqrt();
        }
    }
    verify_catalog(cfg, &records, VERIFY_TOLERANCE)
}
