//! Run configuration: one flat JSON object, units in the field names.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::geometry::Geometry;
use crate::modes::{
    RavWeighting, SolverOptions, DEFAULT_PHYSICALITY_MARGIN, DEFAULT_QUADRATURE_TOL,
};
use crate::oracle::DEFAULT_POINTS;
use crate::radial::DEFAULT_SCAN_STEP;

/// Everything a command needs. Geometry fields are required; the rest
/// default.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub r1_um: f64,
    pub r2_um: f64,
    pub b_um: f64,
    pub n_w: f64,
    pub n_s: f64,
    pub lambda_nm: f64,
    #[serde(default = "default_scan_step")]
    pub scan_step_m: f64,
    #[serde(default = "default_quadrature_tol")]
    pub quadrature_tol: f64,
    #[serde(default = "default_oracle_points")]
    pub oracle_points: usize,
    #[serde(default = "default_margin")]
    pub physicality_margin: f64,
    #[serde(default)]
    pub rav_weighting: RavWeighting,
}

fn default_scan_step() -> f64 {
    DEFAULT_SCAN_STEP
}
fn default_quadrature_tol() -> f64 {
    DEFAULT_QUADRATURE_TOL
}
fn default_oracle_points() -> usize {
    DEFAULT_POINTS
}
fn default_margin() -> f64 {
    DEFAULT_PHYSICALITY_MARGIN
}

#[derive(Debug, thiserror::Error)]
pub enum ConfigError {
    #[error("cannot read config {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("config parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("config field `{field}`: {message}")]
    Field {
        field: &'static str,
        message: String,
    },
}

impl RunConfig {
    /// Default options around a geometry given in micrometres.
    pub fn with_geometry(g: &Geometry) -> Self {
        RunConfig {
            r1_um: g.r1,
            r2_um: g.r2,
            b_um: g.b,
            n_w: g.n_w,
            n_s: g.n_s,
            lambda_nm: g.lambda0 * 1e3,
            scan_step_m: DEFAULT_SCAN_STEP,
            quadrature_tol: DEFAULT_QUADRATURE_TOL,
            oracle_points: DEFAULT_POINTS,
            physicality_margin: DEFAULT_PHYSICALITY_MARGIN,
            rav_weighting: RavWeighting::Linear,
        }
    }

    pub fn from_json_str(text: &str) -> Result<Self, ConfigError> {
        let cfg: RunConfig = serde_json::from_str(text).map_err(|e| ConfigError::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn from_path(path: &Path) -> Result<Self, ConfigError> {
        let text = std::fs::read_to_string(path).map_err(|source| ConfigError::Io {
            path: path.display().to_string(),
            source,
        })?;
        Self::from_json_str(&text)
    }

    /// Effective configuration with defaults filled in.
    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("config serialises")
    }

    pub fn geometry(&self) -> Geometry {
        Geometry {
            r1: self.r1_um,
            r2: self.r2_um,
            b: self.b_um,
            n_w: self.n_w,
            n_s: self.n_s,
            lambda0: self.lambda_nm * 1e-3,
        }
    }

    pub fn solver_options(&self) -> SolverOptions {
        SolverOptions {
            scan_step_m: self.scan_step_m,
            quadrature_tol: self.quadrature_tol,
            physicality_margin: self.physicality_margin,
            rav_weighting: self.rav_weighting,
        }
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        fn positive(field: &'static str, v: f64) -> Result<(), ConfigError> {
            if v > 0.0 && v.is_finite() {
                Ok(())
            } else {
                Err(ConfigError::Field {
                    field,
                    message: format!("must be positive and finite, got {v}"),
                })
            }
        }
        positive("r1_um", self.r1_um)?;
        positive("r2_um", self.r2_um)?;
        positive("b_um", self.b_um)?;
        positive("lambda_nm", self.lambda_nm)?;
        positive("scan_step_m", self.scan_step_m)?;
        positive("quadrature_tol", self.quadrature_tol)?;
        positive("physicality_margin", self.physicality_margin)?;
        if self.r2_um <= self.r1_um {
            return Err(ConfigError::Field {
                field: "r2_um",
                message: format!("must exceed r1_um = {}, got {}", self.r1_um, self.r2_um),
            });
        }
        if !(self.n_s >= 1.0 && self.n_s.is_finite()) {
            return Err(ConfigError::Field {
                field: "n_s",
                message: format!("must be >= 1, got {}", self.n_s),
            });
        }
        if !(self.n_w >= self.n_s && self.n_w.is_finite()) {
            return Err(ConfigError::Field {
                field: "n_w",
                message: format!("must be >= n_s = {}, got {}", self.n_s, self.n_w),
            });
        }
        if self.physicality_margin >= 1.0 {
            return Err(ConfigError::Field {
                field: "physicality_margin",
                message: format!("must be below 1, got {}", self.physicality_margin),
            });
        }
        if self.oracle_points < crate::oracle::MIN_POINTS || self.oracle_points.is_multiple_of(2) {
            return Err(ConfigError::Field {
                field: "oracle_points",
                message: format!(
                    "must be odd and >= {}, got {}",
                    crate::oracle::MIN_POINTS,
                    self.oracle_points
                ),
            });
        }
        Ok(())
    }
}
