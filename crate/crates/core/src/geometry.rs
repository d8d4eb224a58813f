use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Cross-section of the bent guide plus the vacuum wavelength.
///
/// All lengths are in micrometres, so momenta come out in µm⁻¹.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Geometry {
    /// Inner bending radius.
    pub r1: f64,
    /// Outer bending radius.
    pub r2: f64,
    /// Height; the walls sit at `z = ±b/2`.
    pub b: f64,
    pub n_w: f64,
    pub n_s: f64,
    /// Vacuum wavelength.
    pub lambda0: f64,
}

impl Geometry {
    /// Checks `0 < r1 < r2`, `b > 0`, `n_w >= n_s >= 1` and `lambda0 > 0`.
    ///
    /// Equal indices are accepted: such a guide simply has no guided modes.
    pub fn new(r1: f64, r2: f64, b: f64, n_w: f64, n_s: f64, lambda0: f64) -> Result<Self> {
        let g = Geometry {
            r1,
            r2,
            b,
            n_w,
            n_s,
            lambda0,
        };
        g.validate()?;
        Ok(g)
    }

    pub fn validate(&self) -> Result<()> {
        let all_finite = [self.r1, self.r2, self.b, self.n_w, self.n_s, self.lambda0]
            .iter()
            .all(|v| v.is_finite());
        let msg = if !all_finite {
            "all fields must be finite"
        } else if !(self.r1 > 0.0 && self.r1 < self.r2) {
            "radii must satisfy 0 < r1 < r2"
        } else if self.b <= 0.0 {
            "height b must be positive"
        } else if self.n_s < 1.0 {
            "surround index n_s must be >= 1"
        } else if self.n_w < self.n_s {
            "core index n_w must be >= n_s"
        } else if self.lambda0 <= 0.0 {
            "wavelength must be positive"
        } else {
            return Ok(());
        };
        Err(Error::InvalidGeometry(msg.to_string()))
    }

    /// Free-space wavenumber `2π/λ`.
    pub fn k(&self) -> f64 {
        2.0 * PI / self.lambda0
    }

    pub fn z0(&self) -> f64 {
        0.5 * self.b
    }

    /// Radial width `r2 − r1`.
    pub fn width(&self) -> f64 {
        self.r2 - self.r1
    }

    /// Mid radius `(r1 + r2)/2`.
    pub fn mid_radius(&self) -> f64 {
        0.5 * (self.r1 + self.r2)
    }

    /// `k²(n_w² − n_s²)`.
    pub fn v_number_sq(&self) -> f64 {
        let k = self.k();
        k * k * (self.n_w * self.n_w - self.n_s * self.n_s)
    }
}
