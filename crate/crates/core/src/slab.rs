//! Vertical (z) problem: the symmetric dielectric slab of height `b`.
//!
//! Inside `|z| <= z0` the field oscillates with `β_w`, outside it decays with
//! `β_s`, and both share the in-plane momentum `h`:
//! `h² = k²n_w² − β_w² = k²n_s² + β_s²`.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::Geometry;
use crate::roots::bisect;

/// Family label as named in the literature this model comes from:
/// `Odd` means `D = E` (a symmetric `Z`), `Even` means `D = −E`
/// (an antisymmetric `Z`). The labels are the opposite of the parity they
/// induce.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SlabFamily {
    Odd,
    Even,
}

impl SlabFamily {
    pub fn parity(self) -> Parity {
        match self {
            SlabFamily::Odd => Parity::Symmetric,
            SlabFamily::Even => Parity::Antisymmetric,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            SlabFamily::Odd => "odd",
            SlabFamily::Even => "even",
        }
    }
}

impl std::str::FromStr for SlabFamily {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "odd" => Ok(SlabFamily::Odd),
            "even" => Ok(SlabFamily::Even),
            other => Err(format!("unknown family label {other:?}")),
        }
    }
}

/// True parity of `Z(z)` under `z → −z`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Symmetric,
    Antisymmetric,
}

impl Parity {
    pub fn sign(self) -> f64 {
        match self {
            Parity::Symmetric => 1.0,
            Parity::Antisymmetric => -1.0,
        }
    }
}

/// One guided vertical mode.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZModeSolution {
    /// 1-based position in the union of both families sorted by descending `h`.
    pub index_i: usize,
    pub family: SlabFamily,
    pub beta_w: f64,
    pub beta_s: f64,
    pub h: f64,
    pub amp_a: f64,
    pub amp_b: f64,
    pub amp_d: f64,
    pub amp_e: f64,
}

impl ZModeSolution {
    pub fn parity(&self) -> Parity {
        self.family.parity()
    }

    /// Builds the mode for a root `beta_w`, fixing `D = 1`.
    pub fn from_root(g: &Geometry, family: SlabFamily, beta_w: f64) -> Self {
        let v = g.v_number_sq().sqrt();
        let beta_s = ((v - beta_w) * (v + beta_w)).max(0.0).sqrt();
        Self::from_pair(g, family, beta_w, beta_s)
    }

    /// Builds the mode from a root angle `θ` with `β_w = V cos θ` and
    /// `β_s = V sin θ`, which stays accurate right up to cutoff.
    pub fn from_angle(g: &Geometry, family: SlabFamily, theta: f64) -> Self {
        let v = g.v_number_sq().sqrt();
        let (sn, cs) = theta.sin_cos();
        Self::from_pair(g, family, v * cs, v * sn)
    }

    fn from_pair(g: &Geometry, family: SlabFamily, beta_w: f64, beta_s: f64) -> Self {
        let k = g.k();
        let h = (k * k * g.n_w * g.n_w - beta_w * beta_w).sqrt();
        let z0 = g.z0();
        let tail = (-beta_s * z0).exp();
        let (amp_a, amp_b, amp_e) = match family {
            SlabFamily::Odd => (0.0, tail / (beta_w * z0).cos(), 1.0),
            SlabFamily::Even => (tail / (beta_w * z0).sin(), 0.0, -1.0),
        };
        ZModeSolution {
            index_i: 0,
            family,
            beta_w,
            beta_s,
            h,
            amp_a,
            amp_b,
            amp_d: 1.0,
            amp_e,
        }
    }

    /// Pole-free residual of this mode's dispersion relation, evaluated
    /// with the stored `(β_w, β_s)` pair.
    pub fn residual(&self, g: &Geometry) -> f64 {
        pair_residual(self.family, self.beta_w, self.beta_s, g.z0())
    }
}

/// `β sin(βz0) − s cos(βz0)` (odd family) or `β cos(βz0) + s sin(βz0)`
/// (even family) with `s = √(V² − β²)`. These are the tan/cot relations
/// multiplied through by `cos`/`sin`, so they have no poles.
pub fn dispersion_residual(family: SlabFamily, beta: f64, z0: f64, v2: f64) -> f64 {
    pair_residual(family, beta, (v2 - beta * beta).max(0.0).sqrt(), z0)
}

fn pair_residual(family: SlabFamily, beta: f64, s: f64, z0: f64) -> f64 {
    let (sn, cs) = (beta * z0).sin_cos();
    match family {
        SlabFamily::Odd => beta * sn - s * cs,
        SlabFamily::Even => beta * cs + s * sn,
    }
}

/// Upper-bound estimates `(N_odd, N_even)` for the number of roots.
pub fn count_z_modes(g: &Geometry) -> (usize, usize) {
    let v = g.k() * g.b / (2.0 * PI) * (g.n_w * g.n_w - g.n_s * g.n_s).max(0.0).sqrt();
    let ceil = |t: f64| t.ceil().max(0.0) as usize;
    (ceil(v), ceil(v - 0.5))
}

/// Number of samples used by the default root scan.
pub fn default_scan_samples(g: &Geometry) -> usize {
    let (no, ne) = count_z_modes(g);
    4096.max(64 * (no + ne))
}

/// All guided vertical modes, sorted by descending `h`.
pub fn solve_z_modes(g: &Geometry) -> Vec<ZModeSolution> {
    solve_z_modes_with(g, default_scan_samples(g))
}

/// [`solve_z_modes`] with an explicit number of scan samples.
pub fn solve_z_modes_with(g: &Geometry, samples: usize) -> Vec<ZModeSolution> {
    let v2 = g.v_number_sq();
    if v2 <= 0.0 {
        return Vec::new();
    }
    let v = v2.sqrt();
    let z0 = g.z0();
    let eps = 1e-9 * g.k();
    if v <= 2.0 * eps {
        return Vec::new();
    }
    let samples = samples.max(2);
    let lo = eps;
    let hi = v - eps;
    let step = (hi - lo) / (samples - 1) as f64;

    let mut modes = Vec::new();
    for family in [SlabFamily::Odd, SlabFamily::Even] {
        // Samples are uniform in β, but the residual and the bisection use
        // the angle θ with β = V cos θ, s = V sin θ. Near cutoff s is then
        // resolved to full precision.
        let f = |t: f64| {
            let (sn, cs) = t.sin_cos();
            pair_residual(family, v * cs, v * sn, z0)
        };
        let angle = |b: f64| ((v - b) * (v + b)).max(0.0).sqrt().atan2(b);
        let mut prev_t = angle(lo);
        let mut prev_f = f(prev_t);
        for j in 1..samples {
            let b = if j == samples - 1 {
                hi
            } else {
                lo + step * j as f64
            };
            let t = angle(b);
            let ft = f(t);
            if prev_f == 0.0 {
                modes.push(ZModeSolution::from_angle(g, family, prev_t));
            } else if prev_f.signum() != ft.signum() && ft != 0.0 {
                let root = bisect(f, prev_t, t, prev_f, ft);
                modes.push(ZModeSolution::from_angle(g, family, root));
            }
            prev_t = t;
            prev_f = ft;
        }
        if prev_f == 0.0 {
            modes.push(ZModeSolution::from_angle(g, family, prev_t));
        }
    }
    modes.sort_by(|a, b| a.beta_w.total_cmp(&b.beta_w));
    for (n, m) in modes.iter_mut().enumerate() {
        m.index_i = n + 1;
    }
    modes
}

/// Piecewise `Z(z)`, continuous with continuous derivative at `±z0`.
///
/// Evaluated on `|z|` and multiplied by the parity sign, so the parity
/// relation holds bit-for-bit.
pub fn z_profile(zm: &ZModeSolution, g: &Geometry, z: f64) -> f64 {
    let z0 = g.z0();
    let az = z.abs();
    let upper = if az <= z0 {
        zm.amp_a * (zm.beta_w * az).sin() + zm.amp_b * (zm.beta_w * az).cos()
    } else {
        zm.amp_d * (-zm.beta_s * az).exp()
    };
    if z < 0.0 {
        zm.parity().sign() * upper
    } else {
        upper
    }
}

/// `dZ/dz`, used by continuity checks.
pub fn z_profile_derivative(zm: &ZModeSolution, g: &Geometry, z: f64) -> f64 {
    let z0 = g.z0();
    let az = z.abs();
    let upper = if az <= z0 {
        zm.beta_w * (zm.amp_a * (zm.beta_w * az).cos() - zm.amp_b * (zm.beta_w * az).sin())
    } else {
        -zm.beta_s * zm.amp_d * (-zm.beta_s * az).exp()
    };
    // d/dz of an even function is odd and vice versa.
    if z < 0.0 {
        -zm.parity().sign() * upper
    } else {
        upper
    }
}

/// Values of the interior and exterior branches at `z = ±z0`, and of their
/// derivatives, as `(inside, outside, inside', outside')`.
pub fn boundary_branches(zm: &ZModeSolution, g: &Geometry, upper: bool) -> (f64, f64, f64, f64) {
    let z0 = if upper { g.z0() } else { -g.z0() };
    let (sn, cs) = (zm.beta_w * z0).sin_cos();
    let inside = zm.amp_a * sn + zm.amp_b * cs;
    let inside_d = zm.beta_w * (zm.amp_a * cs - zm.amp_b * sn);
    let (outside, outside_d) = if upper {
        let e = zm.amp_d * (-zm.beta_s * z0).exp();
        (e, -zm.beta_s * e)
    } else {
        let e = zm.amp_e * (zm.beta_s * z0).exp();
        (e, zm.beta_s * e)
    };
    (inside, outside, inside_d, outside_d)
}

/// Validates that a geometry admits guided modes at all (`n_w > n_s`).
pub fn require_contrast(g: &Geometry) -> Result<()> {
    if g.n_w > g.n_s {
        Ok(())
    } else {
        Err(Error::InvalidGeometry(format!(
            "no index contrast: n_w={} n_s={}",
            g.n_w, g.n_s
        )))
    }
}
