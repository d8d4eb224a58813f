//! Full modes `E(r, φ, z) = R(r) e^{imφ} Z(z)`: catalog assembly, average
//! radial position, effective index and sampled field grids.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::Geometry;
use crate::radial::{radial_profile, solve_m_with_step, RadialSolution, DEFAULT_SCAN_STEP};
use crate::slab::{solve_z_modes, z_profile, SlabFamily, ZModeSolution};

/// Weighting used for the average radial position.
///
/// `Linear` is `∫∫|E|² r dr dz / ∫∫|E|² dr dz`, the definition behind the
/// tabulated reference values. `Cylindrical` puts the `r dr` Jacobian in
/// both integrals, i.e. the mean of `r` under the true area measure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RavWeighting {
    #[default]
    Linear,
    Cylindrical,
}

/// Knobs shared by catalog assembly.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverOptions {
    pub scan_step_m: f64,
    pub quadrature_tol: f64,
    /// Relative guard ε: physical ⇔ `n_s(1+ε) < n_eff < n_w(1−ε)`.
    pub physicality_margin: f64,
    pub rav_weighting: RavWeighting,
}

pub const DEFAULT_QUADRATURE_TOL: f64 = 1e-8;
pub const DEFAULT_PHYSICALITY_MARGIN: f64 = 5e-2;

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions {
            scan_step_m: DEFAULT_SCAN_STEP,
            quadrature_tol: DEFAULT_QUADRATURE_TOL,
            physicality_margin: DEFAULT_PHYSICALITY_MARGIN,
            rav_weighting: RavWeighting::Linear,
        }
    }
}

impl SolverOptions {
    pub fn validate(&self) -> Result<()> {
        let bad = |name: &str, v: f64| {
            Err(Error::InvalidOption(format!(
                "{name} must be positive and finite, got {v}"
            )))
        };
        if !(self.scan_step_m > 0.0 && self.scan_step_m.is_finite()) {
            return bad("scan_step_m", self.scan_step_m);
        }
        if !(self.quadrature_tol > 0.0 && self.quadrature_tol.is_finite()) {
            return bad("quadrature_tol", self.quadrature_tol);
        }
        if !(self.physicality_margin > 0.0 && self.physicality_margin < 1.0) {
            return Err(Error::InvalidOption(format!(
                "physicality_margin must lie in (0, 1), got {}",
                self.physicality_margin
            )));
        }
        Ok(())
    }
}

/// One assembled mode `(i, l)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModeRecord {
    pub i: usize,
    pub l: usize,
    pub family: SlabFamily,
    pub m: f64,
    pub n_eff: f64,
    pub r_av: f64,
    pub physical: bool,
    pub beta_w: f64,
    pub beta_s: f64,
    pub h: f64,
    pub p: f64,
    pub zmode: ZModeSolution,
    pub radial: RadialSolution,
}

impl ModeRecord {
    /// `E(r, 0, z) = R(r) Z(z)`, not normalised.
    pub fn field(&self, g: &Geometry, r: f64, z: f64) -> Result<f64> {
        Ok(radial_profile(&self.radial, g, r)? * z_profile(&self.zmode, g, z))
    }
}

/// Builds every `(i, l)` mode of the geometry, ordered by `(i, l)`.
/// Non-physical modes are kept with `physical = false`.
pub fn assemble_catalog(g: &Geometry, opts: &SolverOptions) -> Result<Vec<ModeRecord>> {
    g.validate()?;
    opts.validate()?;
    let mut records = Vec::new();
    for zm in solve_z_modes(g) {
        let spectrum = solve_m_with_step(zm.h, g, opts.scan_step_m)?;
        for rs in spectrum.solutions {
            records.push(assemble_record(g, &zm, &rs, opts)?);
        }
    }
    Ok(records)
}

/// Assembles one record from its vertical and radial parts.
pub fn assemble_record(
    g: &Geometry,
    zm: &ZModeSolution,
    rs: &RadialSolution,
    opts: &SolverOptions,
) -> Result<ModeRecord> {
    let r_av = radial_moment(rs, g, opts.rav_weighting, opts.quadrature_tol)?;
    let n_eff = effective_index(rs.m, r_av, g);
    Ok(ModeRecord {
        i: zm.index_i,
        l: rs.l,
        family: zm.family,
        m: rs.m,
        n_eff,
        r_av,
        physical: is_physical(n_eff, g, opts.physicality_margin),
        beta_w: zm.beta_w,
        beta_s: zm.beta_s,
        h: zm.h,
        p: rs.p,
        zmode: *zm,
        radial: *rs,
    })
}

/// Average radial position of an assembled mode.
pub fn average_radial_position(
    mode: &ModeRecord,
    g: &Geometry,
    opts: &SolverOptions,
) -> Result<f64> {
    radial_moment(&mode.radial, g, opts.rav_weighting, opts.quadrature_tol)
}

/// `n_eff = m / (r_av k)`.
pub fn effective_index(m: f64, r_av: f64, g: &Geometry) -> f64 {
    m / (r_av * g.k())
}

pub fn is_physical(n_eff: f64, g: &Geometry, margin: f64) -> bool {
    n_eff > g.n_s * (1.0 + margin) && n_eff < g.n_w * (1.0 - margin)
}

// E is separable, so ∫Z² dz is a common factor of numerator and denominator
// and only the radial integrals are evaluated.
fn radial_moment(
    rs: &RadialSolution,
    g: &Geometry,
    weighting: RavWeighting,
    tol: f64,
) -> Result<f64> {
    let (num_pow, den_pow) = match weighting {
        RavWeighting::Linear => (1, 0),
        RavWeighting::Cylindrical => (2, 1),
    };
    let r_bar = g.mid_radius();
    let mut grid = SimpsonGrid::new(g.r1, g.r2, 256, |r| {
        let v = rs.unoriented_at(r)?;
        Ok(v * v)
    })?;
    let mut prev = grid.moment_ratio(num_pow, den_pow);
    loop {
        grid.refine(|r| {
            let v = rs.unoriented_at(r)?;
            Ok(v * v)
        })?;
        let next = grid.moment_ratio(num_pow, den_pow);
        if (next - prev).abs() < tol * r_bar || grid.intervals() >= 1 << 18 {
            return Ok(next);
        }
        prev = next;
    }
}

/// Samples of `f` on a uniform grid that can be refined by halving.
struct SimpsonGrid {
    a: f64,
    b: f64,
    values: Vec<f64>,
}

impl SimpsonGrid {
    fn new<F: FnMut(f64) -> Result<f64>>(
        a: f64,
        b: f64,
        intervals: usize,
        mut f: F,
    ) -> Result<Self> {
        let h = (b - a) / intervals as f64;
        let values = (0..=intervals)
            .map(|j| f(if j == intervals { b } else { a + h * j as f64 }))
            .collect::<Result<Vec<_>>>()?;
        Ok(SimpsonGrid { a, b, values })
    }

    fn intervals(&self) -> usize {
        self.values.len() - 1
    }

    fn refine<F: FnMut(f64) -> Result<f64>>(&mut self, mut f: F) -> Result<()> {
        let n = self.intervals();
        let h = (self.b - self.a) / (2 * n) as f64;
        let mut out = Vec::with_capacity(2 * n + 1);
        for (j, &v) in self.values.iter().enumerate() {
            out.push(v);
            if j < n {
                out.push(f(self.a + h * (2 * j + 1) as f64)?);
            }
        }
        self.values = out;
        Ok(())
    }

    /// Composite Simpson estimate of `∫ f r^pow dr`.
    fn moment(&self, pow: i32) -> f64 {
        let n = self.intervals();
        let h = (self.b - self.a) / n as f64;
        let mut sum = 0.0;
        for (j, &v) in self.values.iter().enumerate() {
            let r = if j == n {
                self.b
            } else {
                self.a + h * j as f64
            };
            let w = if j == 0 || j == n {
                1.0
            } else if j % 2 == 1 {
                4.0
            } else {
                2.0
            };
            sum += w * v * r.powi(pow);
        }
        sum * h / 3.0
    }

    fn moment_ratio(&self, num: i32, den: i32) -> f64 {
        self.moment(num) / self.moment(den)
    }
}

/// `E(r, 0, z)` sampled on a uniform grid, L2-normalised under `Δr Δz`.
#[derive(Debug, Clone, PartialEq)]
pub struct FieldGrid {
    pub r_samples: Vec<f64>,
    pub z_samples: Vec<f64>,
    /// Row-major with `z` as the row index: `values[iz * nr + ir]`.
    pub values: Vec<f64>,
}

impl FieldGrid {
    pub fn nr(&self) -> usize {
        self.r_samples.len()
    }

    pub fn nz(&self) -> usize {
        self.z_samples.len()
    }

    pub fn at(&self, ir: usize, iz: usize) -> f64 {
        self.values[iz * self.nr() + ir]
    }

    fn cell(&self) -> f64 {
        let dr = (self.r_samples[self.nr() - 1] - self.r_samples[0]) / (self.nr() - 1) as f64;
        let dz = (self.z_samples[self.nz() - 1] - self.z_samples[0]) / (self.nz() - 1) as f64;
        dr * dz
    }

    /// `Σ E² Δr Δz`.
    pub fn norm_sq(&self) -> f64 {
        self.values.iter().map(|v| v * v).sum::<f64>() * self.cell()
    }

    pub fn normalize(&mut self) {
        let n = self.norm_sq().sqrt();
        if n > 0.0 {
            self.values.iter_mut().for_each(|v| *v /= n);
        }
    }
}

/// Samples a mode over `[r1, r2] × [−z0 − z_pad, z0 + z_pad]`.
pub fn field_grid(
    mode: &ModeRecord,
    g: &Geometry,
    nr: usize,
    nz: usize,
    z_pad: f64,
) -> Result<FieldGrid> {
    if nr < 16 || nz < 16 {
        return Err(Error::InvalidGrid(format!(
            "need nr, nz >= 16, got nr={nr} nz={nz}"
        )));
    }
    if !(z_pad >= 0.0 && z_pad.is_finite()) {
        return Err(Error::InvalidGrid(format!(
            "z_pad must be finite and >= 0, got {z_pad}"
        )));
    }
    let zmax = g.z0() + z_pad;
    let r_samples = uniform(g.r1, g.r2, nr);
    // symmetric by construction so that parity survives sampling exactly
    let z_samples = symmetrize(uniform(-zmax, zmax, nz));
    let radial = r_samples
        .iter()
        .map(|&r| radial_profile(&mode.radial, g, r))
        .collect::<Result<Vec<_>>>()?;
    let mut values = Vec::with_capacity(nr * nz);
    for &z in &z_samples {
        let zv = z_profile(&mode.zmode, g, z);
        values.extend(radial.iter().map(|rv| rv * zv));
    }
    let mut grid = FieldGrid {
        r_samples,
        z_samples,
        values,
    };
    grid.normalize();
    Ok(grid)
}

fn uniform(a: f64, b: f64, n: usize) -> Vec<f64> {
    let h = (b - a) / (n - 1) as f64;
    (0..n)
        .map(|j| if j == n - 1 { b } else { a + h * j as f64 })
        .collect()
}

// Forces z[j] = −z[n−1−j] exactly.
fn symmetrize(mut z: Vec<f64>) -> Vec<f64> {
    let n = z.len();
    for j in 0..n / 2 {
        z[j] = -z[n - 1 - j];
    }
    if n % 2 == 1 {
        z[n / 2] = 0.0;
    }
    z
}
