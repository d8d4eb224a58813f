//! Radial problem: azimuthal orders allowed by perfect confinement at `r1`
//! and `r2` for a given in-plane momentum `h`.
//!
//! The radial factor is `R(r) = sin(p) J_α(hr) + cos(p) Y_α(hr)` with
//! `α = √(m² + 1)`. Requiring `R(r1) = R(r2) = 0` leaves the cross-product
//! condition `J_α(h r2) Y_α(h r1) − J_α(h r1) Y_α(h r2) = 0`, solved here
//! for real `m`.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::geometry::Geometry;
use crate::roots::bisect_tol;
use crate::specfun::{bessel_jy, bessel_jy_derivs, cross_from_pairs, cross_scale, BesselPair};

/// Default spacing of the sign-change scan in `m`.
pub const DEFAULT_SCAN_STEP: f64 = 0.02;
/// Roots are refined until the bracket is narrower than this.
pub const ROOT_TOL_M: f64 = 1e-10;
/// Roots closer than this to zero are reported as `m = 0`.
pub const ZERO_M_SNAP: f64 = 1e-6;
/// Threshold, relative to the cross-product scale, for reporting a
/// touching (double) zero that bisection cannot certify.
pub const TANGENT_REL: f64 = 1e-12;

/// One radial mode at fixed `h`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadialSolution {
    /// 1 = fewest radial oscillations = largest `m`.
    pub l: usize,
    pub m: f64,
    pub alpha: f64,
    /// Mixing phase, principal branch `(−π/2, π/2]`.
    pub p: f64,
    pub h: f64,
    /// `±1`, chosen so that `R'(r1) > 0`.
    pub orientation: f64,
    // sin(p), cos(p) computed from the normalised (−Y, J) vector rather
    // than from `p`, which loses digits when |Y/J| is large.
    sin_p: f64,
    cos_p: f64,
}

impl RadialSolution {
    /// Builds the solution for a root `m`, fixing `p` from the inner wall.
    pub fn new(l: usize, m: f64, h: f64, g: &Geometry) -> Result<Self> {
        let alpha = order_for(m);
        let inner = bessel_jy_derivs(alpha, h * g.r1)?;
        let norm = inner.j_val.hypot(inner.y_val);
        // (sin p, cos p) ∝ (−Y1, J1), with cos p >= 0 on the principal branch.
        let sgn = if inner.j_val < 0.0 { -1.0 } else { 1.0 };
        let sin_p = -sgn * inner.y_val / norm;
        let cos_p = sgn * inner.j_val / norm;
        let p = if cos_p == 0.0 {
            PI / 2.0
        } else {
            (sin_p / cos_p).atan()
        };
        let slope = sin_p * inner.j_prime + cos_p * inner.y_prime;
        let orientation = if slope < 0.0 { -1.0 } else { 1.0 };
        Ok(RadialSolution {
            l,
            m,
            alpha,
            p,
            h,
            orientation,
            sin_p,
            cos_p,
        })
    }

    pub fn sin_p(&self) -> f64 {
        self.sin_p
    }

    pub fn cos_p(&self) -> f64 {
        self.cos_p
    }

    /// Nearest integer order, the quantity a closed ring would require.
    pub fn nearest_integer_m(&self) -> i64 {
        self.m.round() as i64
    }

    /// `sin(p) J_α(hr) + cos(p) Y_α(hr)` without the orientation sign.
    pub fn unoriented_at(&self, r: f64) -> Result<f64> {
        let jy = bessel_jy(self.alpha, self.h * r)?;
        Ok(self.sin_p * jy.j_val + self.cos_p * jy.y_val)
    }
}

/// Bessel order `α = √(m² + 1)`.
#[inline]
pub fn order_for(m: f64) -> f64 {
    (m * m + 1.0).sqrt()
}

/// Upper bound on the number of radial modes, `⌊h (r2 − r1)/π⌋`.
pub fn l_max(h: f64, g: &Geometry) -> usize {
    let v = h * g.width() / PI;
    if v.is_finite() && v > 0.0 {
        v.floor() as usize
    } else {
        0
    }
}

/// Zeroth-order estimate `m⁰ = r̄ √(h² − (lπ/Δr)² − 1/r̄²)`; `None` when the
/// radicand is not positive.
pub fn m0_estimate(h: f64, l: usize, g: &Geometry) -> Option<f64> {
    if l == 0 {
        return None;
    }
    let rbar = g.mid_radius();
    let kl = l as f64 * PI / g.width();
    let radicand = h * h - kl * kl - 1.0 / (rbar * rbar);
    if radicand > 0.0 {
        Some(rbar * radicand.sqrt())
    } else {
        None
    }
}

/// Cross product as a function of `m`, with its magnitude scale.
pub fn cross_in_m(m: f64, h: f64, g: &Geometry) -> Result<(f64, f64)> {
    let alpha = order_for(m);
    let (inner, outer) = pairs(alpha, h, g)?;
    Ok((
        cross_from_pairs(&inner, &outer),
        cross_scale(&inner, &outer),
    ))
}

fn pairs(alpha: f64, h: f64, g: &Geometry) -> Result<(BesselPair, BesselPair)> {
    Ok((bessel_jy(alpha, h * g.r1)?, bessel_jy(alpha, h * g.r2)?))
}

/// Roots of the cross product at one `h`, plus any touching zeros found.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct RadialSpectrum {
    /// Sorted by descending `m`, `l = 1, 2, …`.
    pub solutions: Vec<RadialSolution>,
    /// Locations in `m` of near-tangent minima of `|F|` that were not
    /// accepted as roots.
    pub near_tangent: Vec<f64>,
}

/// All real `m >= 0` satisfying the cross-product condition at momentum `h`,
/// using the default scan step.
pub fn solve_m(h: f64, g: &Geometry) -> Result<RadialSpectrum> {
    solve_m_with_step(h, g, DEFAULT_SCAN_STEP)
}

/// [`solve_m`] with an explicit scan step in `m`.
///
/// The scan covers `m ∈ [0, h r2]`; every sign change is bisected to
/// [`ROOT_TOL_M`].
pub fn solve_m_with_step(h: f64, g: &Geometry, step: f64) -> Result<RadialSpectrum> {
    if !(step > 0.0 && step.is_finite()) {
        return Err(Error::InvalidOption(format!(
            "scan step must be positive, got {step}"
        )));
    }
    if !(h > 0.0 && h.is_finite()) {
        return Err(Error::InvalidOption(format!("h must be positive, got {h}")));
    }
    let mut spectrum = RadialSpectrum::default();
    if l_max(h, g) == 0 {
        return Ok(spectrum);
    }

    let m_top = h * g.r2;
    let n = (m_top / step).ceil() as usize;
    let f = |m: f64| cross_in_m(m, h, g).map(|(v, _)| v);

    let mut roots: Vec<f64> = Vec::new();
    // (m, F, scale) of the last three samples, for tangent detection.
    let mut window: Vec<(f64, f64, f64)> = Vec::with_capacity(3);
    for j in 0..=n {
        let m = (j as f64 * step).min(m_top);
        let (fm, scale) = cross_in_m(m, h, g)?;
        if fm == 0.0 {
            roots.push(m);
        } else if let Some(&(pm, pf, _)) = window.last() {
            if pf != 0.0 && pf.signum() != fm.signum() {
                roots.push(bisect_tol(f, pm, m, pf, ROOT_TOL_M)?);
            }
        }
        window.push((m, fm, scale));
        if window.len() > 3 {
            window.remove(0);
        }
        if window.len() == 3 {
            if let Some(mt) = tangent_candidate(&window, h, g)? {
                spectrum.near_tangent.push(mt);
            }
        }
    }

    roots.sort_by(|a, b| b.total_cmp(a));
    roots.dedup_by(|a, b| (*a - *b).abs() < 10.0 * ROOT_TOL_M);
    for (idx, mut m) in roots.into_iter().enumerate() {
        if m.abs() < ZERO_M_SNAP {
            m = 0.0;
        }
        spectrum
            .solutions
            .push(RadialSolution::new(idx + 1, m, h, g)?);
    }
    Ok(spectrum)
}

/// Looks for a local minimum of `|F|` between two same-signed neighbours and
/// refines it by golden-section search.
fn tangent_candidate(w: &[(f64, f64, f64)], h: f64, g: &Geometry) -> Result<Option<f64>> {
    let (a, fa, _) = w[0];
    let (_, fb, scale) = w[1];
    let (c, fc, _) = w[2];
    let same_sign = fa.signum() == fb.signum() && fb.signum() == fc.signum();
    if !(same_sign && fb.abs() < fa.abs() && fb.abs() < fc.abs()) {
        return Ok(None);
    }
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let (mut lo, mut hi) = (a, c);
    let mut x1 = hi - inv_phi * (hi - lo);
    let mut x2 = lo + inv_phi * (hi - lo);
    let abs_f = |m: f64| cross_in_m(m, h, g).map(|(v, _)| v.abs());
    let mut f1 = abs_f(x1)?;
    let mut f2 = abs_f(x2)?;
    for _ in 0..60 {
        if f1 < f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = abs_f(x1)?;
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = abs_f(x2)?;
        }
    }
    let (xm, fm) = if f1 < f2 { (x1, f1) } else { (x2, f2) };
    Ok((fm < TANGENT_REL * scale).then_some(xm))
}

/// Oriented radial profile; zero outside `[r1, r2]`.
pub fn radial_profile(rs: &RadialSolution, g: &Geometry, r: f64) -> Result<f64> {
    if r < g.r1 || r > g.r2 {
        return Ok(0.0);
    }
    Ok(rs.orientation * rs.unoriented_at(r)?)
}

/// Number of strict sign changes of `R` over `samples` interior points.
pub fn interior_sign_changes(rs: &RadialSolution, g: &Geometry, samples: usize) -> Result<usize> {
    let dr = g.width() / (samples + 1) as f64;
    let mut count = 0;
    let mut prev = 0.0f64;
    for j in 1..=samples {
        let v = radial_profile(rs, g, g.r1 + dr * j as f64)?;
        if v != 0.0 {
            if prev != 0.0 && v.signum() != prev.signum() {
                count += 1;
            }
            prev = v;
        }
    }
    Ok(count)
}
