//! Finite-difference cross-checks of the two separated eigenproblems.
//!
//! Both problems are reduced to symmetric tridiagonal matrices whose
//! eigenvalues in a window are located by Sturm-sequence bisection.
//!
//! * vertical: `−Z'' − k²n(z)² Z = −h² Z` on a truncated line with zero
//!   boundary values;
//! * radial: with `u = √r R`, `−u'' + (m² + 3/4)/r² u = h² u` on `[r1, r2]`
//!   with zero boundary values.

use crate::error::{Error, Result};
use crate::geometry::Geometry;

/// Minimum number of grid points accepted by the oracles.
pub const MIN_POINTS: usize = 200;
/// Default grid size.
pub const DEFAULT_POINTS: usize = 4001;
/// Evanescent decay lengths kept beyond each wall by default.
pub const DEFAULT_TAIL_LENGTHS: f64 = 12.0;

/// Symmetric tridiagonal matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Tridiag {
    pub diag: Vec<f64>,
    pub offdiag: Vec<f64>,
}

impl Tridiag {
    pub fn new(diag: Vec<f64>, offdiag: Vec<f64>) -> Result<Self> {
        if diag.is_empty() || offdiag.len() + 1 != diag.len() {
            return Err(Error::InvalidGrid(format!(
                "tridiagonal shape mismatch: {} diagonal, {} off-diagonal",
                diag.len(),
                offdiag.len()
            )));
        }
        Ok(Tridiag { diag, offdiag })
    }

    pub fn len(&self) -> usize {
        self.diag.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diag.is_empty()
    }

    /// Number of eigenvalues strictly below `x` (Sturm count from the
    /// signs of the LDLᵀ pivots of `T − xI`).
    pub fn count_below(&self, x: f64) -> usize {
        let mut count = 0;
        let mut q = self.diag[0] - x;
        if q < 0.0 {
            count += 1;
        }
        for i in 1..self.diag.len() {
            let b = self.offdiag[i - 1];
            if q == 0.0 {
                q = f64::EPSILON * (b.abs() + f64::MIN_POSITIVE);
            }
            q = self.diag[i] - x - b * b / q;
            if q < 0.0 {
                count += 1;
            }
        }
        count
    }

    /// Gershgorin interval containing the whole spectrum.
    pub fn gershgorin(&self) -> (f64, f64) {
        let n = self.len();
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for i in 0..n {
            let left = if i > 0 {
                self.offdiag[i - 1].abs()
            } else {
                0.0
            };
            let right = if i + 1 < n {
                self.offdiag[i].abs()
            } else {
                0.0
            };
            lo = lo.min(self.diag[i] - left - right);
            hi = hi.max(self.diag[i] + left + right);
        }
        (lo, hi)
    }

    /// Eigenvector for a computed eigenvalue by inverse iteration,
    /// normalised to unit Euclidean length.
    pub fn eigenvector(&self, lambda: f64) -> Vec<f64> {
        let n = self.len();
        let (glo, ghi) = self.gershgorin();
        let shift = lambda + 1e-10 * (ghi - glo).abs().max(f64::MIN_POSITIVE);
        let mut x = vec![1.0; n];
        for _ in 0..4 {
            x = self.solve_shifted(shift, &x);
            let norm = x.iter().map(|v| v * v).sum::<f64>().sqrt();
            x.iter_mut().for_each(|v| *v /= norm);
        }
        x
    }

    // Thomas algorithm for (T − σI) y = rhs.
    fn solve_shifted(&self, sigma: f64, rhs: &[f64]) -> Vec<f64> {
        let n = self.len();
        let mut c = vec![0.0; n];
        let mut d = vec![0.0; n];
        let guard = |v: f64| if v == 0.0 { f64::EPSILON } else { v };
        let mut denom = guard(self.diag[0] - sigma);
        if n > 1 {
            c[0] = self.offdiag[0] / denom;
        }
        d[0] = rhs[0] / denom;
        for i in 1..n {
            let a = self.offdiag[i - 1];
            denom = guard(self.diag[i] - sigma - a * c[i - 1]);
            if i + 1 < n {
                c[i] = self.offdiag[i] / denom;
            }
            d[i] = (rhs[i] - a * d[i - 1]) / denom;
        }
        let mut y = d;
        for i in (0..n - 1).rev() {
            y[i] -= c[i] * y[i + 1];
        }
        y
    }
}

/// All eigenvalues of `t` inside `(lower, upper)`, ascending.
pub fn tridiag_eigenvalues(t: &Tridiag, lower: f64, upper: f64) -> Vec<f64> {
    if lower.partial_cmp(&upper) != Some(std::cmp::Ordering::Less) || t.is_empty() {
        return Vec::new();
    }
    let first = t.count_below(lower);
    let last = t.count_below(upper);
    let (glo, ghi) = t.gershgorin();
    let lo0 = lower.max(glo - 1.0);
    let hi0 = upper.min(ghi + 1.0);
    let mut out = Vec::with_capacity(last.saturating_sub(first));
    for k in first..last {
        // smallest x with count_below(x) > k
        let mut lo = lo0;
        let mut hi = hi0;
        for _ in 0..256 {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            let tol = 2.0 * f64::EPSILON * lo.abs().max(hi.abs());
            if hi - lo <= tol {
                break;
            }
            if t.count_below(mid) > k {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        out.push(0.5 * (lo + hi));
    }
    out
}

/// Discretised vertical operator and its grid.
#[derive(Debug, Clone)]
pub struct ZOperator {
    pub matrix: Tridiag,
    /// Interior node positions.
    pub z: Vec<f64>,
    pub spacing: f64,
    /// Half-width actually used after snapping the walls onto nodes.
    pub half_width: f64,
}

/// Default truncation half-width `z0 + 12/β_s` for the slowest-decaying
/// guided mode; `z0 + b` when nothing is guided.
pub fn default_z_half_width(g: &Geometry) -> f64 {
    let min_beta_s = crate::slab::solve_z_modes(g)
        .iter()
        .map(|m| m.beta_s)
        .fold(f64::INFINITY, f64::min);
    if min_beta_s.is_finite() && min_beta_s > 0.0 {
        g.z0() + DEFAULT_TAIL_LENGTHS / min_beta_s
    } else {
        g.z0() + g.b
    }
}

/// Builds the vertical operator with `n_points` nodes (including the two
/// Dirichlet ends). The spacing is adjusted so that `±z0` are grid nodes;
/// those nodes carry the mean of `n_w²` and `n_s²`.
pub fn z_operator(g: &Geometry, n_points: usize, domain_half_width: f64) -> Result<ZOperator> {
    if n_points < MIN_POINTS {
        return Err(Error::InvalidGrid(format!(
            "n_points must be >= {MIN_POINTS}, got {n_points}"
        )));
    }
    if n_points.is_multiple_of(2) {
        return Err(Error::InvalidGrid(format!(
            "n_points must be odd, got {n_points}"
        )));
    }
    let z0 = g.z0();
    if !(domain_half_width > z0 && domain_half_width.is_finite()) {
        return Err(Error::InvalidGrid(format!(
            "half-width {domain_half_width} must exceed z0 = {z0}"
        )));
    }
    let half_nodes = (n_points - 1) / 2;
    let nominal = domain_half_width / half_nodes as f64;
    let wall = ((z0 / nominal).round() as usize).max(1);
    if wall + 1 > half_nodes {
        return Err(Error::InvalidGrid(format!(
            "grid too coarse: {n_points} points cannot resolve the core inside half-width {domain_half_width}"
        )));
    }
    let dz = z0 / wall as f64;
    let k2 = g.k() * g.k();
    let (nw2, ns2) = (g.n_w * g.n_w, g.n_s * g.n_s);
    let inv = 1.0 / (dz * dz);
    let mut diag = Vec::with_capacity(n_points - 2);
    let mut z = Vec::with_capacity(n_points - 2);
    for j in 1..n_points - 1 {
        let offset = j as isize - half_nodes as isize;
        let n2 = match offset.unsigned_abs().cmp(&wall) {
            std::cmp::Ordering::Less => nw2,
            std::cmp::Ordering::Equal => 0.5 * (nw2 + ns2),
            std::cmp::Ordering::Greater => ns2,
        };
        diag.push(2.0 * inv - k2 * n2);
        z.push(offset as f64 * dz);
    }
    let offdiag = vec![-inv; diag.len() - 1];
    Ok(ZOperator {
        matrix: Tridiag::new(diag, offdiag)?,
        z,
        spacing: dz,
        half_width: dz * half_nodes as f64,
    })
}

/// Guided in-plane momenta `h` of the vertical problem, descending.
pub fn z_fd_eigen(g: &Geometry, n_points: usize, domain_half_width: f64) -> Result<Vec<f64>> {
    let op = z_operator(g, n_points, domain_half_width)?;
    let k2 = g.k() * g.k();
    let lower = -k2 * g.n_w * g.n_w;
    let upper = -k2 * g.n_s * g.n_s;
    Ok(tridiag_eigenvalues(&op.matrix, lower, upper)
        .into_iter()
        .map(|mu| (-mu).sqrt())
        .collect())
}

/// Discretised radial operator and its interior nodes.
#[derive(Debug, Clone)]
pub struct RadialOperator {
    pub matrix: Tridiag,
    pub r: Vec<f64>,
    pub spacing: f64,
}

pub fn radial_operator(m: f64, g: &Geometry, n_points: usize) -> Result<RadialOperator> {
    if n_points < MIN_POINTS {
        return Err(Error::InvalidGrid(format!(
            "n_points must be >= {MIN_POINTS}, got {n_points}"
        )));
    }
    if !(m >= 0.0 && m.is_finite()) {
        return Err(Error::InvalidOption(format!(
            "m must be finite and >= 0, got {m}"
        )));
    }
    let dr = g.width() / (n_points - 1) as f64;
    let inv = 1.0 / (dr * dr);
    let c = m * m + 0.75;
    let r: Vec<f64> = (1..n_points - 1).map(|j| g.r1 + dr * j as f64).collect();
    let diag: Vec<f64> = r.iter().map(|&ri| 2.0 * inv + c / (ri * ri)).collect();
    let offdiag = vec![-inv; diag.len() - 1];
    Ok(RadialOperator {
        matrix: Tridiag::new(diag, offdiag)?,
        r,
        spacing: dr,
    })
}

/// Radial momenta `h < k n_w` admitting azimuthal order `m`, ascending
/// (equivalently, in increasing radial node count).
pub fn radial_fd_eigen(m: f64, g: &Geometry, n_points: usize) -> Result<Vec<f64>> {
    let op = radial_operator(m, g, n_points)?;
    let kn = g.k() * g.n_w;
    Ok(tridiag_eigenvalues(&op.matrix, 0.0, kn * kn)
        .into_iter()
        .map(f64::sqrt)
        .collect())
}
