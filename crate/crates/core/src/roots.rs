//! Bracketed scalar root refinement.

/// Bisection on a sign-changing bracket down to adjacent floating-point
/// numbers. `fa`, `fb` are the known endpoint values.
pub fn bisect<F: FnMut(f64) -> f64>(mut f: F, mut a: f64, mut b: f64, mut fa: f64, fb: f64) -> f64 {
    debug_assert!(fa.signum() != fb.signum());
    for _ in 0..200 {
        let mid = 0.5 * (a + b);
        if mid <= a.min(b) || mid >= a.max(b) {
            break;
        }
        let fm = f(mid);
        if fm == 0.0 {
            return mid;
        }
        if fm.signum() == fa.signum() {
            a = mid;
            fa = fm;
        } else {
            b = mid;
        }
    }
    // Of the two final endpoints, return the one with the smaller residual.
    let fa_abs = fa.abs();
    let fb_abs = f(b).abs();
    if fa_abs <= fb_abs {
        a
    } else {
        b
    }
}

/// Bisection stopping once the bracket is narrower than `tol`.
pub fn bisect_tol<F, E>(mut f: F, mut a: f64, mut b: f64, mut fa: f64, tol: f64) -> Result<f64, E>
where
    F: FnMut(f64) -> Result<f64, E>,
{
    while (b - a).abs() > tol {
        let mid = 0.5 * (a + b);
        if mid <= a.min(b) || mid >= a.max(b) {
            break;
        }
        let fm = f(mid)?;
        if fm == 0.0 {
            return Ok(mid);
        }
        if fm.signum() == fa.signum() {
            a = mid;
            fa = fm;
        } else {
            b = mid;
        }
    }
    Ok(0.5 * (a + b))
}
