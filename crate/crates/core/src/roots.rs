//! Scalar root finding on the unit interval.

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Points on the default descending scan grid.
pub const SCAN_POINTS: usize = 10_000;

/// Width of the left neighbourhood used by [`negative_below`].
pub const REGULARITY_EPS: f64 = 1e-4;

/// Bisection for a sign change of `f` on `[lo, hi]`.
///
/// Stops once the bracket is narrower than `tol` or cannot be halved further.
pub fn bisect<T: Real, F: FnMut(T) -> T>(mut f: F, mut lo: T, mut hi: T, tol: T) -> Result<T> {
    let mut f_lo = f(lo);
    let f_hi = f(hi);
    if f_lo == T::zero() {
        return Ok(lo);
    }
    if f_hi == T::zero() {
        return Ok(hi);
    }
    if f_lo.signum() == f_hi.signum() || f_lo.is_nan() || f_hi.is_nan() {
        return Err(Error::numeric(format!(
            "no sign change on [{lo}, {hi}]: f = {f_lo}, {f_hi}"
        )));
    }
    let half = T::lit(0.5);
    for _ in 0..400 {
        if hi - lo <= tol {
            break;
        }
        let mid = lo + (hi - lo) * half;
        if mid <= lo || mid >= hi {
            break;
        }
        let f_mid = f(mid);
        if f_mid == T::zero() {
            return Ok(mid);
        }
        if f_mid.signum() == f_lo.signum() {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    Ok(lo + (hi - lo) * half)
}

/// Descending evaluation points in `[0, 1)`: a uniform grid of `points`
/// entries refined geometrically towards 1.
fn scan_points<T: Real>(points: usize) -> Vec<T> {
    let n = points.max(2);
    let mut pts: Vec<T> = (0..n)
        .map(|i| T::from_usize_lossy(i) / T::from_usize_lossy(n))
        .collect();
    let top = T::from_usize_lossy(n - 1) / T::from_usize_lossy(n);
    let mut gap = T::one() - top;
    let floor = T::epsilon() * T::lit(64.0);
    loop {
        gap = gap * T::lit(0.1);
        if gap < floor {
            break;
        }
        pts.push(T::one() - gap);
    }
    pts.sort_by(|a, b| b.partial_cmp(a).expect("finite grid"));
    pts.dedup();
    pts
}

/// Largest root of `g` in `[0, 1)`: scans downward from 1 and bisects the
/// first sign change relative to the value closest to 1.
///
/// Returns `None` when `g` keeps one strict sign over the whole scan.
pub fn largest_root_below_one<T: Real, F: FnMut(T) -> T>(
    mut g: F,
    points: usize,
    tol: T,
) -> Result<Option<T>> {
    let pts = scan_points::<T>(points);
    let mut prev = pts[0];
    let g_top = g(prev);
    if g_top.is_nan() {
        return Err(Error::numeric(format!("g({prev}) is NaN")));
    }
    if g_top == T::zero() {
        return Ok(Some(prev));
    }
    let top_sign = g_top.signum();
    for &z in &pts[1..] {
        let gz = g(z);
        if gz.is_nan() {
            return Err(Error::numeric(format!("g({z}) is NaN")));
        }
        if gz == T::zero() {
            return Ok(Some(z));
        }
        if gz.signum() != top_sign {
            return bisect(&mut g, z, prev, tol).map(Some);
        }
        prev = z;
    }
    Ok(None)
}

/// Checks `g < 0` on `(root - eps, root)` at a handful of sample points.
/// Vacuously true at `root = 0`.
pub fn negative_below<T: Real, F: FnMut(T) -> T>(mut g: F, root: T, eps: T) -> bool {
    let samples = 16;
    (1..=samples).all(|j| {
        let z = root - eps * T::from_usize_lossy(j) / T::from_usize_lossy(samples);
        z < T::zero() || g(z) < T::zero()
    })
}
