//! Bracketed scalar root finding.

use crate::{Error, Result};

const MAX_ITER: usize = 200;

/// Brent's method on a sign-changing bracket `[a, b]`.
///
/// Stops when the bracket is narrower than `2 eps |x| + xtol / 2` or the
/// function vanishes exactly.
pub fn brent<F>(mut f: F, a: f64, b: f64, xtol: f64, context: &'static str) -> Result<f64>
where
    F: FnMut(f64) -> f64,
{
    let fail = || Error::SolverFailure {
        context,
        lo: a,
        hi: b,
    };
    let (mut a, mut b) = (a, b);
    let (mut fa, mut fb) = (f(a), f(b));
    if fa == 0.0 {
        return Ok(a);
    }
    if fb == 0.0 {
        return Ok(b);
    }
    if !(fa.is_finite() && fb.is_finite()) || fa.signum() == fb.signum() {
        return Err(fail());
    }
    let (mut c, mut fc) = (b, fb);
    let mut d = b - a;
    let mut e = d;
    for _ in 0..MAX_ITER {
        if fb.signum() == fc.signum() {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
        if libm::fabs(fc) < libm::fabs(fb) {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        let tol = 2.0 * f64::EPSILON * libm::fabs(b) + 0.5 * xtol;
        let m = 0.5 * (c - b);
        if libm::fabs(m) <= tol || fb == 0.0 {
            return Ok(b);
        }
        if libm::fabs(e) >= tol && libm::fabs(fa) > libm::fabs(fb) {
            let s = fb / fa;
            let (mut p, mut q);
            if a == c {
                p = 2.0 * m * s;
                q = 1.0 - s;
            } else {
                let qa = fa / fc;
                let r = fb / fc;
                p = s * (2.0 * m * qa * (qa - r) - (b - a) * (r - 1.0));
                q = (qa - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if p > 0.0 {
                q = -q;
            } else {
                p = -p;
            }
            let min1 = 3.0 * m * q - libm::fabs(tol * q);
            let min2 = libm::fabs(e * q);
            if 2.0 * p < min1.min(min2) {
                e = d;
                d = p / q;
            } else {
                d = m;
                e = d;
            }
        } else {
            d = m;
            e = d;
        }
        a = b;
        fa = fb;
        b += if libm::fabs(d) > tol {
            d
        } else if m > 0.0 {
            tol
        } else {
            -tol
        };
        fb = f(b);
        if !fb.is_finite() {
            return Err(fail());
        }
    }
    Err(fail())
}

/// Scans `[lo, hi]` in steps no wider than `max_step` and returns every
/// sub-interval across which `f` changes sign (or hits zero exactly).
pub fn sign_changes<F>(mut f: F, lo: f64, hi: f64, max_step: f64) -> alloc::vec::Vec<(f64, f64)>
where
    F: FnMut(f64) -> f64,
{
    let mut out = alloc::vec::Vec::new();
    if !(hi > lo) {
        return out;
    }
    let steps = libm::ceil((hi - lo) / max_step).max(1.0) as usize;
    let h = (hi - lo) / steps as f64;
    let mut x_prev = lo;
    let mut f_prev = f(lo);
    for k in 1..=steps {
        let x = if k == steps { hi } else { lo + h * k as f64 };
        let fx = f(x);
        if fx == 0.0 || (f_prev != 0.0 && f_prev.signum() != fx.signum()) {
            out.push((x_prev, x));
        }
        x_prev = x;
        f_prev = fx;
    }
    out
}
