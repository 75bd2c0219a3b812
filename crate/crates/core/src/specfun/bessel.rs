use super::Limits;
use crate::error::{domain, Result};

/// Values beyond this magnitude are rescaled during downward recurrence.
const RESCALE_THRESHOLD: f64 = 1e250;

/// `j_n(x)` with order and argument checks against the default [`Limits`].
///
/// Accurate to roughly 1e-13 relative away from the zeros of `j_n` for
/// `n <= 200`, `x <= 2000`.
pub fn spherical_bessel_j(n: u32, x: f64) -> Result<f64> {
    check_args(&Limits::default(), n, x)?;
    Ok(sph_j(n, x))
}

/// `j_n'(x)` with the same checks as [`spherical_bessel_j`].
pub fn spherical_bessel_j_prime(n: u32, x: f64) -> Result<f64> {
    check_args(&Limits::default(), n, x)?;
    Ok(sph_j_prime(n, x))
}

impl Limits {
    pub fn bessel_j(&self, n: u32, x: f64) -> Result<f64> {
        check_args(self, n, x)?;
        Ok(sph_j(n, x))
    }

    pub fn bessel_j_prime(&self, n: u32, x: f64) -> Result<f64> {
        check_args(self, n, x)?;
        Ok(sph_j_prime(n, x))
    }
}

fn check_args(limits: &Limits, n: u32, x: f64) -> Result<()> {
    limits.check_order(n)?;
    if !x.is_finite() {
        return Err(domain("x", x, "argument must be finite"));
    }
    if x < 0.0 {
        return Err(domain("x", x, "argument must be non-negative"));
    }
    Ok(())
}

/// Unchecked `j_n(x)` for `x >= 0`.
#[inline]
pub fn sph_j(n: u32, x: f64) -> f64 {
    if n == 0 {
        return j0(x);
    }
    sph_j_pair(n - 1, x).1
}

/// Unchecked `j_n'(x)`, from `j_n' = j_{n-1} - (n+1)/x j_n`.
pub fn sph_j_prime(n: u32, x: f64) -> f64 {
    if x == 0.0 {
        return if n == 1 { 1.0 / 3.0 } else { 0.0 };
    }
    if n == 0 {
        return -sph_j(1, x);
    }
    let (lower, jn) = sph_j_pair(n - 1, x);
    lower - f64::from(n + 1) / x * jn
}

fn j0(x: f64) -> f64 {
    if x < 1e-4 {
        let x2 = x * x;
        1.0 - x2 / 6.0 * (1.0 - x2 / 20.0)
    } else {
        libm::sin(x) / x
    }
}

fn j1(x: f64) -> f64 {
    if x < 0.5 {
        // Power series; the closed form cancels catastrophically here.
        let x2 = x * x;
        let mut term = x / 3.0;
        let mut sum = term;
        let mut k = 1.0;
        while libm::fabs(term) > 1e-18 * libm::fabs(sum) {
            term *= -x2 / (2.0 * k * (2.0 * k + 3.0));
            sum += term;
            k += 1.0;
        }
        sum
    } else {
        let (s, c) = (libm::sin(x), libm::cos(x));
        (s / x - c) / x
    }
}

/// Returns `(j_n(x), j_{n+1}(x))` from a single recurrence pass.
///
/// Upward recurrence is used when `x >= n + 1`, Miller's downward
/// recurrence otherwise.
pub fn sph_j_pair(n: u32, x: f64) -> (f64, f64) {
    if x == 0.0 {
        return (if n == 0 { 1.0 } else { 0.0 }, 0.0);
    }
    let top = n + 1;
    if x >= f64::from(top) {
        let mut prev = j0(x);
        let mut cur = j1(x);
        for k in 1..n {
            let next = f64::from(2 * k + 1) / x * cur - prev;
            prev = cur;
            cur = next;
        }
        if n == 0 {
            (prev, cur)
        } else {
            let next = f64::from(2 * n + 1) / x * cur - prev;
            (cur, next)
        }
    } else {
        miller_pair(n, x)
    }
}

fn miller_start(n: u32, x: f64) -> u32 {
    // j_k(x) falls off super-exponentially once k exceeds x; the cube-root
    // term covers the transition region around k ~ x.
    let extra = 24.0 + 6.0 * libm::cbrt(x.max(1.0));
    n + 1 + extra as u32
}

fn miller_pair(n: u32, x: f64) -> (f64, f64) {
    let start = miller_start(n, x);
    let mut f_next = 0.0_f64; // f_{k+1}
    let mut f_cur = 1e-300_f64; // f_k
    let mut lo = 0.0;
    let mut hi = 0.0;
    let mut k = start;
    while k > 0 {
        let f_prev = f64::from(2 * k + 1) / x * f_cur - f_next;
        f_next = f_cur;
        f_cur = f_prev;
        k -= 1;
        if k == n + 1 {
            hi = f_cur;
        } else if k == n {
            lo = f_cur;
        }
        if libm::fabs(f_cur) > RESCALE_THRESHOLD {
            let s = 1.0 / RESCALE_THRESHOLD;
            f_cur *= s;
            f_next *= s;
            lo *= s;
            hi *= s;
        }
    }
    // f_cur ~ j_0, f_next ~ j_1 up to a common factor.
    let (a0, a1) = (j0(x), j1(x));
    let scale = if libm::fabs(a0) >= libm::fabs(a1) {
        a0 / f_cur
    } else {
        a1 / f_next
    };
    (lo * scale, hi * scale)
}
