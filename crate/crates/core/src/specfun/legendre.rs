use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::error::domain;
use crate::Result;

/// Orthonormal associated Legendre function with the Condon-Shortley
/// phase, so that `Y_lm(theta, phi) = normalized_legendre(l, m, theta) e^{i m phi}`
/// for `m >= 0`.
pub fn normalized_legendre(l: u32, m: u32, theta: f64) -> f64 {
    if m > l {
        return 0.0;
    }
    let (s, c) = (libm::sin(theta), libm::cos(theta));
    let mut pmm = libm::sqrt(1.0 / (4.0 * PI));
    for k in 1..=m {
        let k = f64::from(k);
        pmm *= -libm::sqrt((2.0 * k + 1.0) / (2.0 * k)) * s;
    }
    if l == m {
        return pmm;
    }
    let mut p_prev = pmm;
    let mut p_cur = libm::sqrt(f64::from(2 * m + 3)) * c * pmm;
    let mf = f64::from(m);
    let mut a_prev = libm::sqrt(f64::from(2 * m + 3));
    for ll in (m + 2)..=l {
        let lf = f64::from(ll);
        let a = libm::sqrt((4.0 * lf * lf - 1.0) / (lf * lf - mf * mf));
        let next = a * (c * p_cur - p_prev / a_prev);
        p_prev = p_cur;
        p_cur = next;
        a_prev = a;
    }
    p_cur
}

/// `|Y_lm(theta, .)|^2`, independent of the azimuth.
pub fn assoc_legendre_density(l: u32, m: i32, theta: f64) -> Result<f64> {
    if m.unsigned_abs() > l {
        return Err(domain("m", f64::from(m), "|m| must not exceed l"));
    }
    if !(0.0..=PI).contains(&theta) {
        return Err(domain("theta", theta, "polar angle must lie in [0, pi]"));
    }
    let p = normalized_legendre(l, m.unsigned_abs(), theta);
    Ok(p * p)
}

/// Table of `|Y_lm|^2` for `0 <= m <= l <= l_max` at a fixed polar angle.
#[derive(Debug, Clone, PartialEq)]
pub struct HarmonicDensities {
    l_max: u32,
    values: Vec<f64>,
}

impl HarmonicDensities {
    pub fn new(l_max: u32, theta: f64) -> Self {
        let (s, c) = (libm::sin(theta), libm::cos(theta));
        let n = Self::index(l_max, l_max) + 1;
        let mut values = vec![0.0; n];
        let mut pmm = libm::sqrt(1.0 / (4.0 * PI));
        for m in 0..=l_max {
            if m > 0 {
                let k = f64::from(m);
                pmm *= -libm::sqrt((2.0 * k + 1.0) / (2.0 * k)) * s;
            }
            values[Self::index(m, m)] = pmm * pmm;
            if m == l_max {
                break;
            }
            let mf = f64::from(m);
            let mut a_prev = libm::sqrt(f64::from(2 * m + 3));
            let mut p_prev = pmm;
            let mut p_cur = a_prev * c * pmm;
            values[Self::index(m + 1, m)] = p_cur * p_cur;
            for l in (m + 2)..=l_max {
                let lf = f64::from(l);
                let a = libm::sqrt((4.0 * lf * lf - 1.0) / (lf * lf - mf * mf));
                let next = a * (c * p_cur - p_prev / a_prev);
                p_prev = p_cur;
                p_cur = next;
                a_prev = a;
                values[Self::index(l, m)] = p_cur * p_cur;
            }
        }
        Self { l_max, values }
    }

    fn index(l: u32, m: u32) -> usize {
        (l as usize * (l as usize + 1)) / 2 + m as usize
    }

    pub fn l_max(&self) -> u32 {
        self.l_max
    }

    /// `|Y_lm|^2`; zero outside `|m| <= l <= l_max`.
    #[inline]
    pub fn get(&self, l: u32, m: i32) -> f64 {
        let am = m.unsigned_abs();
        if am > l || l > self.l_max {
            return 0.0;
        }
        self.values[Self::index(l, am)]
    }
}
