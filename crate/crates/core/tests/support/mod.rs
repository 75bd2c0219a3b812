//! Brute-force reference implementations shared by integration tests.
//!
//! Nothing here uses the library's root brackets, closed-form
//! normalizations, angular tables or symmetry reductions: roots come from a
//! dense sign scan plus bisection, normalization from Gauss-Legendre
//! quadrature, angular densities from explicit Legendre polynomials and the
//! condensate from an explicit loop over every quantum number.
#![allow(dead_code)]

use std::collections::HashMap;
use std::f64::consts::PI;

use rotsphere_core::quadrature::GaussLegendre;
use rotsphere_core::specfun::sph_j;
use rotsphere_core::{BoundaryKind, PhysicalParams};

/// Dense-scan step in `x = pR`.
pub const SCAN_STEP: f64 = 1e-3;

/// All sign changes of `f` on `(lo, hi]` refined by bisection to full
/// precision.
pub fn scan_roots(f: impl Fn(f64) -> f64, lo: f64, hi: f64, step: f64) -> Vec<f64> {
    let mut roots = Vec::new();
    let mut a = lo;
    let mut fa = f(a);
    let n = ((hi - lo) / step).ceil() as usize;
    for k in 1..=n {
        let b = (lo + step * k as f64).min(hi);
        let fb = f(b);
        if fb == 0.0 {
            roots.push(b);
        } else if fa != 0.0 && (fa < 0.0) != (fb < 0.0) {
            let (mut x0, mut x1, mut f0) = (a, b, fa);
            for _ in 0..200 {
                let mid = 0.5 * (x0 + x1);
                if mid <= x0 || mid >= x1 {
                    break;
                }
                let fm = f(mid);
                if (fm < 0.0) == (f0 < 0.0) {
                    x0 = mid;
                    f0 = fm;
                } else {
                    x1 = mid;
                }
            }
            roots.push(0.5 * (x0 + x1));
        }
        a = b;
        fa = fb;
    }
    roots
}

fn upper_order(kappa: i32) -> u32 {
    if kappa > 0 {
        (kappa - 1) as u32
    } else {
        (-kappa) as u32
    }
}

fn lower_order(kappa: i32) -> u32 {
    if kappa > 0 {
        kappa as u32
    } else {
        (-kappa - 1) as u32
    }
}

/// Energy `esign sqrt(p^2 + M^2)`.
pub fn energy(esign: i8, p: f64, mass: f64) -> f64 {
    f64::from(esign) * (p * p + mass * mass).sqrt()
}

/// Raw MIT condition `j_l(x) - sgn(kappa) varsigma p/(E+M) j_lbar(x)`.
pub fn mit_condition(kappa: i32, esign: i8, mass: f64, radius: f64, varsigma: f64, x: f64) -> f64 {
    let p = x / radius;
    let e = energy(esign, p, mass);
    let s = if kappa > 0 { 1.0 } else { -1.0 };
    sph_j(upper_order(kappa), x) - s * varsigma * p / (e + mass) * sph_j(lower_order(kappa), x)
}

/// Unnormalized radial amplitudes `(f, g/i)`.
pub fn radial(kappa: i32, esign: i8, p: f64, mass: f64, r: f64) -> (f64, f64) {
    let e = energy(esign, p, mass);
    let a = ((e + mass) / (2.0 * e)).max(0.0).sqrt();
    let b = ((e - mass) / (2.0 * e)).max(0.0).sqrt();
    let s = if kappa > 0 { 1.0 } else { -1.0 };
    (
        a * sph_j(upper_order(kappa), p * r),
        f64::from(esign) * s * b * sph_j(lower_order(kappa), p * r),
    )
}

/// `C = (int_0^R r^2 (f^2 + |g|^2) dr)^{-1/2}`; the spinor harmonics are
/// orthonormal on the sphere.
pub fn quadrature_norm(kappa: i32, esign: i8, p: f64, mass: f64, radius: f64, gl: &GaussLegendre) -> f64 {
    let n = gl.integrate(0.0, radius, |r| {
        let (f, g) = radial(kappa, esign, p, mass, r);
        r * r * (f * f + g * g)
    });
    1.0 / n.sqrt()
}

/// Oracle momenta `p` for the mode family; for the spectral condition the
/// sign of `m_j` decides which spinor pair must vanish at `r = R`.
pub fn oracle_momenta(
    bc: BoundaryKind,
    kappa: i32,
    esign: i8,
    m_positive: bool,
    mass: f64,
    radius: f64,
    count: usize,
) -> Vec<f64> {
    let j = (kappa.unsigned_abs() as f64) - 0.5;
    let mut hi = (count as f64 + j + 2.0) * PI;
    loop {
        let roots = match bc {
            BoundaryKind::Spectral => {
                // m_j > 0 pins the lower pair, m_j < 0 the upper pair.
                let order = if m_positive {
                    lower_order(kappa)
                } else {
                    upper_order(kappa)
                };
                scan_roots(|x| sph_j(order, x), SCAN_STEP, hi, SCAN_STEP)
            }
            BoundaryKind::Mit(v) => {
                let vs = f64::from(v.as_i32());
                scan_roots(|x| mit_condition(kappa, esign, mass, radius, vs, x), 1e-6, hi, SCAN_STEP)
            }
        };
        if roots.len() >= count {
            return roots[..count].iter().map(|x| x / radius).collect();
        }
        hi *= 1.5;
    }
}

fn binomial(n: u32, k: u32) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * f64::from(n - i) / f64::from(i + 1))
}

/// `|Y_lm(theta)|^2` from the explicit Legendre polynomial, for small `l`.
pub fn ylm_sq(l: u32, m: i32, theta: f64) -> f64 {
    let am = m.unsigned_abs();
    if am > l {
        return 0.0;
    }
    // P_l(x) = 2^-l sum_k (-1)^k C(l,k) C(2l-2k,l) x^(l-2k)
    let mut coeff = vec![0.0; l as usize + 1];
    for k in 0..=l / 2 {
        let c = binomial(l, k) * binomial(2 * l - 2 * k, l) / 2f64.powi(l as i32);
        coeff[(l - 2 * k) as usize] = if k % 2 == 0 { c } else { -c };
    }
    for _ in 0..am {
        coeff = (1..coeff.len()).map(|p| p as f64 * coeff[p]).collect();
        if coeff.is_empty() {
            return 0.0;
        }
    }
    let x = theta.cos();
    let deriv: f64 = coeff.iter().rev().fold(0.0, |acc, c| acc * x + c);
    let plm = (1.0 - x * x).powf(f64::from(am) / 2.0) * deriv;
    let ratio: f64 = ((l - am + 1)..=(l + am)).map(f64::from).product::<f64>();
    f64::from(2 * l + 1) / (4.0 * PI) / ratio * plm * plm
}

/// `(chi+^dagger chi+, chi-^dagger chi-)` from Clebsch-Gordan sums.
pub fn spinor_densities(two_j: u32, two_mj: i32, theta: f64) -> (f64, f64) {
    let j = f64::from(two_j) / 2.0;
    let m = f64::from(two_mj) / 2.0;
    let lo = (two_j - 1) / 2;
    let hi = two_j.div_ceil(2);
    let (md, mu) = ((two_mj - 1) / 2, (two_mj + 1) / 2);
    let plus = (j + m) / (2.0 * j) * ylm_sq(lo, md, theta) + (j - m) / (2.0 * j) * ylm_sq(lo, mu, theta);
    let minus = (j - m + 1.0) / (2.0 * j + 2.0) * ylm_sq(hi, md, theta)
        + (j + m + 1.0) / (2.0 * j + 2.0) * ylm_sq(hi, mu, theta);
    (plus, minus)
}

/// Unreduced `-sum_k |C_k|^2 w'(E_tilde) psi-bar psi` over every
/// `(j, m_j, kappa, i, sgn E)` with `j <= j_max`, `i <= i_max`.
pub fn brute_force_condensate(
    bc: BoundaryKind,
    params: &PhysicalParams,
    r: f64,
    theta: f64,
    two_j_max: u32,
    i_max: usize,
) -> f64 {
    let gl = GaussLegendre::new(200);
    let PhysicalParams {
        mass,
        radius,
        omega,
        beta,
        mu,
    } = *params;
    let mut cache: HashMap<(i32, i8, bool), Vec<(f64, f64)>> = HashMap::new();
    let mut terms = Vec::new();
    for two_j in (1..=two_j_max).step_by(2) {
        let kk = two_j.div_ceil(2) as i32;
        for two_mj in (-(two_j as i32)..=two_j as i32).step_by(2) {
            let m = f64::from(two_mj) / 2.0;
            let (dp, dm) = spinor_densities(two_j, two_mj, theta);
            for kappa in [-kk, kk] {
                for esign in [-1i8, 1] {
                    if esign < 0 {
                        // theta(E) removes antiparticle modes from w'.
                        continue;
                    }
                    let levels = cache.entry((kappa, esign, two_mj > 0)).or_insert_with(|| {
                        oracle_momenta(bc, kappa, esign, two_mj > 0, mass, radius, i_max)
                            .into_iter()
                            .map(|p| (p, quadrature_norm(kappa, esign, p, mass, radius, &gl)))
                            .collect()
                    });
                    for &(p, c) in levels.iter() {
                        let e = energy(esign, p, mass);
                        let et = e - omega * m;
                        let w = -(1.0 / (1.0 + (beta * (et - mu)).exp())
                            + 1.0 / (1.0 + (beta * (et + mu)).exp()));
                        let (f, g) = radial(kappa, esign, p, mass, r);
                        let (du, dl) = if kappa > 0 { (dp, dm) } else { (dm, dp) };
                        let ubar_u = f * f * du - g * g * dl;
                        terms.push(c * c * w * ubar_u);
                    }
                }
            }
        }
    }
    terms.sort_by(|a, b| b.abs().total_cmp(&a.abs()));
    -terms.iter().rev().sum::<f64>()
}
