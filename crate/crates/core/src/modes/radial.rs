use super::angular::{angular_density, AngularDensity};
use super::qn::QuantumNumbers;
use crate::error::domain;
use crate::specfun::{sph_j, sph_j_pair};
use crate::Result;

/// Energy seen by the corotating observer, `E - Omega m_j`.
#[inline]
pub fn corotating_energy(energy: f64, m_j: f64, omega: f64) -> f64 {
    energy - omega * m_j
}

/// Radial amplitudes of an unnormalized mode.
///
/// The lower amplitude is purely imaginary relative to the upper one;
/// `g_over_i` is the real `b` with `g = i b`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadialPair {
    pub f: f64,
    pub g_over_i: f64,
}

/// `f = sqrt((E+M)/2E) j_{l_kappa}(pr)`,
/// `g/i = sgn(E) sgn(kappa) sqrt((E-M)/2E) j_{lbar_kappa}(pr)`.
///
/// Both ratios `(E +- M) / 2E` are non-negative whenever `|E| >= M`, for
/// either sign of `E`.
pub fn radial_pair(k: &QuantumNumbers, p: f64, mass: f64, r: f64) -> Result<RadialPair> {
    if !(p > 0.0) || !p.is_finite() {
        return Err(domain("p", p, "momentum must be positive"));
    }
    if r < 0.0 {
        return Err(domain("r", r, "radius must be non-negative"));
    }
    let e = k.energy(p, mass);
    let x = p * r;
    let up = libm::sqrt(((e + mass) / (2.0 * e)).max(0.0));
    let dn = libm::sqrt(((e - mass) / (2.0 * e)).max(0.0));
    Ok(RadialPair {
        f: up * sph_j(k.upper_order(), x),
        g_over_i: k.esign().as_f64() * k.kappa_sign() * dn * sph_j(k.lower_order(), x),
    })
}

/// Scalar density `U-bar U = A + B` of an unnormalized mode, split into the
/// mass-independent part `A` and the part `B` proportional to `M`.
pub fn density_terms(
    k: &QuantumNumbers,
    p: f64,
    mass: f64,
    r: f64,
    theta: f64,
) -> Result<(f64, f64)> {
    if !(p > 0.0) {
        return Err(domain("p", p, "momentum must be positive"));
    }
    let ang = angular_density(k.two_j(), k.two_mj(), theta)?;
    let (jl, jh) = sph_j_pair((k.two_j() - 1) / 2, p * r);
    Ok(density_terms_from(
        k.kappa_sign(),
        k.energy(p, mass),
        mass,
        jl,
        jh,
        &ang,
    ))
}

/// Hot-path form of [`density_terms`] from precomputed Bessel values
/// `jl = j_{j-1/2}(pr)`, `jh = j_{j+1/2}(pr)` and angular densities.
#[inline]
pub fn density_terms_from(
    kappa_sign: f64,
    energy: f64,
    mass: f64,
    jl: f64,
    jh: f64,
    ang: &AngularDensity,
) -> (f64, f64) {
    let lo = jl * jl * ang.d_plus;
    let hi = jh * jh * ang.d_minus;
    let a = kappa_sign * 0.5 * (lo - hi);
    let b = mass / (2.0 * energy) * (lo + hi);
    (a, b)
}
