//! Explicit four-component spinors in the Dirac representation.
//!
//! Production sums never build spinors; this module exists to check the
//! reduced formulas against direct matrix algebra (scalar density,
//! boundary relations, norms).

use core::f64::consts::PI;

use num_complex::Complex64;

use super::qn::QuantumNumbers;
use super::radial::radial_pair;
use crate::quadrature::GaussLegendre;
use crate::specfun::normalized_legendre;
use crate::sum::NeumaierSum;

pub type Spinor = [Complex64; 4];

const I: Complex64 = Complex64::new(0.0, 1.0);

/// `Y_lm(theta, phi)` with the Condon-Shortley phase; zero for `|m| > l`.
pub fn spherical_harmonic(l: u32, m: i32, theta: f64, phi: f64) -> Complex64 {
    let am = m.unsigned_abs();
    if am > l {
        return Complex64::new(0.0, 0.0);
    }
    let mut p = normalized_legendre(l, am, theta);
    if m < 0 && am % 2 == 1 {
        p = -p;
    }
    Complex64::from_polar(1.0, f64::from(m) * phi) * p
}

/// `chi+_{j m_j}`, built on `l = j - 1/2`.
pub fn chi_plus(two_j: u32, two_mj: i32, theta: f64, phi: f64) -> [Complex64; 2] {
    let l = (two_j - 1) / 2;
    let (j2, m2) = (f64::from(two_j), f64::from(two_mj));
    [
        spherical_harmonic(l, (two_mj - 1) / 2, theta, phi) * libm::sqrt((j2 + m2) / (2.0 * j2)),
        spherical_harmonic(l, (two_mj + 1) / 2, theta, phi) * libm::sqrt((j2 - m2) / (2.0 * j2)),
    ]
}

/// `chi-_{j m_j}`, built on `l = j + 1/2`.
pub fn chi_minus(two_j: u32, two_mj: i32, theta: f64, phi: f64) -> [Complex64; 2] {
    let l = two_j.div_ceil(2);
    let (j2, m2) = (f64::from(two_j), f64::from(two_mj));
    [
        spherical_harmonic(l, (two_mj - 1) / 2, theta, phi)
            * libm::sqrt((j2 - m2 + 2.0) / (2.0 * (j2 + 2.0))),
        -spherical_harmonic(l, (two_mj + 1) / 2, theta, phi)
            * libm::sqrt((j2 + m2 + 2.0) / (2.0 * (j2 + 2.0))),
    ]
}

/// `psi-bar psi = |psi_1|^2 + |psi_2|^2 - |psi_3|^2 - |psi_4|^2`.
pub fn scalar_density(s: &Spinor) -> f64 {
    s[0].norm_sqr() + s[1].norm_sqr() - s[2].norm_sqr() - s[3].norm_sqr()
}

/// `sigma . r-hat` acting on a two-spinor.
fn sigma_r(v: [Complex64; 2], theta: f64, phi: f64) -> [Complex64; 2] {
    let (s, c) = (libm::sin(theta), libm::cos(theta));
    let e_minus = Complex64::from_polar(s, -phi);
    let e_plus = Complex64::from_polar(s, phi);
    [v[0] * c + v[1] * e_minus, v[0] * e_plus - v[1] * c]
}

/// `-i gamma^r psi` with `gamma^r = [[0, sigma_r], [-sigma_r, 0]]`.
pub fn minus_i_gamma_r(s: &Spinor, theta: f64, phi: f64) -> Spinor {
    let up = sigma_r([s[2], s[3]], theta, phi);
    let dn = sigma_r([s[0], s[1]], theta, phi);
    [-I * up[0], -I * up[1], I * dn[0], I * dn[1]]
}

/// A single stationary mode `C u_k(r, theta, phi)` with its time phase dropped.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModeFunction {
    pub qn: QuantumNumbers,
    pub p: f64,
    pub mass: f64,
    pub norm: f64,
}

impl ModeFunction {
    pub fn energy(&self) -> f64 {
        self.qn.energy(self.p, self.mass)
    }

    pub fn spinor(&self, r: f64, theta: f64, phi: f64) -> Spinor {
        let rp = radial_pair(&self.qn, self.p, self.mass, r).expect("momentum is positive");
        let (two_j, two_mj) = (self.qn.two_j(), self.qn.two_mj());
        let (upper, lower) = if self.qn.kappa() > 0 {
            (
                chi_plus(two_j, two_mj, theta, phi),
                chi_minus(two_j, two_mj, theta, phi),
            )
        } else {
            (
                chi_minus(two_j, two_mj, theta, phi),
                chi_plus(two_j, two_mj, theta, phi),
            )
        };
        let f = rp.f * self.norm;
        let g = I * (rp.g_over_i * self.norm);
        [upper[0] * f, upper[1] * f, lower[0] * g, lower[1] * g]
    }

    /// `psi-bar psi` of the (normalized) mode.
    pub fn scalar_density(&self, r: f64, theta: f64) -> f64 {
        scalar_density(&self.spinor(r, theta, 0.0))
    }

    /// Largest component of `-i gamma^r psi - varsigma psi`.
    pub fn mit_residual(&self, r: f64, theta: f64, phi: f64, varsigma: f64) -> f64 {
        let s = self.spinor(r, theta, phi);
        let t = minus_i_gamma_r(&s, theta, phi);
        (0..4)
            .map(|a| (t[a] - s[a] * varsigma).norm())
            .fold(0.0, f64::max)
    }

    /// Largest of the two components the spectral condition pins to zero:
    /// the lower pair for `m_j > 0`, the upper pair for `m_j < 0`.
    pub fn spectral_residual(&self, r: f64, theta: f64, phi: f64) -> f64 {
        let s = self.spinor(r, theta, phi);
        let pair = if self.qn.two_mj() > 0 { [2, 3] } else { [0, 1] };
        pair.iter().map(|&a| s[a].norm()).fold(0.0, f64::max)
    }
}

/// `<a, b> = int_0^R r^2 dr int dOmega a^dagger b` by Gauss-Legendre in `r`
/// and `cos(theta)`; the azimuthal integral is done exactly.
pub fn inner_product(
    a: &ModeFunction,
    b: &ModeFunction,
    radius: f64,
    radial: &GaussLegendre,
    angular: &GaussLegendre,
) -> Complex64 {
    if a.qn.two_mj() != b.qn.two_mj() {
        return Complex64::new(0.0, 0.0);
    }
    let mut re = NeumaierSum::new();
    let mut im = NeumaierSum::new();
    for (r, wr) in radial.mapped(0.0, radius) {
        for (&u, &wu) in angular.nodes().iter().zip(angular.weights()) {
            let theta = libm::acos(u);
            let sa = a.spinor(r, theta, 0.0);
            let sb = b.spinor(r, theta, 0.0);
            let mut dot = Complex64::new(0.0, 0.0);
            for k in 0..4 {
                dot += sa[k].conj() * sb[k];
            }
            let w = 2.0 * PI * wr * wu * r * r;
            re.add(w * dot.re);
            im.add(w * dot.im);
        }
    }
    Complex64::new(re.value(), im.value())
}
