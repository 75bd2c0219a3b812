use alloc::vec::Vec;

use super::mit::mit_quantization;
use super::spectral::zero_order;
use super::{BoundaryKind, Spectrum};
use crate::modes::QuantumNumbers;
use crate::specfun::sph_j;

/// Acceptance thresholds for [`boundary_residuals`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ResidualTolerances {
    /// Residual of the quantization condition at `pR`.
    pub quantization: f64,
    /// Spectral: pinned spinor components at `r = R`.
    pub spectral_components: f64,
    /// MIT: components of `-i gamma^r psi - varsigma psi` at `r = R`.
    pub mit_relation: f64,
    /// MIT: `psi-bar psi` of each normalized mode at `r = R`.
    pub mit_density: f64,
}

impl Default for ResidualTolerances {
    fn default() -> Self {
        Self {
            quantization: 1e-10,
            spectral_components: 1e-10,
            mit_relation: 1e-9,
            mit_density: 1e-9,
        }
    }
}

/// Worst boundary residuals over a spectrum and a set of polar angles.
#[derive(Debug, Clone, PartialEq)]
pub struct ResidualReport {
    pub boundary: BoundaryKind,
    pub tolerances: ResidualTolerances,
    pub modes_checked: usize,
    pub max_quantization: f64,
    /// Zero for MIT spectra.
    pub max_spectral_components: f64,
    /// Zero for spectral spectra.
    pub max_mit_relation: f64,
    /// Zero for spectral spectra.
    pub max_mit_density: f64,
    /// Modes exceeding any tolerance, with the name of the failed check.
    pub failures: Vec<(QuantumNumbers, &'static str, f64)>,
}

impl ResidualReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Azimuths sampled for the componentwise checks; densities are
/// `phi`-independent but spinor components are not.
const PHIS: [f64; 2] = [0.0, 2.1];

/// Evaluates every boundary residual of every mode of `spectrum` at
/// `r = R` and each `theta` in `thetas`.
pub fn boundary_residuals(
    spectrum: &Spectrum,
    thetas: &[f64],
    tolerances: ResidualTolerances,
) -> ResidualReport {
    let bc = spectrum.boundary();
    let params = spectrum.params();
    let radius = params.radius;
    let mut rep = ResidualReport {
        boundary: bc,
        tolerances,
        modes_checked: 0,
        max_quantization: 0.0,
        max_spectral_components: 0.0,
        max_mit_relation: 0.0,
        max_mit_density: 0.0,
        failures: Vec::new(),
    };
    let record = |rep: &mut ResidualReport, qn, name, value: f64, tol: f64| {
        if !(value <= tol) {
            rep.failures.push((qn, name, value));
        }
    };
    for mode in spectrum.modes() {
        rep.modes_checked += 1;
        let qn = mode.qn;
        let x = mode.pr(radius);
        let mf = mode.mode_function(params.mass);
        let q = match bc {
            BoundaryKind::Spectral => {
                let sign_mk = if (qn.two_mj() > 0) == (qn.kappa() > 0) { 1 } else { -1 };
                libm::fabs(sph_j(zero_order(qn.two_j(), sign_mk), x))
            }
            BoundaryKind::Mit(vs) => libm::fabs(mit_quantization(
                qn.kappa(),
                qn.esign(),
                params.mass,
                radius,
                vs,
                x,
            )),
        };
        rep.max_quantization = rep.max_quantization.max(q);
        record(&mut rep, qn, "quantization", q, tolerances.quantization);

        for &theta in thetas {
            match bc {
                BoundaryKind::Spectral => {
                    let v = PHIS
                        .iter()
                        .map(|&phi| mf.spectral_residual(radius, theta, phi))
                        .fold(0.0, f64::max);
                    rep.max_spectral_components = rep.max_spectral_components.max(v);
                    record(&mut rep, qn, "spectral components", v, tolerances.spectral_components);
                }
                BoundaryKind::Mit(vs) => {
                    let v = PHIS
                        .iter()
                        .map(|&phi| mf.mit_residual(radius, theta, phi, vs.value()))
                        .fold(0.0, f64::max);
                    rep.max_mit_relation = rep.max_mit_relation.max(v);
                    record(&mut rep, qn, "MIT relation", v, tolerances.mit_relation);
                    let d = libm::fabs(mf.scalar_density(radius, theta));
                    rep.max_mit_density = rep.max_mit_density.max(d);
                    record(&mut rep, qn, "MIT scalar density", d, tolerances.mit_density);
                }
            }
        }
    }
    rep
}
