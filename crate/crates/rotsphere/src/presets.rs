//! Parameter sets of the published condensate figures.
//!
//! Figure 1 uses the spectral condition and figure 2 the MIT condition
//! (`varsigma = 1` unless a curve says otherwise). Every panel has `R = 1`,
//! `mu = 0`; the curve values below are representative, since the figures
//! only fix the panel-wide parameters.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use rotsphere_core::{BoundaryKind, PhysicalParams, Varsigma};

const OMEGAS: [f64; 5] = [0.0, 0.2, 0.4, 0.6, 0.8];
const BETAS: [f64; 3] = [2.0, 1.0, 0.5];
const MASSES: [f64; 3] = [0.0, 1.0, 2.0];
const THETAS: [(f64, &str); 4] = [
    (PI / 8.0, "pi_8"),
    (PI / 4.0, "pi_4"),
    (3.0 * PI / 8.0, "3pi_8"),
    (PI / 2.0, "pi_2"),
];

/// A whole figure (`fig1`, `fig2`) or one panel (`fig1a` .. `fig2f`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Preset {
    pub figure: u8,
    pub panel: Option<char>,
}

impl fmt::Display for Preset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "fig{}", self.figure)?;
        if let Some(p) = self.panel {
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Preset {
    type Err = ();

    fn from_str(s: &str) -> Result<Self, ()> {
        let rest = s.strip_prefix("fig").ok_or(())?;
        let mut chars = rest.chars();
        let figure = match chars.next() {
            Some('1') => 1,
            Some('2') => 2,
            _ => return Err(()),
        };
        let panel = match chars.next() {
            None => None,
            Some(c @ 'a'..='f') => Some(c),
            Some(_) => return Err(()),
        };
        if chars.next().is_some() {
            return Err(());
        }
        Ok(Self { figure, panel })
    }
}

/// One curve: a parameter set evaluated along `r` at a fixed `theta`.
#[derive(Debug, Clone, PartialEq)]
pub struct Curve {
    /// Panel name, e.g. `fig1a`.
    pub panel: String,
    /// Curve label usable in file names, e.g. `Omega_0.4`.
    pub label: String,
    pub boundary: BoundaryKind,
    pub params: PhysicalParams,
    pub theta: f64,
}

impl Curve {
    pub fn file_stem(&self) -> String {
        format!("{}_{}", self.panel, self.label)
    }
}

fn params(mass: f64, omega: f64, beta: f64) -> PhysicalParams {
    PhysicalParams {
        mass,
        radius: 1.0,
        omega,
        beta,
        mu: 0.0,
    }
}

fn panel_curves(figure: u8, panel: char) -> Vec<Curve> {
    let bc = if figure == 1 {
        BoundaryKind::Spectral
    } else {
        BoundaryKind::Mit(Varsigma::Ordinary)
    };
    let name = format!("fig{figure}{panel}");
    let curve = |label: String, boundary, params, theta| Curve {
        panel: name.clone(),
        label,
        boundary,
        params,
        theta,
    };
    let half_pi = PI / 2.0;
    match panel {
        'a' | 'b' => {
            let beta = if panel == 'a' { 2.0 } else { 0.5 };
            OMEGAS
                .iter()
                .map(|&om| curve(format!("Omega_{om}"), bc, params(1.0, om, beta), half_pi))
                .collect()
        }
        'c' => BETAS
            .iter()
            .map(|&b| curve(format!("beta_{b}"), bc, params(1.0, 0.5, b), half_pi))
            .collect(),
        'd' => {
            let mut out = Vec::new();
            let variants: &[(BoundaryKind, &str)] = if figure == 1 {
                &[(BoundaryKind::Spectral, "")]
            } else {
                &[
                    (BoundaryKind::Mit(Varsigma::Ordinary), "_varsigma_1"),
                    (BoundaryKind::Mit(Varsigma::Chiral), "_varsigma_-1"),
                ]
            };
            for &(b, suffix) in variants {
                for &m in &MASSES {
                    out.push(curve(format!("M_{m}{suffix}"), b, params(m, 0.5, 1.0), half_pi));
                }
            }
            out
        }
        _ => {
            let beta = if panel == 'e' { 2.0 } else { 0.5 };
            THETAS
                .iter()
                .map(|&(th, tag)| curve(format!("theta_{tag}"), bc, params(1.0, 0.8, beta), th))
                .collect()
        }
    }
}

/// Every curve of the preset, in panel order.
pub fn curves(preset: Preset) -> Vec<Curve> {
    match preset.panel {
        Some(p) => panel_curves(preset.figure, p),
        None => ('a'..='f').flat_map(|p| panel_curves(preset.figure, p)).collect(),
    }
}
