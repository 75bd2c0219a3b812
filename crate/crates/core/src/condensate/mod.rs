//! Thermal expectation value of the scalar condensate `<:psi-bar psi:>`.
//!
//! The condensate is the truncated mode sum
//! `-sum_k |C_k|^2 w'(E_tilde_k) (A_k + B_k)`; only positive-energy modes
//! carry weight. Pairing `m_j` with `-m_j` (and, for the spectral
//! condition, `kappa` with `-kappa`) reduces the sum to `m_j > 0`:
//!
//! * spectral: `[w(E_tilde) - w(E_bar)] A + [w(E_tilde) + w(E_bar)] B`
//! * MIT: `[w(E_tilde) + w(E_bar)] (A + B)`
//!
//! with `E_bar = E + Omega m_j`.

mod thermal;

use alloc::vec::Vec;
use core::f64::consts::PI;

pub use crate::params::PhysicalParams;
pub use thermal::{fermi, thermal_weight, thermal_weight_subtracted};

use crate::boundary::{
    check_truncation, level_groups, solve_level_group, zero_table_for, BoundaryKind, LevelGroup,
    LevelKey, MomentumClass,
};
use crate::error::domain;
use crate::modes::{angular_density, corotating_energy, density_terms_from, AngularDensity, EnergySign};
use crate::specfun::{sph_j_pair, HarmonicDensities};
use crate::sum::NeumaierSum;
use crate::{Error, Result};

/// Mode-sum cutoffs: `j <= j_max`, `i <= i_max`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Truncation {
    pub two_j_max: u32,
    pub i_max: u32,
}

impl Default for Truncation {
    fn default() -> Self {
        Self {
            two_j_max: 41,
            i_max: 60,
        }
    }
}

impl Truncation {
    pub fn new(two_j_max: u32, i_max: u32) -> Result<Self> {
        let t = Self { two_j_max, i_max };
        t.validate()?;
        Ok(t)
    }

    /// Requires an odd `two_j_max >= 3` and `i_max >= 1`.
    pub fn validate(&self) -> Result<()> {
        if self.two_j_max < 3 || self.two_j_max.is_multiple_of(2) || self.i_max == 0 {
            return Err(Error::Truncation {
                two_j_max: self.two_j_max,
                i_max: self.i_max,
            });
        }
        Ok(())
    }
}

/// Which thermal weight multiplies each mode.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Subtraction {
    /// `w'`, the vacuum-subtracted `<:psi-bar psi:>`.
    #[default]
    Vacuum,
    /// `w`, the raw truncated sum; diverges as the cutoff grows.
    Raw,
}

/// One positive-energy radial level prepared for summation.
#[derive(Debug, Clone, Copy, PartialEq)]
struct Level {
    kappa_sign: f64,
    class: MomentumClass,
    p: f64,
    energy: f64,
    norm_sq: f64,
}

/// Precomputed positive-energy levels for repeated condensate evaluation.
#[derive(Debug, Clone, PartialEq)]
pub struct CondensateEvaluator {
    bc: BoundaryKind,
    params: PhysicalParams,
    truncation: Truncation,
    subtraction: Subtraction,
    /// `shells[n]` holds the levels with `2j = 2n + 1`.
    shells: Vec<Vec<Level>>,
}

/// Condensate samples on a tensor grid, stored as `values[theta][r]`.
#[derive(Debug, Clone, PartialEq)]
pub struct CondensateGrid {
    pub boundary: BoundaryKind,
    pub params: PhysicalParams,
    pub truncation: Truncation,
    pub subtraction: Subtraction,
    pub r_values: Vec<f64>,
    pub theta_values: Vec<f64>,
    pub values: Vec<Vec<f64>>,
    /// Largest magnitude of the `j = j_max` shell over the grid.
    pub tail_estimate: f64,
}

impl CondensateGrid {
    pub fn value(&self, r_index: usize, theta_index: usize) -> f64 {
        self.values[theta_index][r_index]
    }
}

/// One evaluated point with its last-shell contribution.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PointValue {
    pub value: f64,
    pub tail: f64,
}

impl CondensateEvaluator {
    /// Level families needed by the evaluator (positive energy only).
    pub fn required_levels(bc: BoundaryKind, truncation: Truncation) -> Vec<LevelKey> {
        level_groups(bc, truncation.two_j_max)
            .into_iter()
            .filter(|k| k.esign == EnergySign::Positive)
            .collect()
    }

    /// Solves the spectrum serially and prepares the evaluator.
    pub fn new(bc: BoundaryKind, params: &PhysicalParams, truncation: Truncation) -> Result<Self> {
        truncation.validate()?;
        check_truncation(params, truncation.two_j_max, truncation.i_max)?;
        let zeros = zero_table_for(truncation.two_j_max, truncation.i_max)?;
        let groups = Self::required_levels(bc, truncation)
            .into_iter()
            .map(|key| solve_level_group(bc, params, &zeros, key, truncation.i_max))
            .collect::<Result<Vec<_>>>()?;
        Self::from_groups(bc, params, truncation, groups)
    }

    /// Builds the evaluator from level groups solved elsewhere, e.g. in
    /// parallel. Extra groups (negative energy) are ignored.
    pub fn from_groups(
        bc: BoundaryKind,
        params: &PhysicalParams,
        truncation: Truncation,
        groups: Vec<LevelGroup>,
    ) -> Result<Self> {
        truncation.validate()?;
        check_truncation(params, truncation.two_j_max, truncation.i_max)?;
        let required = Self::required_levels(bc, truncation);
        let mut shells: Vec<Vec<Level>> = (0..=truncation.two_j_max / 2).map(|_| Vec::new()).collect();
        for key in &required {
            let g = groups
                .iter()
                .find(|g| g.key == *key)
                .filter(|g| g.levels.len() == truncation.i_max as usize)
                .ok_or(Error::InvalidQuantumNumbers(
                    "level groups do not cover the requested truncation",
                ))?;
            for lvl in &g.levels {
                let p = lvl.x / params.radius;
                shells[(key.two_j / 2) as usize].push(Level {
                    kappa_sign: if key.kappa > 0 { 1.0 } else { -1.0 },
                    class: key.class,
                    p,
                    energy: libm::hypot(p, params.mass),
                    norm_sq: lvl.norm * lvl.norm,
                });
            }
        }
        Ok(Self {
            bc,
            params: *params,
            truncation,
            subtraction: Subtraction::Vacuum,
            shells,
        })
    }

    pub fn with_subtraction(mut self, subtraction: Subtraction) -> Self {
        self.subtraction = subtraction;
        self
    }

    pub fn boundary(&self) -> BoundaryKind {
        self.bc
    }

    pub fn params(&self) -> &PhysicalParams {
        &self.params
    }

    pub fn truncation(&self) -> Truncation {
        self.truncation
    }

    pub fn subtraction(&self) -> Subtraction {
        self.subtraction
    }

    #[inline]
    fn weight(&self, e_tilde: f64) -> f64 {
        let PhysicalParams { beta, mu, .. } = self.params;
        match self.subtraction {
            Subtraction::Vacuum => thermal_weight_subtracted(e_tilde, EnergySign::Positive, beta, mu),
            Subtraction::Raw => thermal_weight(e_tilde, EnergySign::Positive, beta, mu),
        }
    }

    /// Rejects points outside `0 <= r <= R`, `0 <= theta <= pi`.
    pub fn check_point(&self, r: f64, theta: f64) -> Result<()> {
        if !(r >= 0.0 && r <= self.params.radius) {
            return Err(domain("r", r, "need 0 <= r <= R"));
        }
        if !(0.0..=PI).contains(&theta) {
            return Err(domain("theta", theta, "need 0 <= theta <= pi"));
        }
        Ok(())
    }

    /// Harmonic table for one polar angle, reusable across radii.
    pub fn harmonic_table(&self, theta: f64) -> HarmonicDensities {
        HarmonicDensities::new(self.truncation.two_j_max.div_ceil(2), theta)
    }

    /// Per-`j` contributions (with the overall minus sign) of the reduced
    /// sum at `(r, theta)`, using a table from [`Self::harmonic_table`].
    pub fn shell_contributions(&self, table: &HarmonicDensities, r: f64) -> Vec<f64> {
        let omega = self.params.omega;
        let mass = self.params.mass;
        let mut out = Vec::with_capacity(self.shells.len());
        let mut angular = Vec::new();
        for (n, shell) in self.shells.iter().enumerate() {
            let two_j = 2 * n as u32 + 1;
            angular.clear();
            angular.extend(
                (1..=two_j as i32)
                    .step_by(2)
                    .map(|two_mj| AngularDensity::from_table(table, two_j, two_mj)),
            );
            let mut acc = NeumaierSum::new();
            for lvl in shell {
                // m_j > 0 only: spectral levels of the other class belong to
                // m_j < 0 and enter through E_bar.
                let positive_m_class = match self.bc {
                    BoundaryKind::Mit(_) => MomentumClass::AllM,
                    BoundaryKind::Spectral if lvl.kappa_sign > 0.0 => MomentumClass::PositiveMk,
                    BoundaryKind::Spectral => MomentumClass::NegativeMk,
                };
                if lvl.class != positive_m_class {
                    continue;
                }
                let (jl, jh) = sph_j_pair(n as u32, lvl.p * r);
                for (idx, ang) in angular.iter().enumerate() {
                    let m_j = idx as f64 + 0.5;
                    let w_t = self.weight(corotating_energy(lvl.energy, m_j, omega));
                    let w_b = self.weight(lvl.energy + omega * m_j);
                    let (a, b) = density_terms_from(lvl.kappa_sign, lvl.energy, mass, jl, jh, ang);
                    let term = match self.bc {
                        BoundaryKind::Spectral => (w_t - w_b) * a + (w_t + w_b) * b,
                        BoundaryKind::Mit(_) => (w_t + w_b) * (a + b),
                    };
                    acc.add(lvl.norm_sq * term);
                }
            }
            out.push(-acc.value());
        }
        out
    }

    /// Reduced condensate at `(r, theta)` with its `j = j_max` shell.
    pub fn point_detail(&self, r: f64, theta: f64) -> Result<PointValue> {
        self.check_point(r, theta)?;
        let table = self.harmonic_table(theta);
        Ok(Self::fold(&self.shell_contributions(&table, r)))
    }

    /// Reduced condensate at radius `r` for the angle of `table`.
    pub fn point_from_table(&self, table: &HarmonicDensities, r: f64) -> PointValue {
        Self::fold(&self.shell_contributions(table, r))
    }

    fn fold(shells: &[f64]) -> PointValue {
        PointValue {
            value: shells.iter().copied().collect::<NeumaierSum>().value(),
            tail: shells.last().map_or(0.0, |v| libm::fabs(*v)),
        }
    }

    /// Reduced condensate at `(r, theta)`.
    pub fn point(&self, r: f64, theta: f64) -> Result<f64> {
        self.point_detail(r, theta).map(|p| p.value)
    }

    /// The same sum without any symmetry reduction: every `m_j`, both
    /// `kappa`, angular densities evaluated directly. Negative-energy
    /// modes are omitted because `theta(E)` removes them from either weight.
    pub fn point_unreduced(&self, r: f64, theta: f64) -> Result<f64> {
        self.check_point(r, theta)?;
        let omega = self.params.omega;
        let mass = self.params.mass;
        let mut acc = NeumaierSum::new();
        for (n, shell) in self.shells.iter().enumerate() {
            let two_j = 2 * n as u32 + 1;
            for two_mj in (-(two_j as i32)..=two_j as i32).step_by(2) {
                let ang = angular_density(two_j, two_mj, theta)?;
                let m_j = f64::from(two_mj) / 2.0;
                for lvl in shell {
                    let kappa = if lvl.kappa_sign > 0.0 { 1 } else { -1 };
                    if lvl.class != MomentumClass::of(self.bc, two_mj, kappa) {
                        continue;
                    }
                    let (jl, jh) = sph_j_pair(n as u32, lvl.p * r);
                    let w = self.weight(corotating_energy(lvl.energy, m_j, omega));
                    let (a, b) = density_terms_from(lvl.kappa_sign, lvl.energy, mass, jl, jh, &ang);
                    acc.add(lvl.norm_sq * w * (a + b));
                }
            }
        }
        Ok(-acc.value())
    }

    /// `theta`-independent closed form at `Omega = 0`, using the addition
    /// theorem to carry out the `m_j` sums.
    pub fn nonrotating(&self, r: f64) -> Result<f64> {
        if self.params.omega != 0.0 {
            return Err(domain("Omega", self.params.omega, "closed form needs Omega = 0"));
        }
        self.check_point(r, 0.0)?;
        let mass = self.params.mass;
        let mut total = NeumaierSum::new();
        for (n, shell) in self.shells.iter().enumerate() {
            let deg = f64::from(2 * n as u32 + 2);
            let mut acc = NeumaierSum::new();
            for lvl in shell {
                let (jl, jh) = sph_j_pair(n as u32, lvl.p * r);
                let w = self.weight(lvl.energy);
                let b = mass / (2.0 * lvl.energy) * (jl * jl + jh * jh);
                let term = match self.bc {
                    // Pairing (m_j, kappa) with (-m_j, -kappa) cancels A;
                    // each spectral level covers half of the m_j values.
                    BoundaryKind::Spectral => deg / (8.0 * PI) * w * b,
                    BoundaryKind::Mit(_) => {
                        let a = lvl.kappa_sign * 0.5 * (jl * jl - jh * jh);
                        deg / (4.0 * PI) * w * (a + b)
                    }
                };
                acc.add(lvl.norm_sq * term);
            }
            total.add(-acc.value());
        }
        Ok(total.value())
    }

    /// One row (fixed `theta`) of a grid, with the row's largest tail.
    pub fn row(&self, r_values: &[f64], theta: f64) -> Result<(Vec<f64>, f64)> {
        for &r in r_values {
            self.check_point(r, theta)?;
        }
        let table = self.harmonic_table(theta);
        let mut tail = 0.0f64;
        let values = r_values
            .iter()
            .map(|&r| {
                let pv = self.point_from_table(&table, r);
                tail = tail.max(pv.tail);
                pv.value
            })
            .collect();
        Ok((values, tail))
    }

    /// Evaluates the full grid serially.
    pub fn grid(&self, r_values: &[f64], theta_values: &[f64]) -> Result<CondensateGrid> {
        let mut values = Vec::with_capacity(theta_values.len());
        let mut tail = 0.0f64;
        for &theta in theta_values {
            let (row, t) = self.row(r_values, theta)?;
            tail = tail.max(t);
            values.push(row);
        }
        Ok(self.assemble_grid(r_values, theta_values, values, tail))
    }

    /// Packs externally computed rows into a [`CondensateGrid`].
    pub fn assemble_grid(
        &self,
        r_values: &[f64],
        theta_values: &[f64],
        values: Vec<Vec<f64>>,
        tail_estimate: f64,
    ) -> CondensateGrid {
        CondensateGrid {
            boundary: self.bc,
            params: self.params,
            truncation: self.truncation,
            subtraction: self.subtraction,
            r_values: r_values.to_vec(),
            theta_values: theta_values.to_vec(),
            values,
            tail_estimate,
        }
    }
}

/// Vacuum-subtracted condensate at one point.
pub fn condensate_point(
    bc: BoundaryKind,
    params: &PhysicalParams,
    r: f64,
    theta: f64,
    truncation: Truncation,
) -> Result<f64> {
    CondensateEvaluator::new(bc, params, truncation)?.point(r, theta)
}

/// Vacuum-subtracted condensate of the non-rotating sphere; rejects
/// `Omega != 0`.
pub fn condensate_nonrotating(
    bc: BoundaryKind,
    params: &PhysicalParams,
    r: f64,
    truncation: Truncation,
) -> Result<f64> {
    if params.omega != 0.0 {
        return Err(domain("Omega", params.omega, "closed form needs Omega = 0"));
    }
    CondensateEvaluator::new(bc, params, truncation)?.nonrotating(r)
}

/// Vacuum-subtracted condensate on the tensor grid `r_values x theta_values`.
pub fn condensate_grid(
    bc: BoundaryKind,
    params: &PhysicalParams,
    r_values: &[f64],
    theta_values: &[f64],
    truncation: Truncation,
) -> Result<CondensateGrid> {
    CondensateEvaluator::new(bc, params, truncation)?.grid(r_values, theta_values)
}
