use alloc::vec::Vec;
use core::cmp::Ordering;

use super::mit::{mit_momenta_with, mit_norm};
use super::spectral::{spectral_norm_at, zero_order};
use super::BoundaryKind;
use crate::modes::spinor::ModeFunction;
use crate::modes::{corotating_energy, EnergySign, QuantumNumbers};
use crate::params::PhysicalParams;
use crate::specfun::{BesselZeros, DEFAULT_MAX_ORDER};
use crate::{Error, Result};

/// Which `m_j` values share a radial level.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MomentumClass {
    /// Spectral modes with `m_j kappa < 0`.
    NegativeMk,
    /// Spectral modes with `m_j kappa > 0`.
    PositiveMk,
    /// MIT modes; the momentum does not depend on `m_j`.
    AllM,
}

impl MomentumClass {
    /// Class of `(two_mj, kappa)` under the given boundary condition.
    pub fn of(bc: BoundaryKind, two_mj: i32, kappa: i32) -> Self {
        match bc {
            BoundaryKind::Mit(_) => Self::AllM,
            BoundaryKind::Spectral if (two_mj > 0) == (kappa > 0) => Self::PositiveMk,
            BoundaryKind::Spectral => Self::NegativeMk,
        }
    }
}

/// Solved radial level: `x = pR` and the normalization constant.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadialLevel {
    pub x: f64,
    pub norm: f64,
}

/// Label of a family of radial levels sharing `(j, kappa, sgn E)` and a
/// momentum class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LevelKey {
    pub two_j: u32,
    pub kappa: i32,
    pub esign: EnergySign,
    pub class: MomentumClass,
}

/// The first `i_max` levels of one [`LevelKey`], in increasing `pR`.
#[derive(Debug, Clone, PartialEq)]
pub struct LevelGroup {
    pub key: LevelKey,
    pub levels: Vec<RadialLevel>,
}

/// All level keys with `j <= j_max`, in canonical order.
pub fn level_groups(bc: BoundaryKind, two_j_max: u32) -> Vec<LevelKey> {
    let classes: &[MomentumClass] = match bc {
        BoundaryKind::Spectral => &[MomentumClass::NegativeMk, MomentumClass::PositiveMk],
        BoundaryKind::Mit(_) => &[MomentumClass::AllM],
    };
    let mut keys = Vec::new();
    for two_j in (1..=two_j_max).step_by(2) {
        let k = two_j.div_ceil(2) as i32;
        for kappa in [-k, k] {
            for esign in [EnergySign::Negative, EnergySign::Positive] {
                for &class in classes {
                    keys.push(LevelKey {
                        two_j,
                        kappa,
                        esign,
                        class,
                    });
                }
            }
        }
    }
    keys
}

/// Bessel zero table large enough for every level with `j <= j_max` and
/// `i <= i_max`.
pub fn zero_table_for(two_j_max: u32, i_max: u32) -> Result<BesselZeros> {
    BesselZeros::build(two_j_max.div_ceil(2), i_max + 2)
}

/// Solves one level family; `zeros` must come from [`zero_table_for`] with at
/// least the same `j` and `i` bounds.
pub fn solve_level_group(
    bc: BoundaryKind,
    params: &PhysicalParams,
    zeros: &BesselZeros,
    key: LevelKey,
    i_max: u32,
) -> Result<LevelGroup> {
    let radius = params.radius;
    if (key.class == MomentumClass::AllM) != matches!(bc, BoundaryKind::Mit(_)) {
        return Err(Error::InvalidQuantumNumbers(
            "momentum class does not match the boundary condition",
        ));
    }
    let levels = match (bc, key.class) {
        (BoundaryKind::Spectral, class) => {
            let sign_mk = if class == MomentumClass::PositiveMk { 1 } else { -1 };
            let order = zero_order(key.two_j, sign_mk);
            (1..=i_max)
                .map(|i| {
                    let x = zeros.zero(order, i).ok_or(Error::UnsupportedOrder {
                        order,
                        max: zeros.max_order(),
                    })?;
                    Ok(RadialLevel {
                        x,
                        norm: spectral_norm_at(key.two_j, sign_mk, x, radius),
                    })
                })
                .collect::<Result<Vec<_>>>()?
        }
        (BoundaryKind::Mit(vs), _) => {
            let momenta = mit_momenta_with(
                zeros,
                key.two_j,
                key.kappa,
                key.esign,
                radius,
                params.mass,
                vs,
                i_max,
            )?;
            momenta
                .into_iter()
                .map(|p| {
                    let norm =
                        mit_norm(key.two_j, key.kappa, key.esign, radius, params.mass, vs, p)?;
                    Ok(RadialLevel { x: p * radius, norm })
                })
                .collect::<Result<Vec<_>>>()?
        }
    };
    Ok(LevelGroup { key, levels })
}

/// A fully specified single-particle mode.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuantizedMode {
    pub qn: QuantumNumbers,
    /// Momentum `p > 0`.
    pub p: f64,
    /// Minkowski energy `E = sgn(E) sqrt(p^2 + M^2)`.
    pub energy: f64,
    /// Corotating energy `E - Omega m_j`.
    pub corotating_energy: f64,
    /// Normalization constant `C > 0`.
    pub norm: f64,
}

impl QuantizedMode {
    pub fn pr(&self, radius: f64) -> f64 {
        self.p * radius
    }

    /// The normalized mode function for spinor-level checks.
    pub fn mode_function(&self, mass: f64) -> ModeFunction {
        ModeFunction {
            qn: self.qn,
            p: self.p,
            mass,
            norm: self.norm,
        }
    }
}

/// Solved spectrum stored per radial level family.
///
/// Individual modes are fanned out over `m_j` on demand.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    bc: BoundaryKind,
    params: PhysicalParams,
    two_j_max: u32,
    i_max: u32,
    groups: Vec<LevelGroup>,
}

impl Spectrum {
    /// Assembles a spectrum from independently solved groups, in any order.
    pub fn from_groups(
        bc: BoundaryKind,
        params: PhysicalParams,
        two_j_max: u32,
        i_max: u32,
        mut groups: Vec<LevelGroup>,
    ) -> Result<Self> {
        groups.sort_by_key(|a| a.key);
        let expected = level_groups(bc, two_j_max);
        let complete = groups.len() == expected.len()
            && groups
                .iter()
                .zip(&expected)
                .all(|(g, k)| g.key == *k && g.levels.len() == i_max as usize);
        if !complete {
            return Err(Error::InvalidQuantumNumbers(
                "level groups do not cover the requested truncation",
            ));
        }
        Ok(Self {
            bc,
            params,
            two_j_max,
            i_max,
            groups,
        })
    }

    pub fn boundary(&self) -> BoundaryKind {
        self.bc
    }

    pub fn params(&self) -> &PhysicalParams {
        &self.params
    }

    pub fn two_j_max(&self) -> u32 {
        self.two_j_max
    }

    pub fn i_max(&self) -> u32 {
        self.i_max
    }

    pub fn groups(&self) -> &[LevelGroup] {
        &self.groups
    }

    pub fn group(&self, key: &LevelKey) -> Option<&LevelGroup> {
        self.groups
            .binary_search_by(|g| g.key.cmp(key))
            .ok()
            .map(|idx| &self.groups[idx])
    }

    /// Radial level of the mode `(sgn E, j, m_j, kappa, i)`.
    pub fn level(&self, qn: &QuantumNumbers) -> Option<&RadialLevel> {
        let key = LevelKey {
            two_j: qn.two_j(),
            kappa: qn.kappa(),
            esign: qn.esign(),
            class: MomentumClass::of(self.bc, qn.two_mj(), qn.kappa()),
        };
        let i = qn.radial_index() as usize;
        self.group(&key)?.levels.get(i.checked_sub(1)?)
    }

    fn make_mode(&self, qn: QuantumNumbers, level: &RadialLevel) -> QuantizedMode {
        let p = level.x / self.params.radius;
        let energy = qn.energy(p, self.params.mass);
        QuantizedMode {
            qn,
            p,
            energy,
            corotating_energy: corotating_energy(energy, qn.m_j(), self.params.omega),
            norm: level.norm,
        }
    }

    /// Number of modes, `sum_j 2 (2j+1) * 2 * i_max`.
    pub fn len(&self) -> usize {
        (1..=self.two_j_max)
            .step_by(2)
            .map(|two_j| 4 * (two_j as usize + 1) * self.i_max as usize)
            .sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Every mode in canonical order `(j, kappa, i, m_j, sgn E)`.
    pub fn modes(&self) -> Vec<QuantizedMode> {
        let mut out = Vec::with_capacity(self.len());
        for two_j in (1..=self.two_j_max).step_by(2) {
            let k = two_j.div_ceil(2) as i32;
            for kappa in [-k, k] {
                for i in 1..=self.i_max {
                    for two_mj in (-(two_j as i32)..=two_j as i32).step_by(2) {
                        for esign in [EnergySign::Negative, EnergySign::Positive] {
                            let qn = QuantumNumbers::new(esign, two_j, two_mj, kappa, i)
                                .expect("enumerated labels are valid");
                            let level = self.level(&qn).expect("spectrum is complete");
                            out.push(self.make_mode(qn, level));
                        }
                    }
                }
            }
        }
        out
    }
}

/// Solves every mode with `j <= j_max` and `i <= i_max` serially.
pub fn enumerate_spectrum(
    bc: BoundaryKind,
    params: &PhysicalParams,
    two_j_max: u32,
    i_max: u32,
) -> Result<Spectrum> {
    check_truncation(params, two_j_max, i_max)?;
    let zeros = zero_table_for(two_j_max, i_max)?;
    let groups = level_groups(bc, two_j_max)
        .into_iter()
        .map(|key| solve_level_group(bc, params, &zeros, key, i_max))
        .collect::<Result<Vec<_>>>()?;
    Spectrum::from_groups(bc, *params, two_j_max, i_max, groups)
}

/// Shared argument checks for spectrum enumeration.
pub fn check_truncation(params: &PhysicalParams, two_j_max: u32, i_max: u32) -> Result<()> {
    params.validate()?;
    if two_j_max.is_multiple_of(2) || i_max == 0 {
        return Err(Error::Truncation { two_j_max, i_max });
    }
    let order = two_j_max.div_ceil(2);
    if order > DEFAULT_MAX_ORDER {
        return Err(Error::UnsupportedOrder {
            order,
            max: DEFAULT_MAX_ORDER,
        });
    }
    Ok(())
}

/// A mode with `E * E_tilde <= 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Violation {
    pub qn: QuantumNumbers,
    pub energy: f64,
    pub corotating_energy: f64,
}

/// Outcome of [`verify_vacuum_equivalence`].
#[derive(Debug, Clone, PartialEq)]
pub struct VacuumReport {
    pub omega_r: f64,
    pub checked: usize,
    pub violations: Vec<Violation>,
    /// `min |E_tilde|` over the checked modes (infinite when none).
    pub min_abs_corotating: f64,
}

impl VacuumReport {
    pub fn is_equivalent(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Recomputes `E_tilde = E - Omega m_j` for each mode at the given `Omega`
/// and lists every mode with `E * E_tilde <= 0`.
///
/// No guard on `Omega R` is applied, so superluminal rotation can be
/// examined deliberately.
pub fn verify_vacuum_equivalence(
    modes: &[QuantizedMode],
    omega: f64,
    radius: f64,
) -> VacuumReport {
    let mut violations = Vec::new();
    let mut min_abs = f64::INFINITY;
    for m in modes {
        let et = corotating_energy(m.energy, m.qn.m_j(), omega);
        min_abs = min_abs.min(libm::fabs(et));
        if m.energy * et <= 0.0 {
            violations.push(Violation {
                qn: m.qn,
                energy: m.energy,
                corotating_energy: et,
            });
        }
    }
    VacuumReport {
        omega_r: omega * radius,
        checked: modes.len(),
        violations,
        min_abs_corotating: min_abs,
    }
}

/// Canonical comparison of modes `(j, kappa, i, m_j, sgn E)`.
pub fn canonical_order(a: &QuantizedMode, b: &QuantizedMode) -> Ordering {
    let key = |m: &QuantizedMode| {
        (
            m.qn.two_j(),
            m.qn.kappa(),
            m.qn.radial_index(),
            m.qn.two_mj(),
            m.qn.esign(),
        )
    };
    key(a).cmp(&key(b))
}
