//! Quantization inside the sphere under spectral and MIT boundary
//! conditions.

mod integrals;
mod mit;
mod residuals;
mod spectral;
mod spectrum;

use core::fmt;

pub use integrals::{radial_integral_minus, radial_integral_plus};
pub use mit::{mit_momenta, mit_momenta_with, mit_norm, mit_quantization};
pub use residuals::{boundary_residuals, ResidualReport, ResidualTolerances};
pub use spectral::{spectral_momentum, spectral_norm};
pub use spectrum::{
    canonical_order, check_truncation, enumerate_spectrum, level_groups, solve_level_group,
    verify_vacuum_equivalence, zero_table_for, LevelGroup, LevelKey, MomentumClass,
    QuantizedMode, RadialLevel, Spectrum, VacuumReport, Violation,
};

/// Chirality sign of the MIT condition `-i gamma^r psi = varsigma psi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Varsigma {
    /// `varsigma = +1`, the ordinary bag condition.
    Ordinary,
    /// `varsigma = -1`, chiral angle `pi`.
    Chiral,
}

impl Varsigma {
    pub fn value(self) -> f64 {
        match self {
            Self::Ordinary => 1.0,
            Self::Chiral => -1.0,
        }
    }

    pub fn from_sign(s: i32) -> Option<Self> {
        match s {
            1 => Some(Self::Ordinary),
            -1 => Some(Self::Chiral),
            _ => None,
        }
    }

    pub fn as_i32(self) -> i32 {
        match self {
            Self::Ordinary => 1,
            Self::Chiral => -1,
        }
    }
}

/// Boundary condition on the sphere.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoundaryKind {
    Spectral,
    Mit(Varsigma),
}

impl fmt::Display for BoundaryKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Spectral => f.write_str("spectral"),
            Self::Mit(v) => write!(f, "mit(varsigma={})", v.as_i32()),
        }
    }
}
