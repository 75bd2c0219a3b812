//! Special functions: spherical Bessel functions of the first kind, their
//! positive zeros, and normalized associated Legendre functions.

mod bessel;
mod legendre;
pub mod root;
mod zeros;

pub use bessel::{
    spherical_bessel_j, spherical_bessel_j_prime, sph_j, sph_j_pair, sph_j_prime,
};
pub use legendre::{assoc_legendre_density, normalized_legendre, HarmonicDensities};
pub use zeros::{spherical_bessel_zero, BesselZeroTable, BesselZeros};

/// Largest Bessel order accepted by the checked entry points.
pub const DEFAULT_MAX_ORDER: u32 = 200;
/// Largest zero index accepted by the checked entry points.
pub const DEFAULT_MAX_ZERO_INDEX: u32 = 500;

/// Parameter bounds for the checked special-function entry points.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_order: u32,
    pub max_zero_index: u32,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            max_order: DEFAULT_MAX_ORDER,
            max_zero_index: DEFAULT_MAX_ZERO_INDEX,
        }
    }
}

impl Limits {
    pub(crate) fn check_order(&self, n: u32) -> crate::Result<()> {
        if n > self.max_order {
            return Err(crate::Error::UnsupportedOrder {
                order: n,
                max: self.max_order,
            });
        }
        Ok(())
    }
}
