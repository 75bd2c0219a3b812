//! Mode-level quantities: quantum numbers, corotating energy, angular
//! densities of the spinor harmonics, radial amplitudes and the scalar
//! density `U-bar U = A + B`.

mod angular;
pub(crate) mod qn;
mod radial;
pub mod spinor;

pub use angular::{angular_density, AngularDensity};
pub use qn::{EnergySign, QuantumNumbers};
pub use radial::{
    corotating_energy, density_terms, density_terms_from, radial_pair, RadialPair,
};
pub use spinor::{inner_product, ModeFunction, Spinor};
