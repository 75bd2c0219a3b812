//! Free Dirac field inside a rigidly rotating sphere.
//!
//! The crate quantizes the field under spectral and MIT bag boundary
//! conditions, checks that no mode has `E * E_tilde <= 0` while the
//! surface moves slower than light, and evaluates the vacuum-subtracted
//! thermal condensate `<:psi-bar psi:>(r, theta)` by truncated mode sums.
//!
//! Everything here is `no_std` with `alloc`; IO, the CLI and thread pools
//! live in the `rotsphere` companion crate.
//!
//! Natural units are used throughout (`hbar = c = k_B = 1`). Half-integer
//! quantum numbers are stored doubled (`two_j`, `two_mj`).
#![no_std]
#![warn(missing_debug_implementations)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod boundary;
pub mod condensate;
mod error;
pub mod modes;
mod params;
pub mod quadrature;
pub mod specfun;
pub mod sum;

pub use boundary::{
    enumerate_spectrum, verify_vacuum_equivalence, BoundaryKind, QuantizedMode, Spectrum,
    VacuumReport, Varsigma,
};
pub use condensate::{
    condensate_grid, condensate_nonrotating, condensate_point, CondensateEvaluator,
    CondensateGrid, PhysicalParams, Subtraction, Truncation,
};
pub use error::{Error, Result};
pub use modes::{EnergySign, QuantumNumbers};
