use crate::error::domain;
use crate::{Error, Result};

/// Physical parameters in natural units.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalParams {
    /// Fermion mass `M >= 0`.
    pub mass: f64,
    /// Sphere radius `R > 0`.
    pub radius: f64,
    /// Angular velocity `Omega >= 0` with `Omega R < 1`.
    pub omega: f64,
    /// Inverse temperature `beta > 0`.
    pub beta: f64,
    /// Chemical potential.
    pub mu: f64,
}

impl PhysicalParams {
    pub fn new(mass: f64, radius: f64, omega: f64, beta: f64, mu: f64) -> Result<Self> {
        let p = Self {
            mass,
            radius,
            omega,
            beta,
            mu,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.mass >= 0.0) || !self.mass.is_finite() {
            return Err(domain("M", self.mass, "mass must be finite and non-negative"));
        }
        if !(self.radius > 0.0) || !self.radius.is_finite() {
            return Err(domain("R", self.radius, "radius must be finite and positive"));
        }
        if !(self.omega >= 0.0) || !self.omega.is_finite() {
            return Err(domain("Omega", self.omega, "angular velocity must be finite and non-negative"));
        }
        if !(self.beta > 0.0) || !self.beta.is_finite() {
            return Err(domain("beta", self.beta, "inverse temperature must be finite and positive"));
        }
        if !self.mu.is_finite() {
            return Err(domain("mu", self.mu, "chemical potential must be finite"));
        }
        check_subluminal(self.omega, self.radius)
    }

    pub fn omega_r(&self) -> f64 {
        self.omega * self.radius
    }

    pub fn with_omega(self, omega: f64) -> Result<Self> {
        Self { omega, ..self }.validate().map(|_| Self { omega, ..self })
    }
}

/// Rejects `Omega R >= 1`; the surface would move at or above light speed.
pub(crate) fn check_subluminal(omega: f64, radius: f64) -> Result<()> {
    let omega_r = omega * radius;
    if !(omega_r < 1.0) {
        return Err(Error::FasterThanLight { omega_r });
    }
    Ok(())
}
