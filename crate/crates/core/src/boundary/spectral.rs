use crate::specfun::{sph_j, Limits};
use crate::{Error, Result};

/// Bessel order whose zeros quantize a spectral level: `j + 1/2` when
/// `m kappa > 0`, `j - 1/2` otherwise.
pub(crate) fn zero_order(two_j: u32, sign_mk: i8) -> u32 {
    if sign_mk > 0 {
        two_j.div_ceil(2)
    } else {
        (two_j - 1) / 2
    }
}

fn check(two_j: u32, sign_mk: i8) -> Result<()> {
    if two_j.is_multiple_of(2) {
        return Err(Error::InvalidQuantumNumbers("j must be a positive half-integer"));
    }
    if sign_mk != 1 && sign_mk != -1 {
        return Err(Error::InvalidQuantumNumbers("sign of m kappa must be +1 or -1"));
    }
    Ok(())
}

/// `p = xi_{j +- 1/2, i} / R`.
pub fn spectral_momentum(two_j: u32, sign_mk: i8, i: u32, radius: f64) -> Result<f64> {
    check(two_j, sign_mk)?;
    let xi = Limits::default().bessel_zero(zero_order(two_j, sign_mk), i)?;
    Ok(xi / radius)
}

/// Normalization constant of a spectral mode,
/// `sqrt(2) / (R^{3/2} |j_{partner}(xi)|)`, where the partner order is the
/// other member of the `(j - 1/2, j + 1/2)` pair.
pub fn spectral_norm(two_j: u32, sign_mk: i8, i: u32, radius: f64) -> Result<f64> {
    check(two_j, sign_mk)?;
    let order = zero_order(two_j, sign_mk);
    let xi = Limits::default().bessel_zero(order, i)?;
    Ok(spectral_norm_at(two_j, sign_mk, xi, radius))
}

pub(crate) fn spectral_norm_at(two_j: u32, sign_mk: i8, xi: f64, radius: f64) -> f64 {
    let partner = if sign_mk > 0 {
        (two_j - 1) / 2
    } else {
        two_j.div_ceil(2)
    };
    core::f64::consts::SQRT_2 / (libm::pow(radius, 1.5) * libm::fabs(sph_j(partner, xi)))
}
