use alloc::vec::Vec;
use core::f64::consts::{PI, SQRT_2};

use super::Varsigma;
use crate::error::domain;
use crate::modes::qn::{lower_order, upper_order};
use crate::modes::EnergySign;
use crate::specfun::root::{brent, sign_changes};
use crate::specfun::{sph_j, BesselZeros};
use crate::{Error, Result};

/// Largest sign-scan step in `pR`.
const MAX_SCAN_STEP: f64 = PI / 8.0;
/// Minimum number of scan cells per interlacing interval.
const MIN_CELLS: f64 = 8.0;
/// Accepted residual of the normalized quantization function.
pub(crate) const MIT_RESIDUAL_TOL: f64 = 1e-10;

/// `E + M` for `E = esign sqrt(p^2 + M^2)`, without cancellation for `E < 0`.
#[inline]
fn e_plus_m(esign: EnergySign, p: f64, mass: f64) -> f64 {
    let h = libm::hypot(p, mass);
    match esign {
        EnergySign::Positive => h + mass,
        EnergySign::Negative => -(p * p) / (h + mass),
    }
}

/// Normalized MIT quantization function of `x = pR`:
///
/// `q(x) = [(E+M) j_{l_kappa}(x) - sgn(kappa) varsigma p j_{lbar_kappa}(x)] / |(E+M, p)|`.
///
/// Its zeros are exactly the roots of
/// `j_{l_kappa}(pR) = sgn(kappa) varsigma p / (E+M) j_{lbar_kappa}(pR)`, and
/// `|q| <= 1` everywhere.
pub fn mit_quantization(
    kappa: i32,
    esign: EnergySign,
    mass: f64,
    radius: f64,
    varsigma: Varsigma,
    x: f64,
) -> f64 {
    let p = x / radius;
    let epm = e_plus_m(esign, p, mass);
    let s = if kappa > 0 { 1.0 } else { -1.0 } * varsigma.value();
    let num = epm * sph_j(upper_order(kappa), x) - s * p * sph_j(lower_order(kappa), x);
    num / libm::hypot(epm, p)
}

fn check_inputs(two_j: u32, kappa: i32, radius: f64, mass: f64) -> Result<()> {
    if two_j.is_multiple_of(2) || kappa.unsigned_abs() != two_j.div_ceil(2) {
        return Err(Error::InvalidQuantumNumbers("need half-integer j and |kappa| = j + 1/2"));
    }
    if !(radius > 0.0) {
        return Err(domain("R", radius, "radius must be positive"));
    }
    if !(mass >= 0.0) {
        return Err(domain("M", mass, "mass must be non-negative"));
    }
    Ok(())
}

/// First `count` positive momenta allowed by the MIT condition.
pub fn mit_momenta(
    two_j: u32,
    kappa: i32,
    esign: EnergySign,
    radius: f64,
    mass: f64,
    varsigma: Varsigma,
    count: u32,
) -> Result<Vec<f64>> {
    check_inputs(two_j, kappa, radius, mass)?;
    let zeros = BesselZeros::build(upper_order(kappa), count + 2)?;
    mit_momenta_with(&zeros, two_j, kappa, esign, radius, mass, varsigma, count)
}

/// [`mit_momenta`] with a caller-supplied zero table; the table must cover
/// order `l_kappa`.
#[allow(clippy::too_many_arguments)]
pub fn mit_momenta_with(
    zeros: &BesselZeros,
    two_j: u32,
    kappa: i32,
    esign: EnergySign,
    radius: f64,
    mass: f64,
    varsigma: Varsigma,
    count: u32,
) -> Result<Vec<f64>> {
    check_inputs(two_j, kappa, radius, mass)?;
    let l = upper_order(kappa);
    let table = zeros
        .table(l)
        .ok_or(Error::UnsupportedOrder {
            order: l,
            max: zeros.max_order(),
        })?
        .zeros();
    let q = |x: f64| mit_quantization(kappa, esign, mass, radius, varsigma, x);

    // Interlacing intervals (0, z_1), (z_1, z_2), ...; q alternates sign at
    // the zeros of j_{l_kappa}, so each interval holds an odd number of roots.
    let start = libm::pow(10.0, -(200.0 / f64::from(l + 2)).min(6.0));
    let mut edges = Vec::with_capacity(table.len() + 1);
    edges.push(start);
    edges.extend_from_slice(table);

    let want = count as usize;
    let mut roots = Vec::with_capacity(want);
    let push_roots = |lo: f64, hi: f64, roots: &mut Vec<f64>| -> Result<()> {
        let step = MAX_SCAN_STEP.min((hi - lo) / MIN_CELLS);
        for (a, b) in sign_changes(q, lo, hi, step) {
            let x = brent(q, a, b, 0.0, "MIT quantization")?;
            if libm::fabs(q(x)) > MIT_RESIDUAL_TOL {
                return Err(Error::SolverFailure {
                    context: "MIT quantization residual",
                    lo: a,
                    hi: b,
                });
            }
            if roots.last().is_none_or(|&prev| x > prev) {
                roots.push(x);
            }
        }
        Ok(())
    };
    for w in edges.windows(2) {
        if roots.len() >= want {
            break;
        }
        push_roots(w[0], w[1], &mut roots)?;
    }
    // Past the tabulated zeros, keep scanning in windows of width pi.
    let mut lo = *edges.last().expect("non-empty");
    let mut guard = 0;
    while roots.len() < want {
        push_roots(lo, lo + PI, &mut roots)?;
        lo += PI;
        guard += 1;
        if guard > 10 * want + 100 {
            return Err(Error::SolverFailure {
                context: "MIT root enumeration",
                lo: start,
                hi: lo,
            });
        }
    }
    roots.truncate(want);
    Ok(roots.into_iter().map(|x| x / radius).collect())
}

/// Normalization constant of an MIT mode at a root `p` of the quantization
/// condition:
///
/// `C = sqrt(2) / (R |j_{partner}(pR)|) sqrt((E+M) / (2ER -+ varsigma(2j+1) + varsigma M/E))`
///
/// with `-` and partner order `j + 1/2` for `kappa > 0`, `+` and `j - 1/2`
/// for `kappa < 0`.
#[allow(clippy::too_many_arguments)]
pub fn mit_norm(
    two_j: u32,
    kappa: i32,
    esign: EnergySign,
    radius: f64,
    mass: f64,
    varsigma: Varsigma,
    p: f64,
) -> Result<f64> {
    check_inputs(two_j, kappa, radius, mass)?;
    if !(p > 0.0) {
        return Err(domain("p", p, "momentum must be positive"));
    }
    let x = p * radius;
    let e = esign.as_f64() * libm::hypot(p, mass);
    let epm = e_plus_m(esign, p, mass);
    let vs = varsigma.value();
    let deg = f64::from(two_j + 1);
    let (partner, denom) = if kappa > 0 {
        (two_j.div_ceil(2), 2.0 * e * radius - vs * deg + vs * mass / e)
    } else {
        ((two_j - 1) / 2, 2.0 * e * radius + vs * deg + vs * mass / e)
    };
    let ratio = epm / denom;
    let bad = |reason| Error::Normalization {
        two_j,
        kappa,
        x,
        reason,
    };
    if !(ratio > 0.0) || !ratio.is_finite() {
        return Err(bad("(E+M)/denominator is not positive; p is not a root for these parameters"));
    }
    let jp = libm::fabs(sph_j(partner, x));
    if jp == 0.0 {
        return Err(bad("partner Bessel function vanishes at the root"));
    }
    Ok(SQRT_2 / (radius * jp) * libm::sqrt(ratio))
}
