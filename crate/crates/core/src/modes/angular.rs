use crate::specfun::{assoc_legendre_density, HarmonicDensities};
use crate::{Error, Result};

/// Probability densities of the two spinor harmonics at one polar angle.
///
/// `d_plus = chi+^dagger chi+` is built on `l = j - 1/2` harmonics and
/// `d_minus = chi-^dagger chi-` on `l = j + 1/2`. Both are independent of
/// the azimuth.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AngularDensity {
    pub d_plus: f64,
    pub d_minus: f64,
}

/// Spinor-harmonic densities for `(j, m_j)` at `theta`.
pub fn angular_density(two_j: u32, two_mj: i32, theta: f64) -> Result<AngularDensity> {
    if two_j.is_multiple_of(2) || two_mj % 2 == 0 || two_mj.unsigned_abs() > two_j {
        return Err(Error::InvalidQuantumNumbers(
            "angular density needs half-integer j and |m_j| <= j",
        ));
    }
    let l_lo = (two_j - 1) / 2;
    let l_hi = two_j.div_ceil(2);
    let m_down = (two_mj - 1) / 2;
    let m_up = (two_mj + 1) / 2;
    let y = |l: u32, m: i32| -> Result<f64> {
        if m.unsigned_abs() > l {
            Ok(0.0)
        } else {
            assoc_legendre_density(l, m, theta)
        }
    };
    let w = weights(two_j, two_mj);
    Ok(AngularDensity {
        d_plus: w[0] * y(l_lo, m_down)? + w[1] * y(l_lo, m_up)?,
        d_minus: w[2] * y(l_hi, m_down)? + w[3] * y(l_hi, m_up)?,
    })
}

impl AngularDensity {
    /// Same as [`angular_density`] but reads from a precomputed table;
    /// the table must reach `l = j + 1/2`.
    #[inline]
    pub fn from_table(table: &HarmonicDensities, two_j: u32, two_mj: i32) -> Self {
        let l_lo = (two_j - 1) / 2;
        let l_hi = two_j.div_ceil(2);
        let m_down = (two_mj - 1) / 2;
        let m_up = (two_mj + 1) / 2;
        let w = weights(two_j, two_mj);
        Self {
            d_plus: w[0] * table.get(l_lo, m_down) + w[1] * table.get(l_lo, m_up),
            d_minus: w[2] * table.get(l_hi, m_down) + w[3] * table.get(l_hi, m_up),
        }
    }
}

/// Squared Clebsch-Gordan weights `[(j+m)/2j, (j-m)/2j, (j-m+1)/2(j+1), (j+m+1)/2(j+1)]`.
#[inline]
fn weights(two_j: u32, two_mj: i32) -> [f64; 4] {
    let j2 = f64::from(two_j);
    let m2 = f64::from(two_mj);
    [
        (j2 + m2) / (2.0 * j2),
        (j2 - m2) / (2.0 * j2),
        (j2 - m2 + 2.0) / (2.0 * (j2 + 2.0)),
        (j2 + m2 + 2.0) / (2.0 * (j2 + 2.0)),
    ]
}
