use alloc::vec::Vec;
use core::f64::consts::PI;

use super::bessel::{sph_j, sph_j_prime};
use super::root::brent;
use super::Limits;
use crate::Result;

/// Positive zeros `xi_{n,1} < xi_{n,2} < ...` of `j_n` for one order.
#[derive(Debug, Clone, PartialEq)]
pub struct BesselZeroTable {
    order: u32,
    zeros: Vec<f64>,
}

impl BesselZeroTable {
    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn zeros(&self) -> &[f64] {
        &self.zeros
    }

    /// One-based lookup, `zero(1) = xi_{n,1}`.
    pub fn zero(&self, i: u32) -> Option<f64> {
        let idx = usize::try_from(i).ok()?.checked_sub(1)?;
        self.zeros.get(idx).copied()
    }

    pub fn len(&self) -> usize {
        self.zeros.len()
    }

    pub fn is_empty(&self) -> bool {
        self.zeros.is_empty()
    }
}

/// Zero tables for orders `0..=max_order`, built by interlacing.
///
/// Order 0 has zeros at `i * pi`. Every zero of `j_{n+1}` lies strictly
/// between consecutive zeros of `j_n`, so each bracket holds exactly one
/// root and no root can be skipped.
#[derive(Debug, Clone, PartialEq)]
pub struct BesselZeros {
    tables: Vec<BesselZeroTable>,
}

impl BesselZeros {
    /// Builds tables so that every order up to `max_order` has at least
    /// `count` zeros (lower orders carry more, as the brackets require).
    pub fn build(max_order: u32, count: u32) -> Result<Self> {
        let count = count.max(1) as usize;
        let base = count + max_order as usize;
        let mut tables = Vec::with_capacity(max_order as usize + 1);
        tables.push(BesselZeroTable {
            order: 0,
            zeros: (1..=base).map(|i| i as f64 * PI).collect(),
        });
        for order in 1..=max_order {
            let prev = &tables[order as usize - 1].zeros;
            let mut zeros = Vec::with_capacity(prev.len() - 1);
            for w in prev.windows(2) {
                zeros.push(refine_zero(order, w[0], w[1])?);
            }
            tables.push(BesselZeroTable { order, zeros });
        }
        Ok(Self { tables })
    }

    pub fn max_order(&self) -> u32 {
        self.tables.len() as u32 - 1
    }

    pub fn table(&self, order: u32) -> Option<&BesselZeroTable> {
        self.tables.get(order as usize)
    }

    /// `xi_{n,i}`, one-based in `i`.
    pub fn zero(&self, order: u32, i: u32) -> Option<f64> {
        self.table(order)?.zero(i)
    }
}

fn refine_zero(order: u32, lo: f64, hi: f64) -> Result<f64> {
    let f = |x: f64| sph_j(order, x);
    let x = brent(f, lo, hi, 0.0, "spherical Bessel zero")?;
    // One guarded Newton step on top of the bracketed solution.
    let fx = f(x);
    let d = sph_j_prime(order, x);
    if d != 0.0 {
        let xn = x - fx / d;
        if xn > lo && xn < hi && libm::fabs(f(xn)) <= libm::fabs(fx) {
            return Ok(xn);
        }
    }
    Ok(x)
}

/// `xi_{n,i}`, the `i`-th positive zero of `j_n`.
pub fn spherical_bessel_zero(n: u32, i: u32) -> Result<f64> {
    Limits::default().bessel_zero(n, i)
}

impl Limits {
    pub fn bessel_zero(&self, n: u32, i: u32) -> Result<f64> {
        self.check_order(n)?;
        if i == 0 || i > self.max_zero_index {
            return Err(crate::error::domain(
                "i",
                f64::from(i),
                "zero index must be in 1..=max_zero_index",
            ));
        }
        if n == 0 {
            return Ok(f64::from(i) * PI);
        }
        let table = BesselZeros::build(n, i)?;
        Ok(table
            .zero(n, i)
            .expect("interlacing build yields the requested count"))
    }
}
