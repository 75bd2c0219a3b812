//! Thread-pool drivers.
//!
//! Work is split only into independent units (level families, grid points)
//! that are computed by the same code as the serial path, so results are
//! bit-identical for any thread count.

use rayon::prelude::*;
use rotsphere_core::boundary::{check_truncation, level_groups, solve_level_group, zero_table_for};
use rotsphere_core::{
    BoundaryKind, CondensateEvaluator, CondensateGrid, PhysicalParams, Result, Spectrum, Truncation,
};

/// Serial or pooled execution.
#[derive(Debug)]
pub struct Executor {
    pool: Option<rayon::ThreadPool>,
}

impl Executor {
    pub fn serial() -> Self {
        Self { pool: None }
    }

    /// A dedicated pool; `None` lets rayon pick the thread count.
    pub fn pooled(threads: Option<usize>) -> std::result::Result<Self, rayon::ThreadPoolBuildError> {
        let mut b = rayon::ThreadPoolBuilder::new();
        if let Some(n) = threads {
            b = b.num_threads(n);
        }
        Ok(Self {
            pool: Some(b.build()?),
        })
    }

    pub fn is_serial(&self) -> bool {
        self.pool.is_none()
    }

    /// All modes with `j <= j_max`, `i <= i_max`.
    pub fn spectrum(
        &self,
        bc: BoundaryKind,
        params: &PhysicalParams,
        two_j_max: u32,
        i_max: u32,
    ) -> Result<Spectrum> {
        let Some(pool) = &self.pool else {
            return rotsphere_core::enumerate_spectrum(bc, params, two_j_max, i_max);
        };
        check_truncation(params, two_j_max, i_max)?;
        let zeros = zero_table_for(two_j_max, i_max)?;
        let keys = level_groups(bc, two_j_max);
        let groups = pool.install(|| {
            keys.par_iter()
                .map(|&k| solve_level_group(bc, params, &zeros, k, i_max))
                .collect::<Result<Vec<_>>>()
        })?;
        Spectrum::from_groups(bc, *params, two_j_max, i_max, groups)
    }

    /// Condensate evaluator with its levels solved on the pool.
    pub fn evaluator(
        &self,
        bc: BoundaryKind,
        params: &PhysicalParams,
        truncation: Truncation,
    ) -> Result<CondensateEvaluator> {
        let Some(pool) = &self.pool else {
            return CondensateEvaluator::new(bc, params, truncation);
        };
        truncation.validate()?;
        check_truncation(params, truncation.two_j_max, truncation.i_max)?;
        let zeros = zero_table_for(truncation.two_j_max, truncation.i_max)?;
        let keys = CondensateEvaluator::required_levels(bc, truncation);
        let groups = pool.install(|| {
            keys.par_iter()
                .map(|&k| solve_level_group(bc, params, &zeros, k, truncation.i_max))
                .collect::<Result<Vec<_>>>()
        })?;
        CondensateEvaluator::from_groups(bc, params, truncation, groups)
    }

    /// `values[theta][r]` over the tensor grid.
    pub fn grid(
        &self,
        ev: &CondensateEvaluator,
        r_values: &[f64],
        theta_values: &[f64],
    ) -> Result<CondensateGrid> {
        let Some(pool) = &self.pool else {
            return ev.grid(r_values, theta_values);
        };
        for &th in theta_values {
            for &r in r_values {
                ev.check_point(r, th)?;
            }
        }
        let (values, tails): (Vec<Vec<f64>>, Vec<f64>) = pool.install(|| {
            theta_values
                .par_iter()
                .map(|&th| {
                    let table = ev.harmonic_table(th);
                    let points: Vec<_> = r_values
                        .par_iter()
                        .map(|&r| ev.point_from_table(&table, r))
                        .collect();
                    let tail = points.iter().map(|p| p.tail).fold(0.0, f64::max);
                    (points.into_iter().map(|p| p.value).collect(), tail)
                })
                .unzip()
        });
        let tail = tails.into_iter().fold(0.0, f64::max);
        Ok(ev.assemble_grid(r_values, theta_values, values, tail))
    }
}
