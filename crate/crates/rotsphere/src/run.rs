//! Executes a [`RunConfig`].

use std::f64::consts::PI;
use std::fs::{self, File};
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};

use rotsphere_core::boundary::{boundary_residuals, ResidualTolerances};
use rotsphere_core::condensate::Subtraction;
use rotsphere_core::specfun::BesselZeros;
use rotsphere_core::verify_vacuum_equivalence;
use thiserror::Error;

use crate::config::{Mode, RunConfig};
use crate::output::{write_condensate, write_spectrum, write_zeros};
use crate::parallel::Executor;
use crate::presets::curves;

#[derive(Debug, Error)]
pub enum RunError {
    #[error("I/O error on {path}: {source}")]
    Io { path: PathBuf, source: io::Error },
    #[error("{context}: {source}")]
    Numeric {
        context: String,
        source: rotsphere_core::Error,
    },
    #[error("cannot build thread pool: {0}")]
    Pool(#[from] rayon::ThreadPoolBuildError),
}

/// Files written and whether every check passed.
#[derive(Debug, Default)]
pub struct Outcome {
    pub files: Vec<PathBuf>,
    pub passed: bool,
    /// Human-readable summary lines (verify mode).
    pub report: Vec<String>,
}

fn numeric(context: impl Into<String>) -> impl FnOnce(rotsphere_core::Error) -> RunError {
    let context = context.into();
    move |source| RunError::Numeric { context, source }
}

/// Writes to `path`, or to stdout when `path` is `None`.
fn emit<F>(path: Option<&Path>, f: F, files: &mut Vec<PathBuf>) -> Result<(), RunError>
where
    F: FnOnce(&mut dyn Write) -> io::Result<()>,
{
    match path {
        Some(p) => {
            let io_err = |source| RunError::Io {
                path: p.to_path_buf(),
                source,
            };
            let mut w = BufWriter::new(File::create(p).map_err(io_err)?);
            f(&mut w).map_err(io_err)?;
            w.flush().map_err(io_err)?;
            files.push(p.to_path_buf());
        }
        None => {
            let stdout = io::stdout();
            let mut lock = stdout.lock();
            f(&mut lock).map_err(|source| RunError::Io {
                path: PathBuf::from("<stdout>"),
                source,
            })?;
        }
    }
    Ok(())
}

/// Runs the configured mode.
pub fn run(cfg: &RunConfig) -> Result<Outcome, RunError> {
    let exec = if cfg.serial {
        Executor::serial()
    } else {
        Executor::pooled(cfg.threads)?
    };
    let mut out = Outcome {
        passed: true,
        ..Outcome::default()
    };
    match cfg.mode {
        Mode::Zeros => {
            let table = BesselZeros::build(cfg.order, cfg.count).map_err(numeric("zeros"))?;
            let zeros = table.table(cfg.order).expect("order is in the table").zeros();
            emit(
                cfg.output.as_deref(),
                |w| write_zeros(w, cfg.format, cfg.order, zeros),
                &mut out.files,
            )?;
        }
        Mode::Spectrum => {
            let t = cfg.truncation;
            let s = exec
                .spectrum(cfg.boundary, &cfg.params, t.two_j_max, t.i_max)
                .map_err(numeric(format!("spectrum ({})", cfg.boundary)))?;
            let modes = s.modes();
            emit(
                cfg.output.as_deref(),
                |w| write_spectrum(w, cfg.format, cfg.params.radius, &modes),
                &mut out.files,
            )?;
        }
        Mode::Condensate => condensate(cfg, &exec, &mut out)?,
        Mode::Verify => verify(cfg, &exec, &mut out)?,
    }
    Ok(out)
}

fn subtraction(cfg: &RunConfig) -> Subtraction {
    if cfg.raw {
        Subtraction::Raw
    } else {
        Subtraction::Vacuum
    }
}

fn condensate(cfg: &RunConfig, exec: &Executor, out: &mut Outcome) -> Result<(), RunError> {
    let rs = cfg.r_grid.values();
    let Some(preset) = cfg.preset else {
        let ev = exec
            .evaluator(cfg.boundary, &cfg.params, cfg.truncation)
            .map_err(numeric(format!("condensate levels ({})", cfg.boundary)))?
            .with_subtraction(subtraction(cfg));
        let grid = exec
            .grid(&ev, &rs, &cfg.theta_grid.values())
            .map_err(numeric("condensate grid"))?;
        return emit(
            cfg.output.as_deref(),
            |w| write_condensate(w, cfg.format, &grid, None),
            &mut out.files,
        );
    };
    let dir = cfg.output.clone().unwrap_or_else(|| PathBuf::from("."));
    fs::create_dir_all(&dir).map_err(|source| RunError::Io {
        path: dir.clone(),
        source,
    })?;
    for curve in curves(preset) {
        let stem = curve.file_stem();
        let ev = exec
            .evaluator(curve.boundary, &curve.params, cfg.truncation)
            .map_err(numeric(format!("{stem} levels")))?
            .with_subtraction(subtraction(cfg));
        let grid = exec
            .grid(&ev, &rs, &[curve.theta])
            .map_err(numeric(format!("{stem} grid")))?;
        let path = dir.join(format!("{stem}.{}", cfg.format.extension()));
        emit(
            Some(&path),
            |w| write_condensate(w, cfg.format, &grid, Some(&curve.label)),
            &mut out.files,
        )?;
    }
    Ok(())
}

fn verify(cfg: &RunConfig, exec: &Executor, out: &mut Outcome) -> Result<(), RunError> {
    let t = cfg.truncation;
    let s = exec
        .spectrum(cfg.boundary, &cfg.params, t.two_j_max, t.i_max)
        .map_err(numeric(format!("spectrum ({})", cfg.boundary)))?;
    let modes = s.modes();
    let vac = verify_vacuum_equivalence(&modes, cfg.params.omega, cfg.params.radius);
    out.report.push(format!(
        "vacuum equivalence: {} ({} modes, Omega*R = {}, {} violations, min |E_tilde| = {:e})",
        if vac.is_equivalent() { "ok" } else { "FAILED" },
        vac.checked,
        vac.omega_r,
        vac.violations.len(),
        vac.min_abs_corotating
    ));
    for v in vac.violations.iter().take(10) {
        out.report.push(format!(
            "  violation {}: E = {}, E_tilde = {}",
            v.qn, v.energy, v.corotating_energy
        ));
    }
    let mut thetas = cfg.theta_grid.values();
    thetas.extend([0.3, 1.2, PI / 2.0, 2.5]);
    let res = boundary_residuals(&s, &thetas, ResidualTolerances::default());
    out.report.push(format!(
        "boundary residuals ({}): {} (quantization {:e}, spectral components {:e}, MIT relation {:e}, MIT density {:e})",
        cfg.boundary,
        if res.passed() { "ok" } else { "FAILED" },
        res.max_quantization,
        res.max_spectral_components,
        res.max_mit_relation,
        res.max_mit_density
    ));
    for (qn, what, v) in res.failures.iter().take(10) {
        out.report.push(format!("  {what} residual {v:e} for {qn}"));
    }
    out.passed = vac.is_equivalent() && res.passed();
    if let Some(path) = &cfg.output {
        let text = out.report.join("\n") + "\n";
        emit(Some(path), |w| w.write_all(text.as_bytes()), &mut out.files)?;
    }
    Ok(())
}
