//! Command-line interface.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::config::{tokenize, ConfigError, RunConfig};

#[derive(Debug, Parser)]
#[command(
    name = "rotsphere",
    version,
    about = "Dirac modes and thermal condensate in a rigidly rotating sphere"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List zeros of the spherical Bessel function j_n.
    Zeros(ZerosArgs),
    /// Export the quantized spectrum.
    Spectrum(CommonArgs),
    /// Evaluate the condensate on an (r, theta) grid or a figure preset.
    Condensate(CommonArgs),
    /// Check vacuum equivalence and boundary residuals; exits 1 on failure.
    Verify(CommonArgs),
}

#[derive(Debug, Args)]
pub struct ZerosArgs {
    /// Bessel order n.
    #[arg(long, default_value_t = 0)]
    pub order: u32,
    /// Number of zeros.
    #[arg(long, default_value_t = 10)]
    pub count: u32,
    /// Output file (stdout if omitted).
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// csv or json.
    #[arg(long)]
    pub format: Option<String>,
}

#[derive(Debug, Args)]
pub struct CommonArgs {
    /// Flat key=value configuration file; flags override its values.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Boundary condition: spectral or mit.
    #[arg(long)]
    pub bc: Option<String>,
    /// MIT chirality sign: 1 or -1.
    #[arg(long, allow_hyphen_values = true)]
    pub varsigma: Option<String>,
    /// Fermion mass.
    #[arg(long = "M", allow_hyphen_values = true)]
    pub mass: Option<String>,
    /// Sphere radius.
    #[arg(long = "R", allow_hyphen_values = true)]
    pub radius: Option<String>,
    /// Angular velocity; requires Omega*R < 1.
    #[arg(long = "Omega", allow_hyphen_values = true)]
    pub omega: Option<String>,
    /// Inverse temperature.
    #[arg(long, allow_hyphen_values = true)]
    pub beta: Option<String>,
    /// Chemical potential.
    #[arg(long, allow_hyphen_values = true)]
    pub mu: Option<String>,
    /// Largest j, e.g. 41/2.
    #[arg(long)]
    pub jmax: Option<String>,
    /// Largest radial index.
    #[arg(long)]
    pub imax: Option<String>,
    /// Radial grid, start:end:count or a comma-separated list.
    #[arg(long)]
    pub r_grid: Option<String>,
    /// Polar grid, start:end:count or a list; accepts pi/2 style values.
    #[arg(long)]
    pub theta_grid: Option<String>,
    /// Figure preset: fig1a..fig1f, fig2a..fig2f, fig1 or fig2.
    #[arg(long)]
    pub preset: Option<String>,
    /// Output file, or directory for presets.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// csv or json.
    #[arg(long)]
    pub format: Option<String>,
    /// Worker threads.
    #[arg(long)]
    pub threads: Option<String>,
    /// Run on the calling thread only.
    #[arg(long)]
    pub serial: bool,
    /// Emit the raw, not vacuum-subtracted, sum.
    #[arg(long)]
    pub raw: bool,
}

/// Errors raised while turning arguments into a [`RunConfig`].
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("cannot read configuration file {path}: {source}")]
    ReadConfig {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error(transparent)]
    Config(#[from] ConfigError),
}

impl Cli {
    /// Resolves file values and flags into a validated configuration.
    pub fn into_config(self) -> Result<RunConfig, CliError> {
        let (mode, args) = match self.command {
            Command::Zeros(z) => {
                let mut pairs = vec![
                    ("mode".to_owned(), "zeros".to_owned()),
                    ("order".to_owned(), z.order.to_string()),
                    ("count".to_owned(), z.count.to_string()),
                ];
                if let Some(o) = z.out {
                    pairs.push(("out".into(), o.display().to_string()));
                }
                if let Some(f) = z.format {
                    pairs.push(("format".into(), f));
                }
                return Ok(RunConfig::from_pairs(pairs)?);
            }
            Command::Spectrum(a) => ("spectrum", a),
            Command::Condensate(a) => ("condensate", a),
            Command::Verify(a) => ("verify", a),
        };
        let mut pairs = match &args.config {
            Some(path) => {
                let text = std::fs::read_to_string(path).map_err(|source| CliError::ReadConfig {
                    path: path.clone(),
                    source,
                })?;
                tokenize(&text)?
            }
            None => Vec::new(),
        };
        pairs.push(("mode".into(), mode.into()));
        let flags = [
            ("bc", args.bc),
            ("varsigma", args.varsigma),
            ("M", args.mass),
            ("R", args.radius),
            ("Omega", args.omega),
            ("beta", args.beta),
            ("mu", args.mu),
            ("jmax", args.jmax),
            ("imax", args.imax),
            ("r-grid", args.r_grid),
            ("theta-grid", args.theta_grid),
            ("preset", args.preset),
            ("out", args.out.map(|p| p.display().to_string())),
            ("format", args.format),
            ("threads", args.threads),
        ];
        for (k, v) in flags {
            if let Some(v) = v {
                pairs.push((k.into(), v));
            }
        }
        if args.serial {
            pairs.push(("serial".into(), "true".into()));
        }
        if args.raw {
            pairs.push(("raw".into(), "true".into()));
        }
        Ok(RunConfig::from_pairs(pairs)?)
    }
}
