//! Flat `key=value` run configuration.
//!
//! Pairs may be separated by whitespace or newlines; `#` starts a comment.
//! Later pairs override earlier ones, which is how command-line flags take
//! precedence over a configuration file.

use std::f64::consts::PI;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::str::FromStr;

use rotsphere_core::{BoundaryKind, Error as CoreError, PhysicalParams, Truncation, Varsigma};
use thiserror::Error;

use crate::presets::Preset;

/// What a run produces.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Zeros,
    Spectrum,
    Condensate,
    Verify,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::Zeros => "zeros",
            Self::Spectrum => "spectrum",
            Self::Condensate => "condensate",
            Self::Verify => "verify",
        }
    }
}

/// Output file format.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

impl Format {
    pub fn extension(self) -> &'static str {
        match self {
            Self::Csv => "csv",
            Self::Json => "json",
        }
    }
}

/// A list of sample points, either `start:end:count` or explicit values.
#[derive(Debug, Clone, PartialEq)]
pub enum GridSpec {
    Linspace { start: f64, end: f64, count: usize },
    List(Vec<f64>),
}

impl GridSpec {
    pub fn values(&self) -> Vec<f64> {
        match self {
            Self::List(v) => v.clone(),
            Self::Linspace { start, end, count } => match count {
                0 => Vec::new(),
                1 => vec![*start],
                n => {
                    let step = (end - start) / (*n - 1) as f64;
                    // Pin the last node so that `end` (often R) is hit exactly.
                    (0..*n)
                        .map(|k| if k + 1 == *n { *end } else { start + step * k as f64 })
                        .collect()
                }
            },
        }
    }

    fn parse(key: &str, text: &str) -> Result<Self, ConfigError> {
        let parts: Vec<&str> = text.split(':').collect();
        match parts.as_slice() {
            [a, b, n] => {
                let count = n.trim().parse::<usize>().map_err(|_| ConfigError::Malformed {
                    key: key.to_owned(),
                    value: text.to_owned(),
                    expected: "start:end:count with an integer count",
                })?;
                if count == 0 {
                    return Err(out_of_range(key, "grid needs at least one point"));
                }
                Ok(Self::Linspace {
                    start: parse_real(key, a)?,
                    end: parse_real(key, b)?,
                    count,
                })
            }
            [list] => {
                let v = list
                    .split(',')
                    .map(|s| parse_real(key, s))
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(Self::List(v))
            }
            _ => Err(ConfigError::Malformed {
                key: key.to_owned(),
                value: text.to_owned(),
                expected: "start:end:count or a comma-separated list",
            }),
        }
    }

    fn serialize(&self) -> String {
        match self {
            Self::Linspace { start, end, count } => format!("{start}:{end}:{count}"),
            Self::List(v) => v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","),
        }
    }
}

/// Validated configuration of one CLI run.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub mode: Mode,
    pub boundary: BoundaryKind,
    pub params: PhysicalParams,
    pub r_grid: GridSpec,
    pub theta_grid: GridSpec,
    pub truncation: Truncation,
    pub output: Option<PathBuf>,
    pub format: Format,
    pub preset: Option<Preset>,
    pub threads: Option<usize>,
    pub serial: bool,
    /// Emit the raw (not vacuum-subtracted) sum.
    pub raw: bool,
    /// Bessel order for `zeros`.
    pub order: u32,
    /// Number of zeros for `zeros`.
    pub count: u32,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            mode: Mode::Condensate,
            boundary: BoundaryKind::Spectral,
            params: PhysicalParams {
                mass: 1.0,
                radius: 1.0,
                omega: 0.0,
                beta: 1.0,
                mu: 0.0,
            },
            r_grid: GridSpec::Linspace {
                start: 0.0,
                end: 1.0,
                count: 101,
            },
            theta_grid: GridSpec::List(vec![PI / 2.0]),
            truncation: Truncation::default(),
            output: None,
            format: Format::Csv,
            preset: None,
            threads: None,
            serial: false,
            raw: false,
            order: 0,
            count: 10,
        }
    }
}

/// Configuration errors; each names the offending key.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum ConfigError {
    #[error("unknown configuration key `{0}`")]
    UnknownKey(String),
    #[error("expected `key=value`, found `{0}`")]
    Syntax(String),
    #[error("malformed value `{value}` for `{key}`: expected {expected}")]
    Malformed {
        key: String,
        value: String,
        expected: &'static str,
    },
    #[error("`Omega` and `R` describe a faster-than-light boundary: Omega*R = {0} must be < 1")]
    FasterThanLight(f64),
    #[error("`beta` must be positive (inverse temperature), found {0}")]
    NonPositiveBeta(f64),
    #[error("`{key}` is out of range: {reason}")]
    OutOfRange { key: String, reason: String },
}

fn out_of_range(key: &str, reason: impl Into<String>) -> ConfigError {
    ConfigError::OutOfRange {
        key: key.to_owned(),
        reason: reason.into(),
    }
}

/// Parses a real number; also accepts multiples of `pi` such as `pi/2`,
/// `3pi/8` or `0.25*pi`.
pub fn parse_real(key: &str, text: &str) -> Result<f64, ConfigError> {
    let t = text.trim();
    let malformed = || ConfigError::Malformed {
        key: key.to_owned(),
        value: text.to_owned(),
        expected: "a real number or a multiple of pi",
    };
    let v = if let Some(idx) = t.find("pi") {
        let coef = t[..idx].trim_end_matches('*').trim();
        let rest = t[idx + 2..].trim();
        let c = match coef {
            "" => 1.0,
            "-" => -1.0,
            c => c.parse::<f64>().map_err(|_| malformed())?,
        };
        let d = match rest.strip_prefix('/') {
            Some(d) => d.trim().parse::<f64>().map_err(|_| malformed())?,
            None if rest.is_empty() => 1.0,
            None => return Err(malformed()),
        };
        c * PI / d
    } else {
        t.parse::<f64>().map_err(|_| malformed())?
    };
    if v.is_finite() {
        Ok(v)
    } else {
        Err(malformed())
    }
}

/// Parses a half-integer written as `41/2` or `20.5`, returning `2j`.
fn parse_half_integer(key: &str, text: &str) -> Result<u32, ConfigError> {
    let malformed = || ConfigError::Malformed {
        key: key.to_owned(),
        value: text.to_owned(),
        expected: "a positive half-integer such as 41/2 or 20.5",
    };
    let t = text.trim();
    if let Some(num) = t.strip_suffix("/2") {
        let n = num.trim().parse::<u32>().map_err(|_| malformed())?;
        if n % 2 == 1 {
            return Ok(n);
        }
        return Err(malformed());
    }
    let v = t.parse::<f64>().map_err(|_| malformed())?;
    let twice = 2.0 * v;
    if twice > 0.0 && twice.fract() == 0.0 && (twice as u32) % 2 == 1 {
        Ok(twice as u32)
    } else {
        Err(malformed())
    }
}

fn parse_int<T: FromStr>(key: &str, text: &str) -> Result<T, ConfigError> {
    text.trim().parse::<T>().map_err(|_| ConfigError::Malformed {
        key: key.to_owned(),
        value: text.to_owned(),
        expected: "a non-negative integer",
    })
}

fn parse_bool(key: &str, text: &str) -> Result<bool, ConfigError> {
    match text.trim() {
        "true" | "1" | "yes" => Ok(true),
        "false" | "0" | "no" => Ok(false),
        _ => Err(ConfigError::Malformed {
            key: key.to_owned(),
            value: text.to_owned(),
            expected: "true or false",
        }),
    }
}

/// Splits configuration text into `(key, value)` pairs.
pub fn tokenize(text: &str) -> Result<Vec<(String, String)>, ConfigError> {
    let mut pairs = Vec::new();
    for line in text.lines() {
        let line = line.split('#').next().unwrap_or("");
        for tok in line.split_whitespace() {
            let (k, v) = tok
                .split_once('=')
                .ok_or_else(|| ConfigError::Syntax(tok.to_owned()))?;
            pairs.push((k.to_owned(), v.to_owned()));
        }
    }
    Ok(pairs)
}

/// Parses flat `key=value` text into a validated [`RunConfig`].
pub fn parse_config(text: &str) -> Result<RunConfig, ConfigError> {
    RunConfig::from_pairs(tokenize(text)?)
}

impl RunConfig {
    /// Applies pairs in order on top of the defaults, then validates.
    pub fn from_pairs<I, K, V>(pairs: I) -> Result<Self, ConfigError>
    where
        I: IntoIterator<Item = (K, V)>,
        K: AsRef<str>,
        V: AsRef<str>,
    {
        let mut cfg = Self::default();
        let mut bc_name = String::from("spectral");
        let mut varsigma = Varsigma::Ordinary;
        for (k, v) in pairs {
            let (key, val) = (k.as_ref(), v.as_ref());
            match key {
                "mode" => {
                    cfg.mode = match val {
                        "zeros" => Mode::Zeros,
                        "spectrum" => Mode::Spectrum,
                        "condensate" => Mode::Condensate,
                        "verify" => Mode::Verify,
                        _ => {
                            return Err(ConfigError::Malformed {
                                key: key.into(),
                                value: val.into(),
                                expected: "zeros, spectrum, condensate or verify",
                            })
                        }
                    }
                }
                "bc" => match val {
                    "spectral" | "mit" => bc_name = val.to_owned(),
                    _ => {
                        return Err(ConfigError::Malformed {
                            key: key.into(),
                            value: val.into(),
                            expected: "spectral or mit",
                        })
                    }
                },
                "varsigma" => {
                    varsigma = match val.trim() {
                        "1" | "+1" => Varsigma::Ordinary,
                        "-1" => Varsigma::Chiral,
                        _ => {
                            return Err(ConfigError::Malformed {
                                key: key.into(),
                                value: val.into(),
                                expected: "1 or -1",
                            })
                        }
                    }
                }
                "M" => cfg.params.mass = parse_real(key, val)?,
                "R" => cfg.params.radius = parse_real(key, val)?,
                "Omega" => cfg.params.omega = parse_real(key, val)?,
                "beta" => cfg.params.beta = parse_real(key, val)?,
                "mu" => cfg.params.mu = parse_real(key, val)?,
                "jmax" => cfg.truncation.two_j_max = parse_half_integer(key, val)?,
                "imax" => cfg.truncation.i_max = parse_int(key, val)?,
                "r-grid" => cfg.r_grid = GridSpec::parse(key, val)?,
                "theta-grid" => cfg.theta_grid = GridSpec::parse(key, val)?,
                "out" => cfg.output = Some(PathBuf::from(val)),
                "format" => {
                    cfg.format = match val {
                        "csv" => Format::Csv,
                        "json" => Format::Json,
                        _ => {
                            return Err(ConfigError::Malformed {
                                key: key.into(),
                                value: val.into(),
                                expected: "csv or json",
                            })
                        }
                    }
                }
                "preset" => {
                    cfg.preset = Some(val.parse::<Preset>().map_err(|_| ConfigError::Malformed {
                        key: key.into(),
                        value: val.into(),
                        expected: "fig1a..fig1f, fig2a..fig2f, fig1 or fig2",
                    })?)
                }
                "threads" => cfg.threads = Some(parse_int(key, val)?),
                "serial" => cfg.serial = parse_bool(key, val)?,
                "raw" => cfg.raw = parse_bool(key, val)?,
                "order" => cfg.order = parse_int(key, val)?,
                "count" => cfg.count = parse_int(key, val)?,
                _ => return Err(ConfigError::UnknownKey(key.to_owned())),
            }
        }
        cfg.boundary = match bc_name.as_str() {
            "mit" => BoundaryKind::Mit(varsigma),
            _ => BoundaryKind::Spectral,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    /// Checks every physical and structural invariant.
    pub fn validate(&self) -> Result<(), ConfigError> {
        let p = &self.params;
        if !(p.beta > 0.0) {
            return Err(ConfigError::NonPositiveBeta(p.beta));
        }
        if let Err(e) = p.validate() {
            return Err(match e {
                CoreError::FasterThanLight { omega_r } => ConfigError::FasterThanLight(omega_r),
                CoreError::Domain { name, reason, .. } => out_of_range(name, reason),
                other => out_of_range("params", other.to_string()),
            });
        }
        let t = self.truncation;
        if t.i_max == 0 {
            return Err(out_of_range("imax", "need at least one radial level"));
        }
        if t.two_j_max.is_multiple_of(2) {
            return Err(out_of_range("jmax", "must be a half-integer"));
        }
        // A condensate truncated at j = 1/2 has no meaningful tail.
        if self.mode == Mode::Condensate && t.two_j_max < 3 {
            return Err(out_of_range("jmax", "condensate sums need jmax >= 3/2"));
        }
        if self.truncation.two_j_max > 399 {
            return Err(out_of_range("jmax", "at most 399/2 is supported"));
        }
        for (key, grid, hi) in [
            ("r-grid", &self.r_grid, p.radius),
            ("theta-grid", &self.theta_grid, PI),
        ] {
            let values = grid.values();
            if values.is_empty() {
                return Err(out_of_range(key, "grid is empty"));
            }
            if let Some(v) = values.iter().find(|&&v| !(v >= 0.0 && v <= hi)) {
                return Err(out_of_range(key, format!("value {v} lies outside [0, {hi}]")));
            }
        }
        if self.threads == Some(0) {
            return Err(out_of_range("threads", "need at least one thread"));
        }
        if self.count == 0 {
            return Err(out_of_range("count", "need at least one zero"));
        }
        if self.order > 200 {
            return Err(out_of_range("order", "at most 200 is supported"));
        }
        Ok(())
    }

    /// Canonical `key=value` text; parsing it yields an equal config.
    pub fn to_config_string(&self) -> String {
        let mut s = String::new();
        let p = &self.params;
        let _ = writeln!(s, "mode={}", self.mode.as_str());
        match self.boundary {
            BoundaryKind::Spectral => {
                let _ = writeln!(s, "bc=spectral");
            }
            BoundaryKind::Mit(v) => {
                let _ = writeln!(s, "bc=mit\nvarsigma={}", v.as_i32());
            }
        }
        let _ = writeln!(s, "M={}\nR={}\nOmega={}\nbeta={}\nmu={}", p.mass, p.radius, p.omega, p.beta, p.mu);
        let _ = writeln!(s, "jmax={}/2\nimax={}", self.truncation.two_j_max, self.truncation.i_max);
        let _ = writeln!(s, "r-grid={}", self.r_grid.serialize());
        let _ = writeln!(s, "theta-grid={}", self.theta_grid.serialize());
        if let Some(out) = &self.output {
            let _ = writeln!(s, "out={}", out.display());
        }
        let _ = writeln!(s, "format={}", self.format.extension());
        if let Some(preset) = self.preset {
            let _ = writeln!(s, "preset={preset}");
        }
        if let Some(t) = self.threads {
            let _ = writeln!(s, "threads={t}");
        }
        let _ = writeln!(s, "serial={}\nraw={}", self.serial, self.raw);
        let _ = writeln!(s, "order={}\ncount={}", self.order, self.count);
        s
    }
}
