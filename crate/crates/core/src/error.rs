use thiserror::Error;

/// Errors raised by the numerical core.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("unsupported order {order}: maximum configured order is {max}")]
    UnsupportedOrder { order: u32, max: u32 },

    #[error("argument {name} = {value} is outside the domain: {reason}")]
    Domain {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },

    #[error("invalid quantum numbers: {0}")]
    InvalidQuantumNumbers(&'static str),

    #[error("faster-than-light boundary: Omega*R = {omega_r} must be < 1")]
    FasterThanLight { omega_r: f64 },

    #[error("root solver failed for {context} in [{lo}, {hi}]")]
    SolverFailure {
        context: &'static str,
        lo: f64,
        hi: f64,
    },

    #[error("inconsistent normalization for 2j={two_j}, kappa={kappa}, pR={x}: {reason}")]
    Normalization {
        two_j: u32,
        kappa: i32,
        x: f64,
        reason: &'static str,
    },

    #[error("truncation 2j_max={two_j_max}, i_max={i_max} is too small (need j_max >= 3/2, i_max >= 1)")]
    Truncation { two_j_max: u32, i_max: u32 },
}

pub type Result<T> = core::result::Result<T, Error>;

pub(crate) fn domain(name: &'static str, value: f64, reason: &'static str) -> Error {
    Error::Domain {
        name,
        value,
        reason,
    }
}
