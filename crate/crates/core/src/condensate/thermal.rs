use crate::modes::EnergySign;

/// Fermi-Dirac occupation `1 / (1 + e^x)`, evaluated without overflow.
#[inline]
pub fn fermi(x: f64) -> f64 {
    if x > 0.0 {
        let e = libm::exp(-x);
        e / (1.0 + e)
    } else {
        1.0 / (1.0 + libm::exp(x))
    }
}

/// `w(E_tilde) = theta(E)/2 [tanh(beta(E_tilde - mu)/2) + tanh(beta(E_tilde + mu)/2)]`.
#[inline]
pub fn thermal_weight(e_tilde: f64, esign: EnergySign, beta: f64, mu: f64) -> f64 {
    match esign {
        EnergySign::Negative => 0.0,
        EnergySign::Positive => {
            0.5 * (libm::tanh(0.5 * beta * (e_tilde - mu)) + libm::tanh(0.5 * beta * (e_tilde + mu)))
        }
    }
}

/// Vacuum-subtracted weight `w'(E_tilde) = w(E_tilde) - theta(E)`, written
/// as `-theta(E)[n(beta(E_tilde - mu)) + n(beta(E_tilde + mu))]` with
/// Fermi-Dirac `n`.
#[inline]
pub fn thermal_weight_subtracted(e_tilde: f64, esign: EnergySign, beta: f64, mu: f64) -> f64 {
    match esign {
        EnergySign::Negative => 0.0,
        EnergySign::Positive => -(fermi(beta * (e_tilde - mu)) + fermi(beta * (e_tilde + mu))),
    }
}
