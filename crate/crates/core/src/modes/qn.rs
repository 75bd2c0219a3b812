use core::fmt;

use crate::{Error, Result};

/// Sign of the Minkowski energy of a mode.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EnergySign {
    Negative,
    Positive,
}

impl EnergySign {
    pub fn as_f64(self) -> f64 {
        match self {
            Self::Positive => 1.0,
            Self::Negative => -1.0,
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Self::Positive => 1,
            Self::Negative => -1,
        }
    }

    pub fn flip(self) -> Self {
        match self {
            Self::Positive => Self::Negative,
            Self::Negative => Self::Positive,
        }
    }

    pub fn from_i8(s: i8) -> Option<Self> {
        match s {
            1 => Some(Self::Positive),
            -1 => Some(Self::Negative),
            _ => None,
        }
    }
}

/// Discrete mode label `(E-sign, j, m_j, kappa, i)`.
///
/// Half-integers are stored doubled: `two_j = 2j`, `two_mj = 2 m_j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QuantumNumbers {
    esign: EnergySign,
    two_j: u32,
    two_mj: i32,
    kappa: i32,
    i: u32,
}

impl QuantumNumbers {
    pub fn new(esign: EnergySign, two_j: u32, two_mj: i32, kappa: i32, i: u32) -> Result<Self> {
        if two_j.is_multiple_of(2) {
            return Err(Error::InvalidQuantumNumbers("j must be a positive half-integer"));
        }
        if two_mj % 2 == 0 || two_mj.unsigned_abs() > two_j {
            return Err(Error::InvalidQuantumNumbers(
                "m_j must be a half-integer with |m_j| <= j",
            ));
        }
        if kappa == 0 {
            return Err(Error::InvalidQuantumNumbers("kappa = 0 has no solution"));
        }
        if kappa.unsigned_abs() != two_j.div_ceil(2) {
            return Err(Error::InvalidQuantumNumbers("|kappa| must equal j + 1/2"));
        }
        if i == 0 {
            return Err(Error::InvalidQuantumNumbers("radial index starts at 1"));
        }
        Ok(Self {
            esign,
            two_j,
            two_mj,
            kappa,
            i,
        })
    }

    pub fn esign(&self) -> EnergySign {
        self.esign
    }

    pub fn two_j(&self) -> u32 {
        self.two_j
    }

    pub fn two_mj(&self) -> i32 {
        self.two_mj
    }

    pub fn kappa(&self) -> i32 {
        self.kappa
    }

    pub fn radial_index(&self) -> u32 {
        self.i
    }

    pub fn j(&self) -> f64 {
        f64::from(self.two_j) / 2.0
    }

    pub fn m_j(&self) -> f64 {
        f64::from(self.two_mj) / 2.0
    }

    pub fn kappa_sign(&self) -> f64 {
        if self.kappa > 0 {
            1.0
        } else {
            -1.0
        }
    }

    /// Bessel order carried by the upper radial function.
    pub fn upper_order(&self) -> u32 {
        upper_order(self.kappa)
    }

    /// Bessel order carried by the lower radial function.
    pub fn lower_order(&self) -> u32 {
        lower_order(self.kappa)
    }

    /// Minkowski energy `E = +-sqrt(p^2 + M^2)`.
    pub fn energy(&self, p: f64, mass: f64) -> f64 {
        self.esign.as_f64() * libm::hypot(p, mass)
    }

    /// Charge-conjugate label `(-E, j, -m_j, -kappa, i)`.
    pub fn conjugate(&self) -> Self {
        Self {
            esign: self.esign.flip(),
            two_j: self.two_j,
            two_mj: -self.two_mj,
            kappa: -self.kappa,
            i: self.i,
        }
    }
}

/// `l_kappa`: `kappa - 1` for `kappa > 0`, `-kappa` otherwise.
pub(crate) fn upper_order(kappa: i32) -> u32 {
    if kappa > 0 {
        (kappa - 1) as u32
    } else {
        (-kappa) as u32
    }
}

/// `l-bar_kappa`: `kappa` for `kappa > 0`, `-kappa - 1` otherwise.
pub(crate) fn lower_order(kappa: i32) -> u32 {
    if kappa > 0 {
        kappa as u32
    } else {
        (-kappa - 1) as u32
    }
}

impl fmt::Display for QuantumNumbers {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = if self.esign == EnergySign::Positive { '+' } else { '-' };
        write!(
            f,
            "(E{s}, j={}/2, m_j={}/2, kappa={}, i={})",
            self.two_j, self.two_mj, self.kappa, self.i
        )
    }
}
