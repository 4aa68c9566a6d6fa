use std::fmt;
use std::str::FromStr;

use super::{HeckeModule, Labels};
use crate::error::Error;
use crate::linalg::{Rat, SpMat};
use crate::symgrp::Permutation;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Twist {
    /// π_i ↦ π_{n-i}
    Phi,
    /// Contravariant, π_i ↦ 1 - π_i on the dual.
    ThetaHatDual,
    /// Contravariant, π_i ↦ π_i on the dual.
    ChiDual,
}

impl FromStr for Twist {
    type Err = Error;

    fn from_str(s: &str) -> Result<Twist, Error> {
        match s {
            "phi" => Ok(Twist::Phi),
            "theta_hat_dual" => Ok(Twist::ThetaHatDual),
            "chi_dual" => Ok(Twist::ChiDual),
            _ => Err(Error::invalid(format!("unknown twist {s:?}"))),
        }
    }
}

impl fmt::Display for Twist {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Twist::Phi => "phi",
            Twist::ThetaHatDual => "theta_hat_dual",
            Twist::ChiDual => "chi_dual",
        })
    }
}

/// Twisted module; matrices are in the same basis (the dual basis for
/// contravariant twists). Under φ, permutation labels become γ ↦ w_0γw_0.
pub fn twist(m: &HeckeModule, which: Twist) -> HeckeModule {
    let d = m.dim();
    match which {
        Twist::Phi => {
            let action: Vec<SpMat> = m.matrices().iter().rev().cloned().collect();
            let labels = match m.labels() {
                Labels::Perms(p) => Labels::Perms(p.iter().map(Permutation::conj_longest).collect()),
                _ => Labels::None,
            };
            HeckeModule::from_parts_unchecked(m.n(), d, action, labels)
        }
        Twist::ChiDual => {
            let action = m.matrices().iter().map(SpMat::transpose).collect();
            HeckeModule::from_parts_unchecked(m.n(), d, action, Labels::None)
        }
        Twist::ThetaHatDual => {
            let id = SpMat::identity(d);
            let action = m.matrices().iter().map(|a| id.add_scaled(a, &Rat::int(-1)).transpose()).collect();
            HeckeModule::from_parts_unchecked(m.n(), d, action, Labels::None)
        }
    }
}
