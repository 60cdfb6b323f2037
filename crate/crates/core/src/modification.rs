//! Variation of `p1` under local modifications of a torsion combing near a
//! rationally null-homologous framed link `L`.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Modification {
    /// Flip along `L` with direction `eta`; `lk_euler = lk(L, L(Z in X^perp))`,
    /// `lk_par = lk(L, L_par)`.
    D {
        eta: i64,
        lk_euler: Rational,
        lk_par: Rational,
    },
    /// Flip along `L` when `Z` extends as a global section of `X^perp`.
    GlobalZ { lk_par: Rational },
    /// Rotating `Z` `r` times along one component.
    RTwist { r: BigInt, eta: i64 },
    /// `k` half-twists of a two-fold satellite.
    HalfTwist { k: BigInt },
}

fn check_eta(eta: i64) -> Result<()> {
    match eta {
        1 | -1 => Ok(()),
        _ => Err(Error::BadEta(eta)),
    }
}

impl Modification {
    pub fn delta(&self) -> Result<Rational> {
        let four = Rational::from_integer(4.into());
        let int = |x: &BigInt| Rational::from_integer(x.clone());
        Ok(match self {
            Modification::D {
                eta,
                lk_euler,
                lk_par,
            } => {
                check_eta(*eta)?;
                four * (Rational::from_integer((*eta).into()) * lk_euler - lk_par)
            }
            Modification::GlobalZ { lk_par } => -four * lk_par,
            Modification::RTwist { r, eta } => {
                check_eta(*eta)?;
                four * int(&(BigInt::from(*eta) * r))
            }
            Modification::HalfTwist { k } => -four * int(k),
        })
    }
}

/// `p1` of the modified combing.
pub fn apply_modification(p1: &Rational, kind: &Modification) -> Result<Rational> {
    Ok(p1 + kind.delta()?)
}
