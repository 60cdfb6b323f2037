//! `Theta(M, X) = 6 lambda(M) + p1(X) / 4` for combed rational homology
//! spheres. `lambda` is the Casson-Walker invariant in the normalization that
//! agrees with Casson's on integral homology spheres; it is always supplied
//! by the caller.

use crate::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaInput {
    pub lambda: Rational,
    pub p1: Rational,
}

pub fn theta_invariant(input: &ThetaInput) -> Rational {
    Rational::from_integer(6.into()) * &input.lambda + &input.p1 / Rational::from_integer(4.into())
}

/// `Theta(M, Y) - Theta(M, X)` for combings differing by linking `delta_lk`.
pub fn theta_variation(delta_lk: &Rational) -> Rational {
    delta_lk.clone()
}
