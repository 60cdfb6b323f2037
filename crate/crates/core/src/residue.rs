use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::Rational;

/// An element of `Q / mZ` for a positive rational modulus `m`, held by its
/// canonical representative in `[0, m)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ModClass {
    value: Rational,
    modulus: Rational,
}

impl ModClass {
    pub fn new(value: Rational, modulus: Rational) -> Self {
        assert!(modulus.is_positive(), "modulus must be positive");
        let q = (&value / &modulus).floor();
        let value = value - q * &modulus;
        Self { value, modulus }
    }

    /// Class in `Q/Z`.
    pub fn mod_one(value: Rational) -> Self {
        Self::new(value, Rational::from_integer(1.into()))
    }

    /// Class in `Q/4Z`.
    pub fn mod_four(value: Rational) -> Self {
        Self::new(value, Rational::from_integer(4.into()))
    }

    pub fn value(&self) -> &Rational {
        &self.value
    }

    pub fn modulus(&self) -> &Rational {
        &self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }
}

/// Formats a rational as `p/q`, or `p` when the denominator is one.
pub fn fmt_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for ModClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} (mod {})",
            fmt_rational(&self.value),
            fmt_rational(&self.modulus)
        )
    }
}
