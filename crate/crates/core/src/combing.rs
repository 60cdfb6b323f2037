//! Combings on a surgery presentation.
//!
//! A combing is encoded by a characteristic vector `c` (the `c_1`
//! coefficients of an almost-complex structure on the trace `W_L`, with
//! `c_i = B_ii mod 2`) and an integer offset `j` recording the `pi_3(S^2) = Z`
//! action. Its Gompf invariant is
//!
//! ```text
//! theta_G(c) = c^T B^{-1} c - 2 (n + 1) - 3 sigma(B)
//! ```
//!
//! and `p1 = theta_G + 4 j`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::surgery::{dot, gcd_all, MeridianClass, SurgeryPresentation};
use crate::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CombingSpec {
    pub presentation: SurgeryPresentation,
    pub c: Vec<BigInt>,
    pub gamma_offset: BigInt,
}

impl CombingSpec {
    /// Validates the characteristic condition before building.
    pub fn new(
        presentation: SurgeryPresentation,
        c: Vec<BigInt>,
        gamma_offset: BigInt,
    ) -> Result<Self> {
        validate_combing(&presentation, &c)?;
        Ok(Self {
            presentation,
            c,
            gamma_offset,
        })
    }

    pub fn from_ints(
        presentation: SurgeryPresentation,
        c: &[i64],
        gamma_offset: i64,
    ) -> Result<Self> {
        Self::new(
            presentation,
            c.iter().map(|&x| BigInt::from(x)).collect(),
            BigInt::from(gamma_offset),
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EulerClassInfo {
    pub class_vector: MeridianClass,
    pub is_torsion: bool,
    pub is_zero: bool,
}

pub fn validate_combing(p: &SurgeryPresentation, c: &[BigInt]) -> Result<()> {
    p.check_len(c.len())?;
    let b = p.matrix();
    match (0..c.len()).find(|&i| c[i].is_odd() != b[(i, i)].is_odd()) {
        Some(i) => Err(Error::NotCharacteristic(i)),
        None => Ok(()),
    }
}

pub fn euler_class(p: &SurgeryPresentation, c: &[BigInt]) -> Result<EulerClassInfo> {
    validate_combing(p, c)?;
    let class_vector = MeridianClass(c.to_vec());
    let is_torsion = p.is_torsion(&class_vector)?;
    let is_zero = is_torsion && p.is_null(&class_vector)?;
    Ok(EulerClassInfo {
        class_vector,
        is_torsion,
        is_zero,
    })
}

/// `theta_G` without the characteristic check; `c` must be torsion.
pub(crate) fn theta_g_unchecked(p: &SurgeryPresentation, c: &[BigInt]) -> Result<Rational> {
    let x = p.solve(c)?;
    Ok(dot(c, &x) + theta_constant(p))
}

/// `-2 chi(W_L) - 3 sigma(W_L)` with `chi(W_L) = n + 1`.
pub(crate) fn theta_constant(p: &SurgeryPresentation) -> Rational {
    let chi = p.n() as i64 + 1;
    Rational::from_integer(BigInt::from(-2 * chi - 3 * p.inertia().value()))
}

pub fn theta_g(p: &SurgeryPresentation, c: &[BigInt]) -> Result<Rational> {
    validate_combing(p, c)?;
    theta_g_unchecked(p, c)
}

pub fn p1(x: &CombingSpec) -> Result<Rational> {
    let theta = theta_g(&x.presentation, &x.c)?;
    Ok(theta + Rational::from_integer(BigInt::from(4) * &x.gamma_offset))
}

/// Acts by `gamma^t`.
pub fn gamma(x: &CombingSpec, t: i64) -> CombingSpec {
    CombingSpec {
        gamma_offset: &x.gamma_offset + t,
        ..x.clone()
    }
}

/// Same Spin^c structure iff `c - c'` lies in `2 B Z^n`.
pub fn spin_c_equal(p: &SurgeryPresentation, c: &[BigInt], c2: &[BigInt]) -> Result<bool> {
    validate_combing(p, c)?;
    validate_combing(p, c2)?;
    // characteristic vectors agree mod 2, so the difference halves exactly
    let half: Vec<BigInt> = c.iter().zip(c2).map(|(a, b)| (a - b) / 2).collect();
    p.is_null(&MeridianClass(half))
}

pub fn combing_equal(x: &CombingSpec, y: &CombingSpec) -> Result<bool> {
    if x.presentation != y.presentation {
        return Err(Error::DimensionMismatch {
            expected: x.presentation.n(),
            found: y.presentation.n(),
        });
    }
    let (px, py) = (p1(x)?, p1(y)?);
    Ok(spin_c_equal(&x.presentation, &x.c, &y.c)? && px == py)
}

/// Generator of the subgroup of `Z` by which the `gamma` orbit is collapsed:
/// `gcd |c . z|` over a basis `z` of `ker B`. Zero means a free action.
pub fn gamma_orbit_modulus(p: &SurgeryPresentation, c: &[BigInt]) -> Result<BigInt> {
    validate_combing(p, c)?;
    let pairings: Vec<BigInt> = p
        .homology_summary()
        .kernel_basis
        .iter()
        .map(|z| z.iter().zip(c).map(|(a, b)| a * b).sum())
        .collect();
    Ok(gcd_all(&pairings))
}

/// Heegaard Floer absolute grading `(2 + p1) / 4`.
pub fn hf_grading(x: &CombingSpec) -> Result<Rational> {
    let p = p1(x)?;
    Ok((p + Rational::from_integer(2.into())) / Rational::from_integer(4.into()))
}

/// Combing with zero Euler class: `c_ref = B u` where `B u = diag(B)` over
/// `F_2`. Such a `u` always exists because the diagonal of a symmetric form
/// over `F_2` lies in its image.
pub fn reference_parallelization(p: &SurgeryPresentation) -> CombingSpec {
    let u = wu_vector(p);
    let c = p.matrix().mul_vec(&u).expect("square matrix");
    CombingSpec {
        presentation: p.clone(),
        c,
        gamma_offset: BigInt::zero(),
    }
}

/// Solves `B u = diag(B)` over `F_2`, free variables zero.
fn wu_vector(p: &SurgeryPresentation) -> Vec<BigInt> {
    let n = p.n();
    let b = p.matrix();
    // augmented rows over F_2
    let mut rows: Vec<Vec<bool>> = (0..n)
        .map(|i| {
            let mut r: Vec<bool> = (0..n).map(|j| b[(i, j)].is_odd()).collect();
            r.push(b[(i, i)].is_odd());
            r
        })
        .collect();
    let mut pivots = Vec::new();
    let mut lead = 0;
    for col in 0..n {
        let Some(found) = (lead..n).find(|&i| rows[i][col]) else {
            continue;
        };
        rows.swap(lead, found);
        for i in 0..n {
            if i != lead && rows[i][col] {
                let src = rows[lead].clone();
                for (x, s) in rows[i].iter_mut().zip(src) {
                    *x ^= s;
                }
            }
        }
        pivots.push(col);
        lead += 1;
    }
    debug_assert!(
        rows[lead..].iter().all(|r| !r[n]),
        "diagonal must lie in the F_2 image of a symmetric matrix"
    );
    let mut u = vec![BigInt::zero(); n];
    for (i, &col) in pivots.iter().enumerate() {
        if rows[i][n] {
            u[col] = BigInt::one();
        }
    }
    u
}

/// Checks `p1(tau) - dim H_1(M; Z/2) - b_1(M)` is even for the reference
/// parallelization.
pub fn parity_check(p: &SurgeryPresentation) -> bool {
    let reference = reference_parallelization(p);
    let Ok(value) = p1(&reference) else {
        return false;
    };
    if !value.is_integer() {
        return false;
    }
    let h = p.homology_summary();
    let total = value.to_integer() - BigInt::from(h.dim_h1_mod2) - BigInt::from(h.betti_1);
    total.is_even()
}

/// Change of `p1` under reparametrizing a parallelization by a map
/// `M -> SO(3)` of degree `deg`.
pub fn reparam_delta(deg: i64) -> i64 {
    2 * deg
}

/// Linking number `lk(L_{Y=X}, L_{Y=-X})` for the same reparametrization,
/// where `Y` is the reparametrized combing.
pub fn reparam_lk(deg: i64) -> Rational {
    Rational::new(BigInt::from(-deg), BigInt::from(2))
}

/// Adds a split unknot with framing `sign` and coefficient `c0`, shifting the
/// gamma offset so that `p1` is unchanged.
pub fn stabilize(x: &CombingSpec, sign: i64, c0: &BigInt) -> Result<CombingSpec> {
    if sign != 1 && sign != -1 {
        return Err(Error::BadSign(sign));
    }
    if c0.is_even() {
        return Err(Error::EvenCoefficient(c0.to_string()));
    }
    validate_combing(&x.presentation, &x.c)?;
    let delta = stabilization_theta_delta(sign, c0);
    let (q, r) = delta.div_rem(&BigInt::from(4));
    debug_assert!(r.is_zero(), "odd squares are 1 mod 8");
    let b = x
        .presentation
        .matrix()
        .direct_sum(&crate::linalg::IntMatrix::diagonal(&[sign]));
    let mut c = x.c.clone();
    c.push(c0.clone());
    Ok(CombingSpec {
        presentation: SurgeryPresentation::new(b)?,
        c,
        gamma_offset: &x.gamma_offset - q,
    })
}

/// `sign * c0^2 - 2 - 3 sign`.
pub fn stabilization_theta_delta(sign: i64, c0: &BigInt) -> BigInt {
    BigInt::from(sign) * c0 * c0 - 2 - 3 * sign
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(rows: &[Vec<i64>]) -> SurgeryPresentation {
        SurgeryPresentation::from_rows(rows).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| x.into()).collect()
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn spec(b: &[Vec<i64>], c: &[i64], j: i64) -> CombingSpec {
        CombingSpec::from_ints(p(b), c, j).unwrap()
    }

    fn s3(j: i64) -> CombingSpec {
        CombingSpec::from_ints(SurgeryPresentation::sphere(), &[], j).unwrap()
    }

    #[test]
    fn validate_examples() {
        assert!(validate_combing(&p(&[vec![3]]), &ints(&[1])).is_ok());
        assert_eq!(
            validate_combing(&p(&[vec![2]]), &ints(&[1])),
            Err(Error::NotCharacteristic(0))
        );
        assert!(validate_combing(&SurgeryPresentation::sphere(), &[]).is_ok());
        assert_eq!(
            validate_combing(&p(&[vec![2, 1], vec![1, 3]]), &ints(&[0, 0])),
            Err(Error::NotCharacteristic(1))
        );
    }

    #[test]
    fn euler_examples() {
        let e = euler_class(&p(&[vec![2]]), &ints(&[2])).unwrap();
        assert!(e.is_zero && e.is_torsion);
        let e = euler_class(&p(&[vec![0]]), &ints(&[2])).unwrap();
        assert!(!e.is_zero && !e.is_torsion);
        let e = euler_class(&SurgeryPresentation::sphere(), &[]).unwrap();
        assert!(e.is_zero);
        // torsion but nonzero: the odd class on RP^3 with B = [4]
        let e = euler_class(&p(&[vec![4]]), &ints(&[2])).unwrap();
        assert!(e.is_torsion && !e.is_zero);
    }

    #[test]
    fn theta_examples() {
        assert_eq!(
            theta_g(&SurgeryPresentation::sphere(), &[]).unwrap(),
            q(-2, 1)
        );
        assert_eq!(theta_g(&p(&[vec![1]]), &ints(&[1])).unwrap(), q(-6, 1));
        assert_eq!(theta_g(&p(&[vec![2]]), &ints(&[2])).unwrap(), q(-5, 1));
        assert_eq!(theta_g(&p(&[vec![0]]), &ints(&[2])), Err(Error::NonTorsion));
        assert_eq!(
            theta_g(&p(&[vec![2]]), &ints(&[1])),
            Err(Error::NotCharacteristic(0))
        );
    }

    #[test]
    fn p1_examples() {
        assert_eq!(p1(&s3(1)).unwrap(), q(2, 1));
        assert_eq!(p1(&spec(&[vec![2]], &[0], 0)).unwrap(), q(-7, 1));
        assert_eq!(p1(&spec(&[vec![1]], &[3], 0)).unwrap(), q(2, 1));
    }

    #[test]
    fn gamma_examples() {
        let x = s3(0);
        let y = gamma(&x, 3);
        assert_eq!(y.gamma_offset, BigInt::from(3));
        assert_eq!(p1(&y).unwrap(), q(10, 1));
        assert_eq!(gamma(&x, 0), x);
        assert_eq!(gamma(&gamma(&x, -1), 1), x);
    }

    #[test]
    fn spin_c_examples() {
        let b = p(&[vec![2]]);
        assert!(spin_c_equal(&b, &ints(&[0]), &ints(&[4])).unwrap());
        assert!(!spin_c_equal(&b, &ints(&[0]), &ints(&[2])).unwrap());
        assert!(spin_c_equal(&b, &ints(&[2]), &ints(&[2])).unwrap());
        assert_eq!(
            spin_c_equal(&b, &ints(&[0]), &ints(&[1])),
            Err(Error::NotCharacteristic(0))
        );
    }

    #[test]
    fn combing_equal_examples() {
        let a = spec(&[vec![2]], &[0], 1);
        let b = spec(&[vec![2]], &[4], -1);
        assert!(combing_equal(&a, &b).unwrap());
        assert!(!combing_equal(&spec(&[vec![2]], &[0], 0), &a).unwrap());
        assert!(combing_equal(&a, &a).unwrap());
        let nt = spec(&[vec![0]], &[2], 0);
        assert_eq!(combing_equal(&nt, &nt), Err(Error::NonTorsion));
    }

    #[test]
    fn orbit_modulus_examples() {
        assert_eq!(
            gamma_orbit_modulus(&p(&[vec![0]]), &ints(&[0])).unwrap(),
            BigInt::zero()
        );
        assert_eq!(
            gamma_orbit_modulus(&p(&[vec![0]]), &ints(&[2])).unwrap(),
            BigInt::from(2)
        );
        assert_eq!(
            gamma_orbit_modulus(&p(&[vec![2]]), &ints(&[0])).unwrap(),
            BigInt::zero()
        );
        assert_eq!(
            gamma_orbit_modulus(&p(&[vec![0, 0], vec![0, 0]]), &ints(&[4, -6])).unwrap(),
            BigInt::from(2)
        );
    }

    #[test]
    fn grading_examples() {
        assert_eq!(hf_grading(&s3(0)).unwrap(), q(0, 1));
        assert_eq!(hf_grading(&s3(1)).unwrap(), q(1, 1));
        assert_eq!(hf_grading(&spec(&[vec![2]], &[2], 0)).unwrap(), q(-3, 4));
    }

    #[test]
    fn reference_examples() {
        let r = reference_parallelization(&p(&[vec![2]]));
        assert_eq!(r.c, ints(&[0]));
        assert_eq!(p1(&r).unwrap(), q(-7, 1));
        let r = reference_parallelization(&p(&[vec![1]]));
        assert_eq!(r.c, ints(&[1]));
        assert_eq!(p1(&r).unwrap(), q(-6, 1));
        let r = reference_parallelization(&p(&[vec![2, 1], vec![1, 2]]));
        assert_eq!(r.c, ints(&[0, 0]));
        assert_eq!(p1(&r).unwrap(), q(-12, 1));
        // odd off-diagonal coupling: diag (1, 0) needs u = (0, 1)
        let b = p(&[vec![1, 1], vec![1, 0]]);
        let r = reference_parallelization(&b);
        assert!(euler_class(&b, &r.c).unwrap().is_zero);
    }

    #[test]
    fn parity_examples() {
        assert!(parity_check(&p(&[vec![2]])));
        assert!(parity_check(&SurgeryPresentation::sphere()));
        assert!(parity_check(&p(&[vec![0]])));
        assert_eq!(
            p1(&reference_parallelization(&p(&[vec![0]]))).unwrap(),
            q(-4, 1)
        );
    }

    #[test]
    fn reparam_examples() {
        assert_eq!(reparam_delta(2), 4);
        assert_eq!(reparam_delta(0), 0);
        assert_eq!(reparam_delta(-3), -6);
        assert_eq!(reparam_lk(2), q(-1, 1));
        // lk is measured from the reparametrized side, so p1 moves by -4 lk
        assert_eq!(
            Rational::from_integer(reparam_delta(3).into()),
            -reparam_lk(3) * Rational::from_integer(4.into())
        );
    }

    #[test]
    fn stabilize_examples() {
        let x = s3(0);
        let y = stabilize(&x, 1, &BigInt::from(1)).unwrap();
        assert_eq!(y.presentation, p(&[vec![1]]));
        assert_eq!(y.c, ints(&[1]));
        assert_eq!(y.gamma_offset, BigInt::from(1));
        assert_eq!(p1(&y).unwrap(), q(-2, 1));

        let y = stabilize(&x, -1, &BigInt::from(1)).unwrap();
        assert_eq!(y.gamma_offset, BigInt::zero());
        let y = stabilize(&x, 1, &BigInt::from(3)).unwrap();
        assert_eq!(y.gamma_offset, BigInt::from(-1));
        assert_eq!(p1(&y).unwrap(), q(-2, 1));

        assert!(matches!(
            stabilize(&x, 1, &BigInt::from(2)),
            Err(Error::EvenCoefficient(_))
        ));
        assert_eq!(stabilize(&x, 0, &BigInt::from(1)), Err(Error::BadSign(0)));
    }

    #[test]
    fn stabilization_deltas() {
        assert_eq!(
            stabilization_theta_delta(1, &BigInt::from(1)),
            BigInt::from(-4)
        );
        assert_eq!(
            stabilization_theta_delta(1, &BigInt::from(3)),
            BigInt::from(4)
        );
        assert_eq!(
            stabilization_theta_delta(-1, &BigInt::from(1)),
            BigInt::zero()
        );
    }
}
