//! Integral surgery presentations: homology of the surgered manifold, the
//! linking pairing on meridian classes, and the torsion linking form.
//!
//! A presentation is the symmetric linking matrix `B` of an `n`-component
//! framed link. The meridians `m_1, ..., m_n` generate `H_1(M; Z)` subject to
//! the relations given by the columns of `B`, so `H_1 = coker B`.
//!
//! Sign convention: for torsion classes `v`, `w` (in meridian coordinates)
//! the linking number is `lk(v, w) = -v^T B^{-1} w`, evaluated through any
//! rational solution of `B x = w`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::linalg::{
    check_symmetric, signature, smith_normal_form, IntMatrix, RationalSolver, SignatureTriple,
    SnfResult,
};
use crate::residue::ModClass;
use crate::Rational;

/// Integer vector of meridian coefficients, `sum v_i m_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MeridianClass(pub Vec<BigInt>);

impl MeridianClass {
    pub fn zero(n: usize) -> Self {
        Self(vec![BigInt::zero(); n])
    }

    pub fn from_ints(v: &[i64]) -> Self {
        Self(v.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.0
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(
            self.len(),
            other.len(),
            "meridian classes of different length"
        );
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self(self.0.iter().map(|a| a * k).collect())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologySummary {
    /// Invariant factors of `H_1` greater than one.
    pub invariant_factors: Vec<BigInt>,
    pub betti_1: usize,
    pub dim_h1_mod2: usize,
    pub torsion_order: BigInt,
    pub kernel_basis: Vec<Vec<BigInt>>,
}

/// Symmetric linking matrix of an integral surgery presentation.
///
/// Caches the Smith form and a rational solver for `B`, both of which are
/// needed by nearly every query.
#[derive(Clone, Debug)]
pub struct SurgeryPresentation {
    b: IntMatrix,
    snf: SnfResult,
    solver: RationalSolver,
    inertia: SignatureTriple,
}

impl PartialEq for SurgeryPresentation {
    fn eq(&self, other: &Self) -> bool {
        self.b == other.b
    }
}

impl Eq for SurgeryPresentation {}

impl SurgeryPresentation {
    pub fn new(b: IntMatrix) -> Result<Self> {
        check_symmetric(&b)?;
        let snf = smith_normal_form(&b);
        let solver = RationalSolver::new(&b);
        let inertia = signature(&b)?;
        Ok(Self {
            b,
            snf,
            solver,
            inertia,
        })
    }

    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Result<Self> {
        Self::new(IntMatrix::from_rows(rows)?)
    }

    /// The empty presentation of `S^3`.
    pub fn sphere() -> Self {
        Self::new(IntMatrix::zeros(0, 0)).expect("empty matrix is symmetric")
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.b
    }

    pub fn n(&self) -> usize {
        self.b.rows()
    }

    pub fn snf(&self) -> &SnfResult {
        &self.snf
    }

    pub fn solver(&self) -> &RationalSolver {
        &self.solver
    }

    /// Inertia of `B`, i.e. of the intersection form of the trace `W_L`.
    pub fn inertia(&self) -> SignatureTriple {
        self.inertia
    }

    pub(crate) fn check_len(&self, len: usize) -> Result<()> {
        if len != self.n() {
            return Err(Error::DimensionMismatch {
                expected: self.n(),
                found: len,
            });
        }
        Ok(())
    }

    /// Solves `B x = v`, failing with `NonTorsion` when `v` is not in the
    /// rational column space.
    pub fn solve(&self, v: &[BigInt]) -> Result<Vec<Rational>> {
        self.check_len(v.len())?;
        self.solver.solve(v).ok_or(Error::NonTorsion)
    }

    pub fn is_torsion(&self, v: &MeridianClass) -> Result<bool> {
        self.check_len(v.len())?;
        Ok(self.solver.in_column_space(&v.0))
    }

    /// True iff `v` lies in the integer column lattice `B Z^n`, i.e. the
    /// class is zero in `H_1`.
    pub fn is_null(&self, v: &MeridianClass) -> Result<bool> {
        self.check_len(v.len())?;
        let w = self.snf.u.mul_vec(&v.0)?;
        let d = self.snf.diagonal();
        Ok(w.iter().enumerate().all(|(i, wi)| match d.get(i) {
            Some(di) if di.is_zero() => wi.is_zero(),
            Some(di) => wi.is_multiple_of(di),
            None => wi.is_zero(),
        }))
    }

    /// Canonical representative of the class of `v` modulo `B Z^n`.
    ///
    /// Works in Smith coordinates `w = U v`: torsion coordinates are reduced
    /// into `[0, d_i)`, free coordinates are kept, and the result is lifted
    /// back with `U^{-1}`.
    pub fn reduce(&self, v: &MeridianClass) -> Result<MeridianClass> {
        self.check_len(v.len())?;
        let mut w = self.snf.u.mul_vec(&v.0)?;
        let d = self.snf.diagonal();
        for (i, wi) in w.iter_mut().enumerate() {
            match d.get(i) {
                Some(di) if !di.is_zero() => *wi = wi.mod_floor(di),
                _ => {}
            }
        }
        Ok(MeridianClass(self.snf.u_inv.mul_vec(&w)?))
    }

    pub fn homology_summary(&self) -> HomologySummary {
        let n = self.n();
        let diag = self.snf.diagonal();
        let rank = diag.iter().filter(|d| !d.is_zero()).count();
        let invariant_factors = self.snf.invariant_factors();
        let torsion_order = invariant_factors.iter().product::<BigInt>();
        let dim_h1_mod2 = diag.iter().filter(|d| d.is_even()).count();
        let kernel_basis = (rank..n).map(|c| self.snf.v.column(c)).collect();
        HomologySummary {
            invariant_factors,
            betti_1: n - rank,
            dim_h1_mod2,
            torsion_order,
            kernel_basis,
        }
    }

    /// `lk(v, w) = -v^T x` where `B x = w`; both classes must be torsion.
    pub fn meridian_pairing(&self, v: &MeridianClass, w: &MeridianClass) -> Result<Rational> {
        self.check_len(v.len())?;
        if !self.is_torsion(w)? {
            return Err(Error::NonTorsion);
        }
        let x = self.solve(&v.0)?;
        Ok(-dot(&w.0, &x))
    }

    /// Torsion linking form `l([v]) = lk(v, v) mod Z`.
    pub fn linking_form(&self, v: &MeridianClass) -> Result<ModClass> {
        Ok(ModClass::mod_one(self.meridian_pairing(v, v)?))
    }

    /// Representatives of every torsion class together with their linking
    /// form values, in Smith-coordinate odometer order (last factor fastest).
    pub fn enumerate_torsion(&self, cap: usize) -> Result<Vec<(MeridianClass, ModClass)>> {
        let order = self.homology_summary().torsion_order;
        if order > BigInt::from(cap) {
            return Err(Error::CapExceeded {
                order: order.to_string(),
                cap,
            });
        }
        let n = self.n();
        let diag = self.snf.diagonal();
        // coordinates that carry torsion: d_i > 1
        let slots: Vec<(usize, u64)> = diag
            .iter()
            .enumerate()
            .filter(|(_, d)| **d > BigInt::one())
            .map(|(i, d)| (i, d.to_u64().expect("bounded by cap")))
            .collect();
        let total = order.to_usize().expect("bounded by cap");
        let mut out = Vec::with_capacity(total);
        let mut digits = vec![0u64; slots.len()];
        for _ in 0..total {
            let mut w = vec![BigInt::zero(); n];
            for (&(i, _), &e) in slots.iter().zip(&digits) {
                w[i] = BigInt::from(e);
            }
            let v = MeridianClass(self.snf.u_inv.mul_vec(&w)?);
            let l = self.linking_form(&v)?;
            out.push((v, l));
            for k in (0..digits.len()).rev() {
                digits[k] += 1;
                if digits[k] < slots[k].1 {
                    break;
                }
                digits[k] = 0;
            }
        }
        Ok(out)
    }
}

pub(crate) fn dot(a: &[BigInt], x: &[Rational]) -> Rational {
    a.iter()
        .zip(x)
        .filter(|(ai, _)| !ai.is_zero())
        .map(|(ai, xi)| xi * Rational::from_integer(ai.clone()))
        .sum()
}

/// `gcd` of absolute values, zero for an empty iterator.
pub(crate) fn gcd_all<'a>(it: impl IntoIterator<Item = &'a BigInt>) -> BigInt {
    it.into_iter().fold(BigInt::zero(), |g, x| g.gcd(&x.abs()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(rows: &[Vec<i64>]) -> SurgeryPresentation {
        SurgeryPresentation::from_rows(rows).unwrap()
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn mc(v: &[i64]) -> MeridianClass {
        MeridianClass::from_ints(v)
    }

    #[test]
    fn homology_examples() {
        let h = p(&[vec![2]]).homology_summary();
        assert_eq!(h.invariant_factors, vec![BigInt::from(2)]);
        assert_eq!((h.betti_1, h.dim_h1_mod2), (0, 1));

        let h = p(&[vec![0]]).homology_summary();
        assert!(h.invariant_factors.is_empty());
        assert_eq!((h.betti_1, h.dim_h1_mod2), (1, 1));
        assert_eq!(h.torsion_order, BigInt::one());

        let h = p(&[vec![2, 1], vec![1, 2]]).homology_summary();
        assert_eq!(h.invariant_factors, vec![BigInt::from(3)]);
        assert_eq!((h.betti_1, h.dim_h1_mod2), (0, 0));

        let h = SurgeryPresentation::sphere().homology_summary();
        assert_eq!(h.torsion_order, BigInt::one());
        assert_eq!((h.betti_1, h.dim_h1_mod2), (0, 0));
    }

    #[test]
    fn pairing_examples() {
        let b2 = p(&[vec![2]]);
        assert_eq!(b2.meridian_pairing(&mc(&[1]), &mc(&[1])).unwrap(), q(-1, 2));
        assert_eq!(b2.meridian_pairing(&mc(&[2]), &mc(&[1])).unwrap(), q(-1, 1));
        assert_eq!(
            p(&[vec![0]]).meridian_pairing(&mc(&[1]), &mc(&[1])),
            Err(Error::NonTorsion)
        );
    }

    #[test]
    fn linking_form_examples() {
        assert_eq!(
            p(&[vec![4]]).linking_form(&mc(&[1])).unwrap().value(),
            &q(3, 4)
        );
        assert!(p(&[vec![2]]).linking_form(&mc(&[2])).unwrap().is_zero());
        assert_eq!(
            p(&[vec![3]]).linking_form(&mc(&[2])).unwrap().value(),
            &q(2, 3)
        );
    }

    #[test]
    fn enumerate_examples() {
        let vals = |b: &SurgeryPresentation| -> Vec<Rational> {
            b.enumerate_torsion(10)
                .unwrap()
                .into_iter()
                .map(|(_, l)| l.value().clone())
                .collect()
        };
        assert_eq!(vals(&p(&[vec![3]])), vec![q(0, 1), q(2, 3), q(2, 3)]);
        assert_eq!(vals(&p(&[vec![2]])), vec![q(0, 1), q(1, 2)]);
        let s3 = SurgeryPresentation::sphere().enumerate_torsion(10).unwrap();
        assert_eq!(s3.len(), 1);
        assert!(s3[0].0.is_empty() && s3[0].1.is_zero());
    }

    #[test]
    fn cap_is_strict() {
        let err = p(&[vec![11]]).enumerate_torsion(10).unwrap_err();
        assert!(matches!(err, Error::CapExceeded { .. }));
        assert_eq!(p(&[vec![10]]).enumerate_torsion(10).unwrap().len(), 10);
    }

    #[test]
    fn reduce_and_null() {
        let b = p(&[vec![2, 1], vec![1, 2]]);
        assert!(b.is_null(&mc(&[2, 1])).unwrap());
        assert!(!b.is_null(&mc(&[1, 0])).unwrap());
        let r1 = b.reduce(&mc(&[1, 0])).unwrap();
        let r2 = b.reduce(&mc(&[3, 1])).unwrap();
        assert_eq!(r1, r2);
        let s1 = p(&[vec![0]]);
        assert_eq!(s1.reduce(&mc(&[5])).unwrap(), mc(&[5]));
    }

    #[test]
    fn asymmetric_rejected() {
        assert!(matches!(
            SurgeryPresentation::from_rows(&[vec![1, 2], vec![0, 1]]),
            Err(Error::NotSymmetric { .. })
        ));
    }
}
