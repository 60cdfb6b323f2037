//! Exact rational solves through a reusable row-echelon factorization.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::IntMatrix;
use crate::Rational;

/// Reduced row-echelon data for a fixed integer matrix `A`.
///
/// Stores the transform `P` with `P * A = R` (R in reduced row-echelon form)
/// so that repeated right-hand sides cost one matrix-vector product each.
#[derive(Clone, Debug)]
pub struct RationalSolver {
    rows: usize,
    cols: usize,
    transform: Vec<Vec<Rational>>,
    echelon: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

impl RationalSolver {
    pub fn new(a: &IntMatrix) -> Self {
        let rows = a.rows();
        let cols = a.cols();
        let mut r: Vec<Vec<Rational>> = (0..rows)
            .map(|i| {
                a.row(i)
                    .iter()
                    .cloned()
                    .map(Rational::from_integer)
                    .collect()
            })
            .collect();
        let mut p: Vec<Vec<Rational>> = (0..rows)
            .map(|i| {
                (0..rows)
                    .map(|j| {
                        if i == j {
                            Rational::one()
                        } else {
                            Rational::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        let mut pivots = Vec::new();
        let mut lead = 0;
        for col in 0..cols {
            if lead == rows {
                break;
            }
            let Some(found) = (lead..rows).find(|&i| !r[i][col].is_zero()) else {
                continue;
            };
            r.swap(lead, found);
            p.swap(lead, found);
            let inv = r[lead][col].recip();
            for x in r[lead].iter_mut().chain(p[lead].iter_mut()) {
                *x *= &inv;
            }
            for i in 0..rows {
                if i == lead || r[i][col].is_zero() {
                    continue;
                }
                let f = r[i][col].clone();
                for j in 0..cols {
                    let d = &f * &r[lead][j];
                    r[i][j] -= d;
                }
                for j in 0..rows {
                    let d = &f * &p[lead][j];
                    p[i][j] -= d;
                }
            }
            pivots.push(col);
            lead += 1;
        }
        Self {
            rows,
            cols,
            transform: p,
            echelon: r,
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// One solution of `A x = b`, or `None` if `b` is outside the column space.
    /// Free variables are set to zero.
    pub fn solve(&self, b: &[BigInt]) -> Option<Vec<Rational>> {
        assert_eq!(b.len(), self.rows, "right-hand side has wrong length");
        let pb: Vec<Rational> = self
            .transform
            .iter()
            .map(|row| {
                row.iter()
                    .zip(b)
                    .filter(|(_, bi)| !bi.is_zero())
                    .map(|(p, bi)| p * Rational::from_integer(bi.clone()))
                    .sum()
            })
            .collect();
        if pb[self.rank()..].iter().any(|x| !x.is_zero()) {
            return None;
        }
        let mut x = vec![Rational::zero(); self.cols];
        for (i, &c) in self.pivots.iter().enumerate() {
            x[c] = pb[i].clone();
        }
        Some(x)
    }

    pub fn in_column_space(&self, b: &[BigInt]) -> bool {
        self.solve(b).is_some()
    }

    /// Basis of the rational kernel, one vector per free column.
    pub fn kernel(&self) -> Vec<Vec<Rational>> {
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|c| !self.pivots.contains(c)) {
            let mut z = vec![Rational::zero(); self.cols];
            z[free] = Rational::one();
            for (i, &c) in self.pivots.iter().enumerate() {
                z[c] = -self.echelon[i][free].clone();
            }
            basis.push(z);
        }
        basis
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalSolution {
    pub x: Vec<Rational>,
    pub kernel: Vec<Vec<Rational>>,
}

/// Solves `A x = b` exactly. Returns `None` when `b` is not in the rational
/// column space of `A`.
pub fn solve_rational(a: &IntMatrix, b: &[BigInt]) -> Option<RationalSolution> {
    let solver = RationalSolver::new(a);
    let x = solver.solve(b)?;
    Some(RationalSolution {
        x,
        kernel: solver.kernel(),
    })
}
