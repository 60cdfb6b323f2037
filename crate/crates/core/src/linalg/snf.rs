//! Smith normal form over the integers with unimodular transformations.
//!
//! For any `m x n` integer matrix `A` we compute `U`, `V` unimodular with
//! `U * A * V = D`, where `D` is diagonal with `d_1 | d_2 | ... | d_r` and
//! zeros afterwards. The inverse of `U` is tracked alongside so that classes
//! in `coker A` can be lifted back from Smith coordinates without a solve.
//!
//! Pivoting always takes the entry of smallest absolute value in the active
//! block, ties broken by lowest row and then lowest column, so the
//! transformations are reproducible.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::IntMatrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfResult {
    pub u: IntMatrix,
    pub v: IntMatrix,
    pub d: IntMatrix,
    /// Inverse of `u`, so that `A = u_inv * D * v^-1`.
    pub u_inv: IntMatrix,
}

impl SnfResult {
    /// Diagonal entries `d_1, ..., d_min(m, n)`, zeros included.
    pub fn diagonal(&self) -> Vec<BigInt> {
        self.d.diagonal_entries()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|d| !d.is_zero()).count()
    }

    /// Invariant factors greater than one.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        self.diagonal()
            .into_iter()
            .filter(|d| *d > BigInt::from(1))
            .collect()
    }
}

struct Reducer {
    a: IntMatrix,
    u: IntMatrix,
    u_inv: IntMatrix,
    v: IntMatrix,
}

impl Reducer {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        self.u.swap_rows(i, j);
        self.u_inv.swap_cols(i, j);
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        self.v.swap_cols(i, j);
    }

    /// row[dst] += f * row[src]
    fn add_row(&mut self, dst: usize, src: usize, f: &BigInt) {
        self.a.add_row_multiple(dst, src, f);
        self.u.add_row_multiple(dst, src, f);
        // (E U)^-1 = U^-1 E^-1, and E^-1 subtracts: col[src] -= f * col[dst]
        self.u_inv.add_col_multiple(src, dst, &-f);
    }

    /// col[dst] += f * col[src]
    fn add_col(&mut self, dst: usize, src: usize, f: &BigInt) {
        self.a.add_col_multiple(dst, src, f);
        self.v.add_col_multiple(dst, src, f);
    }

    fn negate_row(&mut self, r: usize) {
        self.a.negate_row(r);
        self.u.negate_row(r);
        self.u_inv.negate_col(r);
    }

    fn smallest_pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for r in t..self.a.rows() {
            for c in t..self.a.cols() {
                let x = &self.a[(r, c)];
                if x.is_zero() {
                    continue;
                }
                match best {
                    Some((br, bc)) if self.a[(br, bc)].abs() <= x.abs() => {}
                    _ => best = Some((r, c)),
                }
            }
        }
        best
    }

    /// Clears row and column `t` off the diagonal. Returns false if a nonzero
    /// remainder appeared, which means a smaller pivot exists.
    fn clear_cross(&mut self, t: usize) -> bool {
        let mut clean = true;
        for r in t + 1..self.a.rows() {
            if self.a[(r, t)].is_zero() {
                continue;
            }
            let q = self.a[(r, t)].div_floor(&self.a[(t, t)]);
            self.add_row(r, t, &-q);
            if !self.a[(r, t)].is_zero() {
                clean = false;
            }
        }
        for c in t + 1..self.a.cols() {
            if self.a[(t, c)].is_zero() {
                continue;
            }
            let q = self.a[(t, c)].div_floor(&self.a[(t, t)]);
            self.add_col(c, t, &-q);
            if !self.a[(t, c)].is_zero() {
                clean = false;
            }
        }
        clean
    }

    fn non_divisible_row(&self, t: usize) -> Option<usize> {
        let p = &self.a[(t, t)];
        (t + 1..self.a.rows())
            .find(|&r| (t + 1..self.a.cols()).any(|c| !self.a[(r, c)].is_multiple_of(p)))
    }

    fn run(mut self) -> SnfResult {
        let steps = self.a.rows().min(self.a.cols());
        for t in 0..steps {
            loop {
                let Some((pr, pc)) = self.smallest_pivot(t) else {
                    return self.finish();
                };
                self.swap_rows(t, pr);
                self.swap_cols(t, pc);
                if !self.clear_cross(t) {
                    continue;
                }
                if let Some(r) = self.non_divisible_row(t) {
                    let one = BigInt::from(1);
                    self.add_row(t, r, &one);
                    continue;
                }
                if self.a[(t, t)].is_negative() {
                    self.negate_row(t);
                }
                break;
            }
        }
        self.finish()
    }

    fn finish(self) -> SnfResult {
        SnfResult {
            u: self.u,
            v: self.v,
            d: self.a,
            u_inv: self.u_inv,
        }
    }
}

pub fn smith_normal_form(a: &IntMatrix) -> SnfResult {
    Reducer {
        a: a.clone(),
        u: IntMatrix::identity(a.rows()),
        u_inv: IntMatrix::identity(a.rows()),
        v: IntMatrix::identity(a.cols()),
    }
    .run()
}

/// Basis of the integer kernel lattice `{ z in Z^n : A z = 0 }`.
///
/// The trailing columns of `V` past the rank span the kernel and are a
/// saturated basis because `V` is unimodular.
pub fn kernel_basis(a: &IntMatrix) -> Vec<Vec<BigInt>> {
    let snf = smith_normal_form(a);
    let rank = snf.rank();
    (rank..a.cols()).map(|c| snf.v.column(c)).collect()
}
