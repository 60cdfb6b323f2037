use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Dense integer matrix with arbitrary-precision entries, stored row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from rows; every row must have the same length.
    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().position(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch {
                expected: cols,
                found: rows[bad].len(),
            });
        }
        let entries = rows
            .iter()
            .flat_map(|r| r.iter().cloned().map(Into::into))
            .collect();
        Ok(Self {
            rows: rows.len(),
            cols,
            entries,
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        Self {
            rows,
            cols,
            entries,
        }
    }

    pub fn diagonal<T: Into<BigInt> + Clone>(diag: &[T]) -> Self {
        let n = diag.len();
        let mut m = Self::zeros(n, n);
        for (i, d) in diag.iter().enumerate() {
            m[(i, i)] = d.clone().into();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn row(&self, r: usize) -> &[BigInt] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn column(&self, c: usize) -> Vec<BigInt> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn diagonal_entries(&self) -> Vec<BigInt> {
        (0..self.rows.min(self.cols))
            .map(|i| self[(i, i)].clone())
            .collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        Ok(Self::from_fn(self.rows, other.cols, |r, c| {
            (0..self.cols).map(|k| &self[(r, k)] * &other[(k, c)]).sum()
        }))
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Result<Vec<BigInt>> {
        if self.cols != v.len() {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok((0..self.rows)
            .map(|r| self.row(r).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect())
    }

    /// Block-diagonal sum `self ⊕ other`.
    pub fn direct_sum(&self, other: &IntMatrix) -> IntMatrix {
        let rows = self.rows + other.rows;
        let cols = self.cols + other.cols;
        Self::from_fn(rows, cols, |r, c| {
            if r < self.rows && c < self.cols {
                self[(r, c)].clone()
            } else if r >= self.rows && c >= self.cols {
                other[(r - self.rows, c - self.cols)].clone()
            } else {
                BigInt::zero()
            }
        })
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> Result<BigInt> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut a = self.to_rows();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(i, k);
                        sign = -sign;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = num / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        Ok(if n == 0 {
            BigInt::one()
        } else {
            sign * &a[n - 1][n - 1]
        })
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for c in 0..self.cols {
                self.entries.swap(a * self.cols + c, b * self.cols + c);
            }
        }
    }

    pub(crate) fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for r in 0..self.rows {
                self.entries.swap(r * self.cols + a, r * self.cols + b);
            }
        }
    }

    /// row[dst] += factor * row[src]
    pub(crate) fn add_row_multiple(&mut self, dst: usize, src: usize, factor: &BigInt) {
        if factor.is_zero() {
            return;
        }
        for c in 0..self.cols {
            let delta = &self[(src, c)] * factor;
            self[(dst, c)] += delta;
        }
    }

    /// col[dst] += factor * col[src]
    pub(crate) fn add_col_multiple(&mut self, dst: usize, src: usize, factor: &BigInt) {
        if factor.is_zero() {
            return;
        }
        for r in 0..self.rows {
            let delta = &self[(r, src)] * factor;
            self[(r, dst)] += delta;
        }
    }

    pub(crate) fn negate_row(&mut self, r: usize) {
        for c in 0..self.cols {
            let v = std::mem::take(&mut self[(r, c)]);
            self[(r, c)] = -v;
        }
    }

    pub(crate) fn negate_col(&mut self, c: usize) {
        for r in 0..self.rows {
            let v = std::mem::take(&mut self[(r, c)]);
            self[(r, c)] = -v;
        }
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;

    fn index(&self, (r, c): (usize, usize)) -> &BigInt {
        assert!(
            r < self.rows && c < self.cols,
            "index ({r}, {c}) out of bounds"
        );
        &self.entries[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut BigInt {
        assert!(
            r < self.rows && c < self.cols,
            "index ({r}, {c}) out of bounds"
        );
        &mut self.entries[r * self.cols + c]
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            for (c, x) in self.row(r).iter().enumerate() {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{x}")?;
            }
        }
        write!(f, "]")
    }
}
