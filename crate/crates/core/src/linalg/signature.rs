use num_traits::{Signed, Zero};

use super::IntMatrix;
use crate::error::{Error, Result};
use crate::Rational;

/// Inertia of a symmetric form.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct SignatureTriple {
    pub n_plus: usize,
    pub n_minus: usize,
    pub n_zero: usize,
}

impl SignatureTriple {
    /// `n_plus - n_minus`.
    pub fn value(&self) -> i64 {
        self.n_plus as i64 - self.n_minus as i64
    }

    pub fn rank(&self) -> usize {
        self.n_plus + self.n_minus
    }

    pub fn dimension(&self) -> usize {
        self.n_plus + self.n_minus + self.n_zero
    }
}

pub(crate) fn check_symmetric(s: &IntMatrix) -> Result<()> {
    if !s.is_square() {
        return Err(Error::NotSquare {
            rows: s.rows(),
            cols: s.cols(),
        });
    }
    for i in 0..s.rows() {
        for j in 0..i {
            if s[(i, j)] != s[(j, i)] {
                return Err(Error::NotSymmetric { row: i, col: j });
            }
        }
    }
    Ok(())
}

/// Exact inertia by congruence diagonalization over the rationals.
///
/// A block whose diagonal vanishes but which has a nonzero `s_ij` is
/// handled by the substitution `e_i -> e_i + e_j`, which makes the new
/// diagonal entry `2 s_ij` nonzero; the hyperbolic pair then contributes one
/// positive and one negative square.
pub fn signature(s: &IntMatrix) -> Result<SignatureTriple> {
    check_symmetric(s)?;
    let n = s.rows();
    let mut a: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            s.row(i)
                .iter()
                .cloned()
                .map(Rational::from_integer)
                .collect()
        })
        .collect();
    let mut out = SignatureTriple::default();

    for k in 0..n {
        if a[k][k].is_zero() {
            if let Some(i) = (k + 1..n).find(|&i| !a[i][i].is_zero()) {
                a.swap(k, i);
                for row in a.iter_mut() {
                    row.swap(k, i);
                }
            } else if let Some((i, j)) = (k..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .find(|&(i, j)| !a[i][j].is_zero())
            {
                // e_i += e_j, as a congruence: row i += row j, then col i += col j
                for c in 0..n {
                    let v = a[j][c].clone();
                    a[i][c] += v;
                }
                for row in a.iter_mut() {
                    let v = row[j].clone();
                    row[i] += v;
                }
                a.swap(k, i);
                for row in a.iter_mut() {
                    row.swap(k, i);
                }
            } else {
                out.n_zero += n - k;
                break;
            }
        }
        let pivot = a[k][k].clone();
        if pivot.is_positive() {
            out.n_plus += 1;
        } else {
            out.n_minus += 1;
        }
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let f = &a[i][k] / &pivot;
            for c in k..n {
                let d = &f * &a[k][c];
                a[i][c] -= d;
            }
            for row in a.iter_mut().skip(k) {
                let d = &f * &row[k];
                row[i] -= d;
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig(rows: &[Vec<i64>]) -> SignatureTriple {
        signature(&IntMatrix::from_rows(rows).unwrap()).unwrap()
    }

    fn t(p: usize, m: usize, z: usize) -> SignatureTriple {
        SignatureTriple {
            n_plus: p,
            n_minus: m,
            n_zero: z,
        }
    }

    #[test]
    fn examples() {
        assert_eq!(sig(&[vec![1]]), t(1, 0, 0));
        assert_eq!(sig(&[vec![0, 1], vec![1, 0]]), t(1, 1, 0));
        assert_eq!(sig(&[vec![2, 1], vec![1, 2]]), t(2, 0, 0));
        assert_eq!(signature(&IntMatrix::zeros(0, 0)).unwrap(), t(0, 0, 0));
    }

    #[test]
    fn degenerate_and_indefinite() {
        assert_eq!(sig(&[vec![0]]), t(0, 0, 1));
        assert_eq!(sig(&[vec![1, 1], vec![1, 1]]), t(1, 0, 1));
        assert_eq!(sig(&[vec![-2, 1], vec![1, -2]]), t(0, 2, 0));
        assert_eq!(
            sig(&[vec![0, 0, 1], vec![0, 0, 0], vec![1, 0, 0]]),
            t(1, 1, 1)
        );
        // E8-like corner: zero diagonal but full rank
        assert_eq!(
            sig(&[vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]]),
            t(1, 2, 0)
        );
    }

    #[test]
    fn rejects_asymmetric() {
        let m = IntMatrix::from_rows(&[vec![1, 2], vec![3, 1]]).unwrap();
        assert_eq!(
            signature(&m).unwrap_err(),
            Error::NotSymmetric { row: 1, col: 0 }
        );
    }
}
