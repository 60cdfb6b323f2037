//! Shared generators and independent oracles for the integration suites.
#![allow(dead_code)]

use combing_core::{
    reference_parallelization, CombingSpec, IntMatrix, MeridianClass, Rational, SurgeryPresentation,
};
use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::Rng;

pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn qi(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

pub fn random_matrix(rng: &mut impl Rng, rows: usize, cols: usize, bound: i64) -> IntMatrix {
    IntMatrix::from_fn(rows, cols, |_, _| rng.gen_range(-bound..=bound).into())
}

pub fn random_symmetric(rng: &mut impl Rng, n: usize, bound: i64) -> IntMatrix {
    let mut m = IntMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..=i {
            let x = BigInt::from(rng.gen_range(-bound..=bound));
            m[(i, j)] = x.clone();
            m[(j, i)] = x;
        }
    }
    m
}

/// Product of random elementary operations; determinant +-1 by construction.
pub fn random_unimodular(rng: &mut impl Rng, n: usize, steps: usize) -> IntMatrix {
    let mut m = IntMatrix::identity(n);
    if n < 2 {
        if n == 1 && rng.gen_bool(0.5) {
            m[(0, 0)] = BigInt::from(-1);
        }
        return m;
    }
    for _ in 0..steps {
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n - 1);
        if j >= i {
            j += 1;
        }
        let f = BigInt::from(rng.gen_range(-2..=2));
        // row i += f * row j
        for c in 0..n {
            let d = &m[(j, c)] * &f;
            m[(i, c)] += d;
        }
    }
    m
}

pub fn random_presentation(rng: &mut impl Rng, max_n: usize, bound: i64) -> SurgeryPresentation {
    let n = rng.gen_range(0..=max_n);
    SurgeryPresentation::new(random_symmetric(rng, n, bound)).unwrap()
}

/// A random torsion class: random Smith coordinates `0 <= w_i < d_i` on the
/// torsion factors, lifted by `U^-1`, plus a random relation `B y`.
pub fn random_torsion_class(rng: &mut impl Rng, p: &SurgeryPresentation) -> MeridianClass {
    let n = p.n();
    let snf = p.snf();
    let w: Vec<BigInt> = snf
        .diagonal()
        .iter()
        .map(|d| {
            if *d > BigInt::from(1) {
                let d = d.to_i64().expect("small factor");
                BigInt::from(rng.gen_range(0..d))
            } else {
                BigInt::zero()
            }
        })
        .collect();
    let t = MeridianClass(snf.u_inv.mul_vec(&w).unwrap());
    let y: Vec<BigInt> = (0..n).map(|_| rng.gen_range(-3i64..=3).into()).collect();
    t.add(&MeridianClass(p.matrix().mul_vec(&y).unwrap()))
}

/// A random combing with torsion Euler class, `c = c_ref + 2 t` for a random
/// torsion class `t`.
pub fn random_torsion_combing(
    rng: &mut impl Rng,
    p: &SurgeryPresentation,
    j_bound: i64,
) -> CombingSpec {
    let reference = reference_parallelization(p);
    let t = random_torsion_class(rng, p);
    let c: Vec<BigInt> = reference
        .c
        .iter()
        .zip(&t.0)
        .map(|(a, b)| a + 2 * b)
        .collect();
    CombingSpec::new(p.clone(), c, rng.gen_range(-j_bound..=j_bound).into()).unwrap()
}

/// Exact characteristic polynomial coefficients (Faddeev-LeVerrier),
/// `det(x I - A) = sum c_k x^k`, returned lowest degree first.
pub fn char_poly(a: &IntMatrix) -> Vec<Rational> {
    let n = a.rows();
    let am: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| Rational::from_integer(a[(i, j)].clone()))
                .collect()
        })
        .collect();
    let mut coeffs = vec![Rational::zero(); n + 1];
    coeffs[n] = qi(1);
    let mut m: Vec<Vec<Rational>> = vec![vec![Rational::zero(); n]; n];
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I
        let mut next = vec![vec![Rational::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                let mut s = Rational::zero();
                for l in 0..n {
                    s += &am[i][l] * &m[l][j];
                }
                if i == j {
                    s += &coeffs[n - k + 1];
                }
                next[i][j] = s;
            }
        }
        m = next;
        // c_{n-k} = -tr(A M_k) / k
        let mut tr = Rational::zero();
        for i in 0..n {
            for l in 0..n {
                tr += &am[i][l] * &m[l][i];
            }
        }
        coeffs[n - k] = -tr / qi(k as i64);
    }
    coeffs
}

fn sign_changes(cs: &[Rational]) -> usize {
    let signs: Vec<bool> = cs
        .iter()
        .filter(|c| !c.is_zero())
        .map(|c| c.is_positive())
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Inertia of a symmetric matrix from its characteristic polynomial. For a
/// real-rooted polynomial Descartes' rule of signs is exact.
pub fn inertia_oracle(a: &IntMatrix) -> (usize, usize, usize) {
    let cs = char_poly(a);
    let zero = cs.iter().take_while(|c| c.is_zero()).count();
    let stripped = &cs[zero..];
    let plus = sign_changes(stripped);
    let flipped: Vec<Rational> = stripped
        .iter()
        .enumerate()
        .map(|(k, c)| if k % 2 == 1 { -c.clone() } else { c.clone() })
        .collect();
    let minus = sign_changes(&flipped);
    (plus, minus, zero)
}

/// Rank by fraction-free elimination, independent of the library solver.
pub fn rank_oracle(a: &IntMatrix) -> usize {
    let mut m = a.to_rows();
    let rows = a.rows();
    let cols = a.cols();
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        for r in rank + 1..rows {
            if m[r][c].is_zero() {
                continue;
            }
            let (a0, b0) = (m[rank][c].clone(), m[r][c].clone());
            for k in 0..cols {
                m[r][k] = &m[r][k] * &a0 - &m[rank][k] * &b0;
            }
        }
        rank += 1;
    }
    rank
}
