//! Self-verification battery behind `combing verify`.
//!
//! Each property runs on a fixed list of built-in presentations and on
//! randomized cases. Case `i` draws from its own ChaCha stream seeded by
//! `(seed, property, i)`, so the report is identical for a given seed no matter
//! how the cases are scheduled.

use combing_core::linalg::{signature, smith_normal_form, IntMatrix};
use combing_core::{
    add_hopf, band_sum, gamma, p1, p1_image_with, parity_check, pontrjagin_p1,
    reference_parallelization, stabilize, theta_g, theta_invariant, total_self_linking,
    CombingSpec, Execution, FramedLinkData, ImageStatus, MeridianClass, Rational,
    SurgeryPresentation, ThetaInput,
};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyReport {
    pub name: &'static str,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub seed: u64,
    pub properties: Vec<PropertyReport>,
}

impl VerifyReport {
    pub fn passed(&self) -> usize {
        self.properties.iter().map(|p| p.passed).sum()
    }

    pub fn failed(&self) -> usize {
        self.properties.iter().map(|p| p.failed).sum()
    }
}

const BUILT_IN: &[&[&[i64]]] = &[
    &[],
    &[&[1]],
    &[&[-1]],
    &[&[0]],
    &[&[2]],
    &[&[3]],
    &[&[4]],
    &[&[5]],
    &[&[2, 1], &[1, 2]],
    &[&[4, 1], &[1, 4]],
    &[&[0, 1], &[1, 0]],
    &[&[1, 1], &[1, 1]],
    &[&[-2, 1, 0], &[1, -2, 1], &[0, 1, -2]],
];

fn built_in() -> Vec<SurgeryPresentation> {
    BUILT_IN
        .iter()
        .map(|rows| {
            let rows: Vec<Vec<i64>> = rows.iter().map(|r| r.to_vec()).collect();
            SurgeryPresentation::from_rows(&rows).expect("built-in presentation")
        })
        .collect()
}

fn case_rng(seed: u64, property: usize, case: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(((property as u64) << 32) | case as u64);
    rng
}

fn random_symmetric(rng: &mut ChaCha8Rng, n: usize, bound: i64) -> IntMatrix {
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

fn random_presentation(rng: &mut ChaCha8Rng) -> SurgeryPresentation {
    let n = rng.gen_range(0..=4);
    SurgeryPresentation::new(random_symmetric(rng, n, 5)).expect("symmetric")
}

fn random_torsion_class(rng: &mut ChaCha8Rng, p: &SurgeryPresentation) -> MeridianClass {
    let snf = p.snf();
    let w: Vec<BigInt> = snf
        .diagonal()
        .iter()
        .map(|d| match d.to_i64() {
            Some(d) if d > 1 => BigInt::from(rng.gen_range(0..d)),
            _ => BigInt::zero(),
        })
        .collect();
    let t = MeridianClass(snf.u_inv.mul_vec(&w).expect("square"));
    let y: Vec<BigInt> = (0..p.n())
        .map(|_| rng.gen_range(-3i64..=3).into())
        .collect();
    t.add(&MeridianClass(p.matrix().mul_vec(&y).expect("square")))
}

fn random_torsion_combing(rng: &mut ChaCha8Rng, p: &SurgeryPresentation) -> CombingSpec {
    let reference = reference_parallelization(p);
    let t = random_torsion_class(rng, p);
    let c = reference
        .c
        .iter()
        .zip(&t.0)
        .map(|(a, b)| a + 2 * b)
        .collect();
    CombingSpec::new(p.clone(), c, rng.gen_range(-5i64..=5).into()).expect("characteristic")
}

fn qi(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

type Check = fn(&mut ChaCha8Rng, Option<&SurgeryPresentation>) -> bool;

fn snf_factorization(rng: &mut ChaCha8Rng, _: Option<&SurgeryPresentation>) -> bool {
    let (r, c) = (rng.gen_range(0..=6), rng.gen_range(0..=6));
    let a = IntMatrix::from_fn(r, c, |_, _| rng.gen_range(-9i64..=9).into());
    let s = smith_normal_form(&a);
    let diag = s.diagonal();
    let nz: Vec<&BigInt> = diag.iter().filter(|d| !d.is_zero()).collect();
    s.u.mul(&a).and_then(|m| m.mul(&s.v)).ok() == Some(s.d.clone())
        && s.u
            .determinant()
            .map(|d| d.abs() == BigInt::from(1))
            .unwrap_or(false)
        && s.v
            .determinant()
            .map(|d| d.abs() == BigInt::from(1))
            .unwrap_or(false)
        && nz.iter().all(|d| d.is_positive())
        && nz.windows(2).all(|w| w[1].is_multiple_of(w[0]))
}

fn signature_congruence(rng: &mut ChaCha8Rng, _: Option<&SurgeryPresentation>) -> bool {
    let n = rng.gen_range(0..=6);
    let s = random_symmetric(rng, n, 5);
    let mut p = IntMatrix::identity(n);
    for _ in 0..10 {
        if n < 2 {
            break;
        }
        let i = rng.gen_range(0..n);
        let j = (i + rng.gen_range(1..n)) % n;
        let f = BigInt::from(rng.gen_range(-2i64..=2));
        for k in 0..n {
            let d = &p[(j, k)] * &f;
            p[(i, k)] += d;
        }
    }
    let congruent = p
        .transpose()
        .mul(&s)
        .and_then(|m| m.mul(&p))
        .expect("square");
    signature(&congruent).ok() == signature(&s).ok()
}

fn linking_form_representative(rng: &mut ChaCha8Rng, p: Option<&SurgeryPresentation>) -> bool {
    let p = p.cloned().unwrap_or_else(|| random_presentation(rng));
    let v = random_torsion_class(rng, &p);
    let u: Vec<BigInt> = (0..p.n())
        .map(|_| rng.gen_range(-4i64..=4).into())
        .collect();
    let shifted = v.add(&MeridianClass(p.matrix().mul_vec(&u).expect("square")));
    let neg = v.scale(&BigInt::from(-1));
    let l = p.linking_form(&v);
    l.is_ok() && p.linking_form(&shifted) == l && p.linking_form(&neg) == l
}

fn gamma_law(rng: &mut ChaCha8Rng, p: Option<&SurgeryPresentation>) -> bool {
    let p = p.cloned().unwrap_or_else(|| random_presentation(rng));
    let x = random_torsion_combing(rng, &p);
    let t = rng.gen_range(-3i64..=3);
    match (p1(&gamma(&x, t)), p1(&x)) {
        (Ok(a), Ok(b)) => a - b == qi(4 * t),
        _ => false,
    }
}

fn spin_c_coset(rng: &mut ChaCha8Rng, p: Option<&SurgeryPresentation>) -> bool {
    let p = p.cloned().unwrap_or_else(|| random_presentation(rng));
    let x = random_torsion_combing(rng, &p);
    let u: Vec<BigInt> = (0..p.n())
        .map(|_| rng.gen_range(-3i64..=3).into())
        .collect();
    let bu = p.matrix().mul_vec(&u).expect("square");
    let c2: Vec<BigInt> = x.c.iter().zip(&bu).map(|(a, b)| a + 2 * b).collect();
    match (theta_g(&p, &c2), theta_g(&p, &x.c)) {
        (Ok(a), Ok(b)) => {
            let d = a - b;
            d.is_integer() && d.to_integer().is_multiple_of(&BigInt::from(8))
        }
        _ => false,
    }
}

fn stabilization(rng: &mut ChaCha8Rng, p: Option<&SurgeryPresentation>) -> bool {
    let p = p.cloned().unwrap_or_else(|| random_presentation(rng));
    let x = random_torsion_combing(rng, &p);
    let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
    let c0 = BigInt::from(2 * rng.gen_range(-5i64..=4) + 1);
    match stabilize(&x, sign, &c0) {
        Ok(y) => p1(&y).ok() == p1(&x).ok(),
        Err(_) => false,
    }
}

fn parity(rng: &mut ChaCha8Rng, p: Option<&SurgeryPresentation>) -> bool {
    let p = p.cloned().unwrap_or_else(|| {
        let n = rng.gen_range(0..=6);
        SurgeryPresentation::new(random_symmetric(rng, n, 5)).expect("symmetric")
    });
    parity_check(&p)
}

fn image_theorem(rng: &mut ChaCha8Rng, p: Option<&SurgeryPresentation>) -> bool {
    let p = p.cloned().unwrap_or_else(|| {
        let n = rng.gen_range(0..=2);
        SurgeryPresentation::new(random_symmetric(rng, n, 4)).expect("symmetric")
    });
    match p1_image_with(&p, 10_000, 6, Execution::Sequential) {
        Ok(r) => r.status != ImageStatus::Violation,
        Err(_) => false,
    }
}

fn random_framed(rng: &mut ChaCha8Rng, n: usize, dim: usize) -> FramedLinkData {
    let mut lambda = vec![vec![Rational::zero(); n]; n];
    for i in 0..n {
        for j in 0..=i {
            let x = Rational::new(
                rng.gen_range(-6i64..=6).into(),
                rng.gen_range(1i64..=3).into(),
            );
            lambda[i][j] = x.clone();
            lambda[j][i] = x;
        }
    }
    let classes = (0..n)
        .map(|_| MeridianClass((0..dim).map(|_| rng.gen_range(-3i64..=3).into()).collect()))
        .collect();
    FramedLinkData::new(lambda, Some(classes)).expect("symmetric")
}

fn band_sum_conservation(rng: &mut ChaCha8Rng, _: Option<&SurgeryPresentation>) -> bool {
    let n = rng.gen_range(2..=5);
    let dim = rng.gen_range(0..=3);
    let f = random_framed(rng, n, dim);
    let i = rng.gen_range(0..n);
    let j = (i + rng.gen_range(1..n)) % n;
    match band_sum(&f, i, j) {
        Ok(g) => total_self_linking(&g) == total_self_linking(&f) && g.homology() == f.homology(),
        Err(_) => false,
    }
}

fn hopf_shift(rng: &mut ChaCha8Rng, _: Option<&SurgeryPresentation>) -> bool {
    let n = rng.gen_range(0..=4);
    let f = random_framed(rng, n, 0);
    let s3 = SurgeryPresentation::sphere();
    let base = qi(rng.gen_range(-20i64..=20));
    let with = add_hopf(&f, 1).expect("valid sign");
    match (
        pontrjagin_p1(&base, &with, &s3),
        pontrjagin_p1(&base, &f, &s3),
    ) {
        (Ok(a), Ok(b)) => a - b == qi(4),
        _ => false,
    }
}

fn theta_variation(rng: &mut ChaCha8Rng, _: Option<&SurgeryPresentation>) -> bool {
    let lambda = Rational::new(
        rng.gen_range(-30i64..=30).into(),
        rng.gen_range(1i64..=12).into(),
    );
    let p = qi(rng.gen_range(-40i64..=40));
    let delta = Rational::new(
        rng.gen_range(-12i64..=12).into(),
        rng.gen_range(1i64..=6).into(),
    );
    let a = theta_invariant(&ThetaInput {
        lambda: lambda.clone(),
        p1: p.clone(),
    });
    let b = theta_invariant(&ThetaInput {
        lambda,
        p1: p + qi(4) * &delta,
    });
    b - a == delta
}

const PROPERTIES: &[(&str, Check, bool)] = &[
    ("snf-factorization", snf_factorization, false),
    ("signature-congruence", signature_congruence, false),
    (
        "linking-form-representative",
        linking_form_representative,
        true,
    ),
    ("gamma-law", gamma_law, true),
    ("spin-c-coset", spin_c_coset, true),
    ("stabilization", stabilization, true),
    ("parity", parity, true),
    ("image-theorem", image_theorem, true),
    ("band-sum-conservation", band_sum_conservation, false),
    ("hopf-shift", hopf_shift, false),
    ("theta-variation", theta_variation, false),
];

/// Runs every property on the built-in presentations (where it takes one)
/// and on `cases` random draws.
pub fn run_battery(seed: u64, cases: usize, exec: Execution) -> VerifyReport {
    let fixed = built_in();
    let properties = PROPERTIES
        .iter()
        .enumerate()
        .map(|(k, &(name, check, uses_fixed))| {
            let n_fixed = if uses_fixed { fixed.len() } else { 0 };
            let results = exec.map_indexed(n_fixed + cases, |i| {
                let mut rng = case_rng(seed, k, i);
                let p = (i < n_fixed).then(|| &fixed[i]);
                check(&mut rng, p)
            });
            let passed = results.iter().filter(|&&ok| ok).count();
            PropertyReport {
                name,
                passed,
                failed: results.len() - passed,
            }
        })
        .collect();
    VerifyReport { seed, properties }
}
