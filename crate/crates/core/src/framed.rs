//! Framed links recorded by their linking data.
//!
//! A framed link `(L, L_par)` enters the Pontrjagin construction only
//! through its linking matrix `Lambda` (diagonal: self-linking with the
//! parallel, off-diagonal: pairwise linking) and the homology classes of its
//! components. Framed cobordism in a Z-sphere is detected by the total
//! self-linking `lk(L, L_par)`, the sum of all entries of `Lambda`.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::surgery::{MeridianClass, SurgeryPresentation};
use crate::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FramedLinkData {
    lambda: Vec<Vec<Rational>>,
    classes: Option<Vec<MeridianClass>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FramedCobordismClass {
    pub homology: MeridianClass,
    pub total: Rational,
}

impl FramedLinkData {
    pub fn empty() -> Self {
        Self {
            lambda: Vec::new(),
            classes: None,
        }
    }

    pub fn new(lambda: Vec<Vec<Rational>>, classes: Option<Vec<MeridianClass>>) -> Result<Self> {
        let n = lambda.len();
        for row in &lambda {
            if row.len() != n {
                return Err(Error::NotSquare {
                    rows: n,
                    cols: row.len(),
                });
            }
        }
        for i in 0..n {
            for j in 0..i {
                if lambda[i][j] != lambda[j][i] {
                    return Err(Error::NotSymmetric { row: i, col: j });
                }
            }
        }
        if let Some(cs) = &classes {
            if cs.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: cs.len(),
                });
            }
            if let Some(w) = cs.windows(2).find(|w| w[0].len() != w[1].len()) {
                return Err(Error::DimensionMismatch {
                    expected: w[0].len(),
                    found: w[1].len(),
                });
            }
        }
        Ok(Self { lambda, classes })
    }

    pub fn from_ints(lambda: &[Vec<i64>]) -> Result<Self> {
        Self::new(
            lambda
                .iter()
                .map(|r| {
                    r.iter()
                        .map(|&x| Rational::from_integer(x.into()))
                        .collect()
                })
                .collect(),
            None,
        )
    }

    pub fn components(&self) -> usize {
        self.lambda.len()
    }

    pub fn lambda(&self) -> &[Vec<Rational>] {
        &self.lambda
    }

    pub fn classes(&self) -> Option<&[MeridianClass]> {
        self.classes.as_deref()
    }

    /// Sum of the component classes; `None` when classes are not recorded.
    pub fn homology(&self) -> Option<MeridianClass> {
        let cs = self.classes.as_ref()?;
        let dim = cs.first().map_or(0, MeridianClass::len);
        Some(
            cs.iter()
                .fold(MeridianClass::zero(dim), |acc, c| acc.add(c)),
        )
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i >= self.components() {
            return Err(Error::IndexError {
                index: i,
                len: self.components(),
            });
        }
        Ok(())
    }
}

/// `lk(L, L_par)`: the sum of every entry of `Lambda`.
pub fn total_self_linking(f: &FramedLinkData) -> Rational {
    f.lambda.iter().flatten().sum()
}

/// Band-sums components `i` and `j` into one knot placed at the lower index.
pub fn band_sum(f: &FramedLinkData, i: usize, j: usize) -> Result<FramedLinkData> {
    f.check_index(i)?;
    f.check_index(j)?;
    if i == j {
        return Err(Error::SameComponent(i));
    }
    let (keep, drop) = (i.min(j), i.max(j));
    let l = &f.lambda;
    let merged_self = &l[i][i] + &l[j][j] + &l[i][j] + &l[j][i];
    let merged = |k: usize| &l[i][k] + &l[j][k];

    let survivors: Vec<usize> = (0..f.components()).filter(|&k| k != drop).collect();
    let lambda = survivors
        .iter()
        .map(|&r| {
            survivors
                .iter()
                .map(|&c| match (r == keep, c == keep) {
                    (true, true) => merged_self.clone(),
                    (true, false) => merged(c),
                    (false, true) => merged(r),
                    (false, false) => l[r][c].clone(),
                })
                .collect()
        })
        .collect();
    let classes = f.classes.as_ref().map(|cs| {
        survivors
            .iter()
            .map(|&k| {
                if k == keep {
                    cs[i].add(&cs[j])
                } else {
                    cs[k].clone()
                }
            })
            .collect()
    });
    Ok(FramedLinkData { lambda, classes })
}

/// Appends a split null-homologous unknot. `sign = +1` gives framing `-1`
/// (the negative Hopf pair, realizing `gamma`); `sign = -1` gives framing
/// `+1` (realizing `gamma^-1`).
pub fn add_hopf(f: &FramedLinkData, sign: i64) -> Result<FramedLinkData> {
    let framing = match sign {
        1 => -1,
        -1 => 1,
        _ => return Err(Error::BadSign(sign)),
    };
    let n = f.components();
    let mut lambda: Vec<Vec<Rational>> = f
        .lambda
        .iter()
        .map(|r| {
            let mut r = r.clone();
            r.push(Rational::zero());
            r
        })
        .collect();
    let mut last = vec![Rational::zero(); n + 1];
    last[n] = Rational::from_integer(framing.into());
    lambda.push(last);
    let classes = f.classes.as_ref().map(|cs| {
        let dim = cs.first().map_or(0, MeridianClass::len);
        let mut cs = cs.clone();
        cs.push(MeridianClass::zero(dim));
        cs
    });
    Ok(FramedLinkData { lambda, classes })
}

/// Replaces the parallel of component `i` by its sum with `delta` meridians,
/// shifting the self-linking `Lambda_ii` by `delta`.
pub fn twist_parallel(f: &FramedLinkData, i: usize, delta: i64) -> Result<FramedLinkData> {
    f.check_index(i)?;
    let mut out = f.clone();
    out.lambda[i][i] += Rational::from_integer(delta.into());
    Ok(out)
}

/// `p1` of the combing `C(tau, L, L_par)`: `p1(tau) - 4 lk(L, L_par)`.
///
/// The link must be rationally null-homologous in the ambient presentation;
/// a link without recorded classes is taken to be null-homologous.
pub fn pontrjagin_p1(
    p1_tau: &Rational,
    f: &FramedLinkData,
    ambient: &SurgeryPresentation,
) -> Result<Rational> {
    if let Some(h) = f.homology() {
        if f.components() > 0 && !ambient.is_torsion(&h)? {
            return Err(Error::NonTorsion);
        }
    }
    Ok(p1_tau - Rational::from_integer(4.into()) * total_self_linking(f))
}

/// Framed cobordism in a Z-sphere (or Z-ball): equal total self-linking.
pub fn framed_cobordant_zsphere(f: &FramedLinkData, g: &FramedLinkData) -> Result<bool> {
    for link in [f, g] {
        if let Some(cs) = &link.classes {
            if let Some(index) = cs.iter().position(|c| c.0.iter().any(|x| !x.is_zero())) {
                return Err(Error::NotZSphere { index });
            }
        }
    }
    Ok(total_self_linking(f) == total_self_linking(g))
}

/// The pair (summed class mod `B Z^n`, total self-linking).
pub fn cobordism_class(
    f: &FramedLinkData,
    ambient: &SurgeryPresentation,
) -> Result<FramedCobordismClass> {
    let homology = match f.homology() {
        Some(h) if f.components() > 0 => h,
        Some(_) => MeridianClass::zero(ambient.n()),
        None => return Err(Error::MissingClasses),
    };
    Ok(FramedCobordismClass {
        homology: ambient.reduce(&homology)?,
        total: total_self_linking(f),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn fl(rows: &[Vec<i64>]) -> FramedLinkData {
        FramedLinkData::from_ints(rows).unwrap()
    }

    #[test]
    fn totals() {
        assert_eq!(total_self_linking(&fl(&[vec![-1, 0], vec![0, 1]])), q(0, 1));
        assert_eq!(total_self_linking(&fl(&[vec![-1]])), q(-1, 1));
        assert_eq!(total_self_linking(&fl(&[vec![1, 2], vec![2, 0]])), q(5, 1));
        assert_eq!(total_self_linking(&FramedLinkData::empty()), q(0, 1));
    }

    #[test]
    fn band_sum_examples() {
        assert_eq!(
            band_sum(&fl(&[vec![-1, 0], vec![0, 1]]), 0, 1).unwrap(),
            fl(&[vec![0]])
        );
        assert_eq!(
            band_sum(&fl(&[vec![2, 1], vec![1, 2]]), 1, 0).unwrap(),
            fl(&[vec![6]])
        );
        let f = fl(&[vec![1, 2, -1], vec![2, 0, 3], vec![-1, 3, 4]]);
        let g = band_sum(&f, 0, 2).unwrap();
        assert_eq!(g, fl(&[vec![3, 5], vec![5, 0]]));
        assert_eq!(total_self_linking(&g), total_self_linking(&f));
    }

    #[test]
    fn band_sum_errors() {
        let f = fl(&[vec![1, 0], vec![0, 1]]);
        assert_eq!(band_sum(&f, 0, 0), Err(Error::SameComponent(0)));
        assert_eq!(
            band_sum(&f, 0, 5),
            Err(Error::IndexError { index: 5, len: 2 })
        );
    }

    #[test]
    fn hopf() {
        let e = FramedLinkData::empty();
        assert_eq!(add_hopf(&e, 1).unwrap(), fl(&[vec![-1]]));
        assert_eq!(add_hopf(&e, -1).unwrap(), fl(&[vec![1]]));
        let both = add_hopf(&add_hopf(&e, 1).unwrap(), -1).unwrap();
        assert_eq!(total_self_linking(&both), q(0, 1));
        assert!(framed_cobordant_zsphere(&both, &e).unwrap());
    }

    #[test]
    fn pontrjagin_examples() {
        let s3 = SurgeryPresentation::sphere();
        let m2 = q(-2, 1);
        assert_eq!(pontrjagin_p1(&m2, &fl(&[vec![-1]]), &s3).unwrap(), q(2, 1));
        assert_eq!(
            pontrjagin_p1(&m2, &FramedLinkData::empty(), &s3).unwrap(),
            m2
        );
        assert_eq!(
            pontrjagin_p1(&m2, &fl(&[vec![1, 0], vec![0, -1]]), &s3).unwrap(),
            m2
        );
    }

    #[test]
    fn pontrjagin_requires_torsion() {
        let s1s2 = SurgeryPresentation::from_rows(&[vec![0]]).unwrap();
        let f = FramedLinkData::new(
            vec![vec![q(0, 1)]],
            Some(vec![MeridianClass::from_ints(&[1])]),
        )
        .unwrap();
        assert_eq!(pontrjagin_p1(&q(0, 1), &f, &s1s2), Err(Error::NonTorsion));
    }

    #[test]
    fn cobordism_examples() {
        let s3 = SurgeryPresentation::sphere();
        assert!(framed_cobordant_zsphere(
            &fl(&[vec![1, 0], vec![0, -1]]),
            &FramedLinkData::empty()
        )
        .unwrap());
        assert!(!framed_cobordant_zsphere(&fl(&[vec![-1]]), &fl(&[vec![1]])).unwrap());

        let f =
            FramedLinkData::new(vec![vec![q(-1, 1)]], Some(vec![MeridianClass::zero(0)])).unwrap();
        let c = cobordism_class(&f, &s3).unwrap();
        assert_eq!(c.total, q(-1, 1));
        assert!(c.homology.is_empty());

        let rp3 = SurgeryPresentation::from_rows(&[vec![2]]).unwrap();
        let f = FramedLinkData::new(
            vec![vec![q(-1, 2)]],
            Some(vec![MeridianClass::from_ints(&[1])]),
        )
        .unwrap();
        let c = cobordism_class(&f, &rp3).unwrap();
        assert_eq!(c.homology, MeridianClass::from_ints(&[1]));
        assert_eq!(c.total, q(-1, 2));
        // same class after adding a relation
        let f3 = FramedLinkData::new(
            vec![vec![q(-1, 2)]],
            Some(vec![MeridianClass::from_ints(&[3])]),
        )
        .unwrap();
        assert_eq!(cobordism_class(&f3, &rp3).unwrap(), c);

        assert_eq!(
            cobordism_class(&fl(&[vec![1]]), &s3),
            Err(Error::MissingClasses)
        );
    }

    #[test]
    fn not_zsphere() {
        let f = FramedLinkData::new(
            vec![vec![q(0, 1)]],
            Some(vec![MeridianClass::from_ints(&[1])]),
        )
        .unwrap();
        assert_eq!(
            framed_cobordant_zsphere(&f, &FramedLinkData::empty()),
            Err(Error::NotZSphere { index: 0 })
        );
    }

    #[test]
    fn meridian_twist_matches_hopf_band_sum() {
        let f = fl(&[vec![2, 1], vec![1, -3]]);
        for (delta, sign) in [(-1, 1), (1, -1)] {
            let direct = twist_parallel(&f, 1, delta).unwrap();
            let via = band_sum(&add_hopf(&f, sign).unwrap(), 1, 2).unwrap();
            assert_eq!(direct, via);
        }
    }
}
