//! Image of `p1` on torsion combings, computed two ways.
//!
//! The formula side takes the reference parallelization and subtracts
//! `4 l(t)` for every torsion class `t`. The enumeration side evaluates
//! `theta_G(c) mod 4` for every characteristic torsion `c` in a box
//! `|c_i| <= box`. The second set is always contained in the first; it fills
//! it out once the box is large enough to reach every torsion class.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;

use crate::combing::{p1, reference_parallelization, theta_constant};
use crate::error::Result;
use crate::par::Execution;
use crate::residue::ModClass;
use crate::surgery::{dot, SurgeryPresentation};
use crate::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ImageStatus {
    /// Enumeration side equals the formula side.
    Equal,
    /// Enumeration side is a proper subset; the box did not reach every class.
    Subset,
    /// Enumeration produced a residue outside the formula side.
    Violation,
}

impl ImageStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            ImageStatus::Equal => "equal",
            ImageStatus::Subset => "subset",
            ImageStatus::Violation => "violation",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ImageReport {
    pub formula: BTreeSet<ModClass>,
    pub enumeration: BTreeSet<ModClass>,
    /// Number of characteristic torsion vectors visited in the box.
    pub visited: usize,
    pub status: ImageStatus,
}

impl ImageReport {
    pub fn is_subset(&self) -> bool {
        self.enumeration.is_subset(&self.formula)
    }

    pub fn threshold_reached(&self) -> bool {
        self.status == ImageStatus::Equal
    }
}

/// Formula side: `{ p1(c_ref) - 4 l(t) mod 4 }` over the torsion subgroup.
pub fn p1_image_formula(p: &SurgeryPresentation, cap: usize) -> Result<BTreeSet<ModClass>> {
    let base = p1(&reference_parallelization(p))?;
    let four = Rational::from_integer(4.into());
    Ok(p.enumerate_torsion(cap)?
        .into_iter()
        .map(|(_, l)| ModClass::mod_four(&base - &four * l.value()))
        .collect())
}

/// Enumeration side with its visit count.
pub fn p1_image_enumeration(
    p: &SurgeryPresentation,
    bound: u32,
    exec: Execution,
) -> (BTreeSet<ModClass>, usize) {
    let n = p.n();
    let width = 2 * bound as usize + 1;
    let total = width
        .checked_pow(n as u32)
        .expect("enumeration box too large");
    let b = p.matrix();
    let parity: Vec<bool> = (0..n).map(|i| b[(i, i)].is_odd()).collect();
    let constant = theta_constant(p);
    let solver = p.solver();

    let residues = exec.map_indexed(total, |mut idx| {
        let mut c = Vec::with_capacity(n);
        for i in 0..n {
            let digit = (idx % width) as i64 - bound as i64;
            idx /= width;
            if digit.is_odd() != parity[i] {
                return None;
            }
            c.push(BigInt::from(digit));
        }
        let x = solver.solve(&c)?;
        Some(ModClass::mod_four(dot(&c, &x) + &constant))
    });
    let visited = residues.iter().filter(|r| r.is_some()).count();
    (residues.into_iter().flatten().collect(), visited)
}

pub fn p1_image(p: &SurgeryPresentation, cap: usize, bound: u32) -> Result<ImageReport> {
    p1_image_with(p, cap, bound, Execution::default())
}

pub fn p1_image_with(
    p: &SurgeryPresentation,
    cap: usize,
    bound: u32,
    exec: Execution,
) -> Result<ImageReport> {
    let formula = p1_image_formula(p, cap)?;
    let (enumeration, visited) = p1_image_enumeration(p, bound, exec);
    let status = if !enumeration.is_subset(&formula) {
        ImageStatus::Violation
    } else if enumeration == formula {
        ImageStatus::Equal
    } else {
        ImageStatus::Subset
    };
    Ok(ImageReport {
        formula,
        enumeration,
        visited,
        status,
    })
}
