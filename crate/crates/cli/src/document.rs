//! The input document: a JSON record with a fixed key order.
//!
//! ```json
//! {
//!   "linking_matrix": [[2, 1], [1, 2]],
//!   "combing": { "c": [0, 0], "gamma": 0 },
//!   "other_combing": { "c": [2, 0], "gamma": 1 },
//!   "framed": { "lambda_matrix": [["-1/2"]], "classes": [[1, 0]] },
//!   "lambda": "1/12"
//! }
//! ```
//!
//! Only `linking_matrix` is required. Rationals are strings `"p/q"` or `"p"`
//! and are re-emitted in lowest terms.

use std::fmt;

use combing_core::{fmt_rational, Rational};
use num_bigint::BigInt;
use num_traits::Zero;
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::CliError;

/// Exact rational carried as a string.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalString(pub Rational);

impl RationalString {
    pub fn parse(s: &str) -> Result<Self, String> {
        let s = s.trim();
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let num: BigInt = num
            .parse()
            .map_err(|_| format!("bad rational numerator in {s:?}"))?;
        let den: BigInt = den
            .parse()
            .map_err(|_| format!("bad rational denominator in {s:?}"))?;
        if den.is_zero() {
            return Err(format!("zero denominator in {s:?}"));
        }
        Ok(Self(Rational::new(num, den)))
    }
}

impl fmt::Display for RationalString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&fmt_rational(&self.0))
    }
}

impl Serialize for RationalString {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for RationalString {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        Self::parse(&s).map_err(de::Error::custom)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CombingDoc {
    pub c: Vec<i64>,
    #[serde(default)]
    pub gamma: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FramedDoc {
    pub lambda_matrix: Vec<Vec<RationalString>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub classes: Option<Vec<Vec<i64>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Document {
    pub linking_matrix: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub combing: Option<CombingDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub other_combing: Option<CombingDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub framed: Option<FramedDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda: Option<RationalString>,
}

impl Document {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let doc: Document =
            serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))?;
        doc.validate()?;
        Ok(doc)
    }

    /// Canonical rendering: pretty JSON in declaration key order.
    pub fn emit(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("document serializes");
        s.push('\n');
        s
    }

    fn validate(&self) -> Result<(), CliError> {
        let n = self.linking_matrix.len();
        for (i, row) in self.linking_matrix.iter().enumerate() {
            if row.len() != n {
                return Err(CliError::Parse(format!(
                    "linking_matrix row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
        }
        for i in 0..n {
            for j in 0..i {
                if self.linking_matrix[i][j] != self.linking_matrix[j][i] {
                    return Err(CliError::Parse(format!(
                        "linking_matrix is not symmetric at ({i}, {j})"
                    )));
                }
            }
        }
        Ok(())
    }
}
