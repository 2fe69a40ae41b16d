//! JSON exchange format for Hopf algebras given by structure constants.
//!
//! Rationals are written as `"p/q"` strings so the format stays exact.
//!
//! - `mult`: `[i, j, k, c]` means `eᵢ·eⱼ` has coefficient `c` on `eₖ`.
//! - `unit`: `[k, c]`.
//! - `comult`: `[i, j, k, c]` means `Δ(eᵢ)` has coefficient `c` on `eⱼ⊗eₖ`.
//! - `counit`: `ε(eᵢ)` for every `i`.
//! - `antipode`: `[i, j, c]` means `S(eᵢ)` has coefficient `c` on `eⱼ`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hopf::{HopfData, HopfParts};
use crate::linalg::{Matrix, Rational, SparseVec};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HopfJson {
    pub dim: usize,
    pub basis: Vec<String>,
    pub mult: Vec<(usize, usize, usize, Rational)>,
    pub unit: Vec<(usize, Rational)>,
    pub comult: Vec<(usize, usize, usize, Rational)>,
    pub counit: Vec<Rational>,
    pub antipode: Vec<(usize, usize, Rational)>,
}

impl HopfJson {
    pub fn from_hopf(h: &HopfData) -> Self {
        let d = h.dim();
        let mut mult = Vec::new();
        for i in 0..d {
            for j in 0..d {
                for (k, c) in h.mult_basis(i, j).iter() {
                    mult.push((i, j, k, c.clone()));
                }
            }
        }
        let mut comult = Vec::new();
        for i in 0..d {
            for (j, k, c) in h.comult_basis(i) {
                comult.push((i, *j, *k, c.clone()));
            }
        }
        let mut antipode = Vec::new();
        for i in 0..d {
            for (j, c) in h.antipode().column(i).iter() {
                antipode.push((i, j, c.clone()));
            }
        }
        HopfJson {
            dim: d,
            basis: h.labels().to_vec(),
            mult,
            unit: h.unit().iter().map(|(k, c)| (k, c.clone())).collect(),
            comult,
            counit: (0..d).map(|i| h.counit_basis(i).clone()).collect(),
            antipode,
        }
    }

    /// Builds and verifies the Hopf algebra.
    pub fn to_hopf(&self) -> Result<HopfData> {
        HopfData::new(self.parts()?)
    }

    /// Builds the structure without checking the Hopf axioms.
    pub fn parts(&self) -> Result<HopfParts> {
        let d = self.dim;
        let bad = |what: &str, i: usize| Error::Parse(format!("{what} entry {i} has an index outside 0..{d}"));
        if self.basis.len() != d || self.counit.len() != d {
            return Err(Error::Parse(format!("basis and counit need {d} entries")));
        }
        let mut mult: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); d * d];
        for (n, (i, j, k, c)) in self.mult.iter().enumerate() {
            if *i >= d || *j >= d || *k >= d {
                return Err(bad("mult", n));
            }
            mult[i * d + j].push((*k, c.clone()));
        }
        let mut comult: Vec<Vec<(usize, usize, Rational)>> = vec![Vec::new(); d];
        for (n, (i, j, k, c)) in self.comult.iter().enumerate() {
            if *i >= d || *j >= d || *k >= d {
                return Err(bad("comult", n));
            }
            comult[*i].push((*j, *k, c.clone()));
        }
        let mut antipode = Matrix::zeros(d, d);
        for (n, (i, j, c)) in self.antipode.iter().enumerate() {
            if *i >= d || *j >= d {
                return Err(bad("antipode", n));
            }
            let sum = antipode.get(*j, *i).clone() + c.clone();
            antipode.set(*j, *i, sum);
        }
        if let Some(n) = self.unit.iter().position(|(k, _)| *k >= d) {
            return Err(bad("unit", n));
        }
        Ok(HopfParts {
            labels: self.basis.clone(),
            mult: mult.into_iter().map(SparseVec::from_terms).collect(),
            unit: SparseVec::from_terms(self.unit.iter().cloned()),
            comult,
            counit: self.counit.clone(),
            antipode,
        })
    }
}

pub fn hopf_to_json_string(h: &HopfData) -> Result<String> {
    Ok(serde_json::to_string_pretty(&HopfJson::from_hopf(h))?)
}

pub fn hopf_from_json_str(s: &str) -> Result<HopfData> {
    let parsed: HopfJson = serde_json::from_str(s)?;
    parsed.to_hopf()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::catalog_group;
    use crate::hopf::{function_algebra, group_algebra};

    #[test]
    fn round_trip() {
        for h in [
            group_algebra(&catalog_group("S3").unwrap()),
            function_algebra(&catalog_group("Z4").unwrap()),
        ] {
            let text = hopf_to_json_string(&h).unwrap();
            assert_eq!(hopf_from_json_str(&text).unwrap(), h);
        }
    }

    #[test]
    fn rationals_are_strings() {
        let h = group_algebra(&catalog_group("Z2").unwrap());
        let text = hopf_to_json_string(&h).unwrap();
        assert!(text.contains("\"1\""), "{text}");
    }

    #[test]
    fn rejects_bad_input() {
        let h = group_algebra(&catalog_group("Z2").unwrap());
        let mut j = HopfJson::from_hopf(&h);
        j.mult[0].2 = 5;
        assert!(matches!(j.to_hopf(), Err(Error::Parse(_))));

        // identity antipode on ℚ[ℤ/3] breaks the antipode axiom
        let mut j = HopfJson::from_hopf(&group_algebra(&catalog_group("Z3").unwrap()));
        j.antipode = (0..3).map(|i| (i, i, Rational::one())).collect();
        assert!(matches!(j.to_hopf(), Err(Error::HopfAxiom { .. })));

        assert!(matches!(hopf_from_json_str("{\"dim\": 1}"), Err(Error::Json(_))));
    }
}
