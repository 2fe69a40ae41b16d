//! Finite-dimensional Hopf algebras over ℚ given by structure constants.
//!
//! Elements are [`SparseVec`] coordinates on the algebra's basis. Elements of
//! `H⊗H` use the index `i·dim + j` for `eᵢ⊗eⱼ`.

mod constructions;
mod group_likes;
mod morphism;
mod sub;
mod verify;

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::linalg::{Accumulator, LinearMap, Matrix, Rational, SparseVec, Tensor};

pub use constructions::{function_algebra, group_algebra, lift_group_map, tensor_product};
pub use group_likes::{group_likes, GROUP_LIKES_CAP};
pub use morphism::{coalgebra_map_check, hopf_hom_check, HopfMorphismReport};
pub use sub::SubHopf;
pub(crate) use verify::require_cocommutative;
pub use verify::{is_cocommutative, verify_hopf};

/// An element of a [`HopfData`], as coordinates on its basis.
pub type HopfElement = SparseVec;

/// One term `coeff · e_{i} ⊗ e_{j}` of a comultiplication.
pub type CoproductTerm = (usize, usize, Rational);

/// Raw structure constants, before validation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfParts {
    pub labels: Vec<String>,
    /// `mult[i·dim + j] = eᵢ·eⱼ`.
    pub mult: Vec<SparseVec>,
    pub unit: SparseVec,
    pub comult: Vec<Vec<CoproductTerm>>,
    pub counit: Vec<Rational>,
    pub antipode: Matrix,
}

/// A validated finite-dimensional Hopf algebra.
#[derive(Clone)]
pub struct HopfData {
    dim: usize,
    labels: Vec<String>,
    mult: Vec<SparseVec>,
    unit: SparseVec,
    comult: Vec<Vec<CoproductTerm>>,
    comult_vec: Vec<SparseVec>,
    counit: Vec<Rational>,
    antipode: LinearMap,
}

impl HopfData {
    /// Builds and verifies; the first failing axiom is returned as
    /// [`Error::HopfAxiom`].
    pub fn new(parts: HopfParts) -> Result<Self> {
        let h = Self::new_unchecked(parts)?;
        let report = verify_hopf(&h);
        if let Some(fail) = report.first_failure() {
            return Err(Error::HopfAxiom {
                axiom: fail.name.clone(),
                witness: fail.witness.clone().expect("failed check has a witness"),
            });
        }
        Ok(h)
    }

    /// Builds after shape checks only. The caller is responsible for running
    /// [`verify_hopf`] before relying on any axiom.
    pub fn new_unchecked(parts: HopfParts) -> Result<Self> {
        let dim = parts.labels.len();
        let shape = |what: &str| Error::Shape(format!("{what} does not match dimension {dim}"));
        if parts.mult.len() != dim * dim {
            return Err(shape("multiplication table"));
        }
        if parts.comult.len() != dim || parts.counit.len() != dim {
            return Err(shape("comultiplication or counit"));
        }
        if parts.antipode.rows() != dim || parts.antipode.cols() != dim {
            return Err(shape("antipode matrix"));
        }
        let in_range = |v: &SparseVec| v.support_bound() <= dim;
        if !parts.mult.iter().all(in_range) || !in_range(&parts.unit) {
            return Err(shape("product or unit index"));
        }
        let mut comult_vec = Vec::with_capacity(dim);
        for terms in &parts.comult {
            if terms.iter().any(|(a, b, _)| *a >= dim || *b >= dim) {
                return Err(shape("coproduct index"));
            }
            comult_vec.push(SparseVec::from_terms(
                terms.iter().map(|(a, b, c)| (a * dim + b, c.clone())),
            ));
        }
        // canonical term lists: sorted, merged, no zeros
        let comult = comult_vec
            .iter()
            .map(|v| v.iter().map(|(k, c)| (k / dim, k % dim, c.clone())).collect())
            .collect();
        Ok(HopfData {
            dim,
            labels: parts.labels,
            mult: parts.mult,
            unit: parts.unit,
            comult,
            comult_vec,
            counit: parts.counit,
            antipode: LinearMap::new(parts.antipode),
        })
    }

    /// Same structure with the antipode replaced, unverified.
    pub fn with_antipode_unchecked(&self, antipode: Matrix) -> Result<Self> {
        let mut parts = self.parts();
        parts.antipode = antipode;
        Self::new_unchecked(parts)
    }

    pub fn parts(&self) -> HopfParts {
        HopfParts {
            labels: self.labels.clone(),
            mult: self.mult.clone(),
            unit: self.unit.clone(),
            comult: self.comult.clone(),
            counit: self.counit.clone(),
            antipode: self.antipode.matrix().clone(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn unit(&self) -> &SparseVec {
        &self.unit
    }

    pub fn mult_basis(&self, i: usize, j: usize) -> &SparseVec {
        &self.mult[i * self.dim + j]
    }

    pub fn mul(&self, a: &SparseVec, b: &SparseVec) -> SparseVec {
        if let (Some(i), Some(j)) = (a.as_basis_index(), b.as_basis_index()) {
            return self.mult_basis(i, j).clone();
        }
        let mut acc = Accumulator::new();
        for (i, x) in a.iter() {
            for (j, y) in b.iter() {
                acc.add_scaled(self.mult_basis(i, j), &(x * y));
            }
        }
        acc.finish()
    }

    /// Left-to-right product; the empty product is the unit.
    pub fn product(&self, factors: &[&SparseVec]) -> SparseVec {
        match factors.split_first() {
            None => self.unit.clone(),
            Some((first, rest)) => rest.iter().fold((*first).clone(), |acc, f| self.mul(&acc, f)),
        }
    }

    pub fn comult_basis(&self, i: usize) -> &[CoproductTerm] {
        &self.comult[i]
    }

    /// `Δ(x)` as an element of `H⊗H`.
    pub fn coproduct(&self, x: &SparseVec) -> SparseVec {
        if let Some(i) = x.as_basis_index() {
            return self.comult_vec[i].clone();
        }
        let mut acc = Accumulator::new();
        for (i, c) in x.iter() {
            acc.add_scaled(&self.comult_vec[i], c);
        }
        acc.finish()
    }

    pub fn counit_basis(&self, i: usize) -> &Rational {
        &self.counit[i]
    }

    pub fn counit(&self, x: &SparseVec) -> Rational {
        x.dot_dense(&self.counit)
    }

    pub fn antipode(&self) -> &LinearMap {
        &self.antipode
    }

    pub fn s(&self, x: &SparseVec) -> SparseVec {
        self.antipode.apply(x)
    }

    /// `x ↦ ε(x)·1`.
    pub fn unit_counit(&self) -> LinearMap {
        LinearMap::from_columns(
            self.dim,
            (0..self.dim).map(|i| self.unit.scale(&self.counit[i])).collect(),
        )
    }

    /// `Δ_n(x)` as sparse terms over `n + 1` legs, nesting on the first leg:
    /// `Δ_n = (Δ ⊗ id^{⊗(n−1)}) ∘ Δ_{n−1}`.
    pub fn delta_n(&self, x: &SparseVec, n: usize) -> Vec<(Vec<usize>, Rational)> {
        self.delta_n_nested(x, n, true)
    }

    /// As [`HopfData::delta_n`], nesting on the last leg instead.
    pub fn delta_n_right(&self, x: &SparseVec, n: usize) -> Vec<(Vec<usize>, Rational)> {
        self.delta_n_nested(x, n, false)
    }

    fn delta_n_nested(&self, x: &SparseVec, n: usize, first: bool) -> Vec<(Vec<usize>, Rational)> {
        let mut terms: BTreeMap<Vec<usize>, Rational> = x.iter().map(|(i, c)| (vec![i], c.clone())).collect();
        for _ in 0..n {
            let mut next: BTreeMap<Vec<usize>, Rational> = BTreeMap::new();
            for (legs, c) in &terms {
                let split = if first { 0 } else { legs.len() - 1 };
                for (a, b, d) in &self.comult[legs[split]] {
                    let mut new_legs = Vec::with_capacity(legs.len() + 1);
                    new_legs.extend_from_slice(&legs[..split]);
                    new_legs.push(*a);
                    new_legs.push(*b);
                    new_legs.extend_from_slice(&legs[split + 1..]);
                    *next.entry(new_legs).or_insert_with(Rational::zero) += &(c * d);
                }
            }
            next.retain(|_, c| !c.is_zero());
            terms = next;
        }
        terms.into_iter().collect()
    }

    /// `Δ_n(x)` as a dense rank-(n+1) tensor.
    pub fn delta_n_tensor(&self, x: &SparseVec, n: usize) -> Tensor {
        let mut t = Tensor::zeros(&vec![self.dim; n + 1]);
        for (legs, c) in self.delta_n(x, n) {
            t.add_at(&legs, &c);
        }
        t
    }

    /// Evaluates a Sweedler expression: the sum over the terms of
    /// `Δ_{legs−1}(x)` of `coeff · f(leg indices)`, with `f` multilinear in
    /// the legs.
    pub fn sweedler(&self, x: &SparseVec, legs: usize, mut f: impl FnMut(&[usize]) -> SparseVec) -> SparseVec {
        assert!(legs >= 1, "a Sweedler expression has at least one leg");
        let mut acc = Accumulator::new();
        for (l, c) in self.delta_n(x, legs - 1) {
            acc.add_scaled(&f(&l), &c);
        }
        acc.finish()
    }

    /// Multiplication as a dense `dim × dim × dim` tensor `m[i][j][k]`.
    pub fn mult_tensor(&self) -> Tensor {
        let d = self.dim;
        let mut t = Tensor::zeros(&[d, d, d]);
        for i in 0..d {
            for j in 0..d {
                for (k, c) in self.mult_basis(i, j).iter() {
                    t.set(&[i, j, k], c.clone());
                }
            }
        }
        t
    }

    /// Comultiplication as a dense tensor `Δ[i][j][k]`, coefficient of
    /// `eⱼ⊗eₖ` in `Δ(eᵢ)`.
    pub fn comult_tensor(&self) -> Tensor {
        let d = self.dim;
        let mut t = Tensor::zeros(&[d, d, d]);
        for i in 0..d {
            for (a, b, c) in &self.comult[i] {
                t.set(&[i, *a, *b], c.clone());
            }
        }
        t
    }

    /// Checks that `x` lives in this algebra.
    pub fn check_element(&self, x: &SparseVec) -> Result<()> {
        if x.support_bound() > self.dim {
            Err(Error::Shape(format!(
                "element with index {} in a {}-dimensional algebra",
                x.support_bound() - 1,
                self.dim
            )))
        } else {
            Ok(())
        }
    }

    /// `(f ⊗ g)(t)` for `t ∈ H⊗H`, landing in `K⊗L` with `dim_right = dim L`.
    pub fn tensor_apply(&self, t: &SparseVec, f: &LinearMap, g: &LinearMap, dim_right: usize) -> SparseVec {
        let mut acc = Accumulator::new();
        for (k, c) in t.iter() {
            let (a, b) = (k / self.dim, k % self.dim);
            for (p, x) in f.column(a).iter() {
                for (q, y) in g.column(b).iter() {
                    acc.add_term(p * dim_right + q, &(c * x * y));
                }
            }
        }
        acc.finish()
    }

    /// If the basis is a group under multiplication with `Δ(g) = g⊗g`,
    /// the corresponding group table.
    pub fn basis_group(&self, name: &str) -> Option<crate::group::GroupTable> {
        let d = self.dim;
        let is_group_like = (0..d).all(|i| self.counit[i].is_one() && self.comult[i] == vec![(i, i, Rational::one())]);
        if !is_group_like {
            return None;
        }
        let rows = (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| self.mult_basis(i, j).as_basis_index())
                    .collect::<Option<Vec<_>>>()
            })
            .collect::<Option<Vec<_>>>()?;
        crate::group::GroupTable::from_cayley_table(name, rows).ok()
    }
}

impl std::fmt::Debug for HopfData {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "HopfData(dim {})", self.dim)
    }
}

impl PartialEq for HopfData {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels
            && self.mult == other.mult
            && self.unit == other.unit
            && self.comult == other.comult
            && self.counit == other.counit
            && self.antipode == other.antipode
    }
}

impl Eq for HopfData {}
