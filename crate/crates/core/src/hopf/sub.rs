use super::{HopfData, HopfParts};
use crate::check::Witness;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Rational, SparseVec, Subspace};

/// A Hopf subalgebra, with its structure expressed on the subspace's
/// echelon basis.
#[derive(Clone, Debug)]
pub struct SubHopf {
    space: Subspace,
    induced: HopfData,
    inclusion: Matrix,
}

fn closure_error(what: &str, at: &[usize], detail: String) -> Error {
    Error::HopfAxiom {
        axiom: format!("closure under {what}"),
        witness: Witness::new(at, detail),
    }
}

impl SubHopf {
    /// Restricts `h` to `space`, naming the first closure property that fails.
    pub fn from_subspace(h: &HopfData, space: &Subspace) -> Result<SubHopf> {
        if space.ambient_dim() != h.dim() {
            return Err(Error::Shape(format!(
                "subspace of a {}-dimensional space inside a {}-dimensional algebra",
                space.ambient_dim(),
                h.dim()
            )));
        }
        let basis = space.basis();
        let k = basis.len();
        let unit = space
            .coords(h.unit())
            .ok_or_else(|| closure_error("unit", &[], "1 is not in the subspace".into()))?;
        let mut mult = Vec::with_capacity(k * k);
        for (a, x) in basis.iter().enumerate() {
            for (b, y) in basis.iter().enumerate() {
                let prod = h.mul(x, y);
                let c = space
                    .coords(&prod)
                    .ok_or_else(|| closure_error("multiplication", &[a, b], format!("product {prod}")))?;
                mult.push(c);
            }
        }
        let mut comult = Vec::with_capacity(k);
        for (a, x) in basis.iter().enumerate() {
            let delta = h.coproduct(x);
            let terms = tensor_coords(h.dim(), space, &delta)
                .ok_or_else(|| closure_error("comultiplication", &[a], format!("Δ = {delta}")))?;
            comult.push(terms);
        }
        let mut antipode_cols = Vec::with_capacity(k);
        for (a, x) in basis.iter().enumerate() {
            let sx = h.s(x);
            antipode_cols.push(
                space
                    .coords(&sx)
                    .ok_or_else(|| closure_error("antipode", &[a], format!("S = {sx}")))?,
            );
        }
        let parts = HopfParts {
            labels: basis.iter().map(|b| label_of(h, b)).collect(),
            mult,
            unit,
            comult,
            counit: basis.iter().map(|b| h.counit(b)).collect(),
            antipode: Matrix::from_columns(k, &antipode_cols),
        };
        // Closure makes the restricted structure a Hopf algebra; verification
        // guards the coordinate bookkeeping.
        let induced = HopfData::new(parts)?;
        Ok(SubHopf {
            space: space.clone(),
            induced,
            inclusion: space.inclusion(),
        })
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn induced(&self) -> &HopfData {
        &self.induced
    }

    /// `dim parent × dim self` matrix of the embedding.
    pub fn inclusion(&self) -> &Matrix {
        &self.inclusion
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// Coordinates in the induced basis of a parent element, if it lies here.
    pub fn coords(&self, v: &SparseVec) -> Option<SparseVec> {
        self.space.coords(v)
    }

    pub fn embed(&self, coords: &SparseVec) -> SparseVec {
        self.space.embed(coords)
    }
}

/// Coordinates of `t ∈ H⊗H` on `{bₚ⊗b_q}` when `t ∈ space⊗space`.
///
/// Echelon basis vectors have a 1 at their own pivot and 0 at the others, so
/// the coefficient of `bₚ⊗b_q` is the entry of `t` at the pivot pair.
fn tensor_coords(dim: usize, space: &Subspace, t: &SparseVec) -> Option<Vec<(usize, usize, Rational)>> {
    let pivots = space.pivots();
    let mut terms = Vec::new();
    for (p, &pp) in pivots.iter().enumerate() {
        for (q, &pq) in pivots.iter().enumerate() {
            let c = t.get(pp * dim + pq);
            if !c.is_zero() {
                terms.push((p, q, c));
            }
        }
    }
    let basis = space.basis();
    let rebuilt = SparseVec::from_terms(terms.iter().flat_map(|(p, q, c)| {
        basis[*p]
            .iter()
            .flat_map(move |(i, x)| basis[*q].iter().map(move |(j, y)| (i * dim + j, c * x * y)))
    }));
    (rebuilt == *t).then_some(terms)
}

fn label_of(h: &HopfData, v: &SparseVec) -> String {
    match v.as_basis_index() {
        Some(i) => h.label(i).to_string(),
        None => {
            let parts: Vec<String> = v
                .iter()
                .map(|(i, c)| {
                    if c.is_one() {
                        h.label(i).to_string()
                    } else {
                        format!("({c}){}", h.label(i))
                    }
                })
                .collect();
            parts.join("+")
        }
    }
}
