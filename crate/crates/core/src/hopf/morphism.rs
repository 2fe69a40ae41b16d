use serde::{Deserialize, Serialize};

use super::HopfData;
use crate::check::{expect, expect_eq, for_all, for_all_pairs, Check, Witness};
use crate::error::{Error, Result};
use crate::linalg::{LinearMap, Matrix, SparseVec};

/// Which parts of the Hopf homomorphism conditions a linear map satisfies.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HopfMorphismReport {
    pub is_algebra_hom: bool,
    pub is_coalgebra_hom: bool,
    pub preserves_unit: bool,
    pub preserves_counit: bool,
    pub commutes_with_antipode: bool,
    /// First failure in the order the fields are listed.
    pub first_failure: Option<Witness>,
}

impl HopfMorphismReport {
    pub fn passed(&self) -> bool {
        self.first_failure.is_none()
    }

    pub fn into_check(self) -> Check {
        match self.first_failure {
            None => Ok(()),
            Some(w) => Err(w),
        }
    }
}

fn check_shape(src: &HopfData, dst: &HopfData, f: &Matrix) -> Result<()> {
    if f.cols() != src.dim() || f.rows() != dst.dim() {
        return Err(Error::Shape(format!(
            "map is {}x{}, expected {}x{}",
            f.rows(),
            f.cols(),
            dst.dim(),
            src.dim()
        )));
    }
    Ok(())
}

fn tag(label: &'static str) -> impl Fn(Witness) -> Witness {
    move |w| Witness::new(&w.at, format!("{label}: {}", w.detail))
}

fn comult_check(src: &HopfData, dst: &HopfData, f: &LinearMap) -> Check {
    for_all(src.dim(), |i| {
        let lhs = src.tensor_apply(&src.coproduct(&SparseVec::unit(i)), f, f, dst.dim());
        let rhs = dst.coproduct(f.column(i));
        expect_eq(&lhs, &rhs, &[i])
    })
    .map_err(tag("(f⊗f)Δ = Δf"))
}

fn counit_check(src: &HopfData, dst: &HopfData, f: &LinearMap) -> Check {
    for_all(src.dim(), |i| {
        let (lhs, rhs) = (dst.counit(f.column(i)), src.counit_basis(i).clone());
        expect(lhs == rhs, &[i], || format!("ε(f(x)) = {lhs}, ε(x) = {rhs}"))
    })
    .map_err(tag("εf = ε"))
}

/// `(f⊗f)∘Δ = Δ∘f` and `ε∘f = ε` on every basis vector of `src`.
pub fn coalgebra_map_check(src: &HopfData, dst: &HopfData, f: &Matrix) -> Result<Check> {
    check_shape(src, dst, f)?;
    let f = LinearMap::new(f.clone());
    Ok(comult_check(src, dst, &f).and_then(|()| counit_check(src, dst, &f)))
}

/// Full Hopf homomorphism report for `f: src → dst`.
pub fn hopf_hom_check(src: &HopfData, dst: &HopfData, f: &Matrix) -> Result<HopfMorphismReport> {
    check_shape(src, dst, f)?;
    let f = LinearMap::new(f.clone());
    let algebra = for_all_pairs(src.dim(), src.dim(), |i, j| {
        let lhs = f.apply(src.mult_basis(i, j));
        let rhs = dst.mul(f.column(i), f.column(j));
        expect_eq(&lhs, &rhs, &[i, j])
    })
    .map_err(tag("f(xy) = f(x)f(y)"));
    let unit = expect_eq(&f.apply(src.unit()), dst.unit(), &[]).map_err(tag("f(1) = 1"));
    let coalgebra = comult_check(src, dst, &f);
    let counit = counit_check(src, dst, &f);
    let antipode = for_all(src.dim(), |i| {
        let lhs = f.apply(src.antipode().column(i));
        let rhs = dst.s(f.column(i));
        expect_eq(&lhs, &rhs, &[i])
    })
    .map_err(tag("fS = Sf"));
    let first_failure = [&algebra, &unit, &coalgebra, &counit, &antipode]
        .into_iter()
        .find_map(|c| c.clone().err());
    Ok(HopfMorphismReport {
        is_algebra_hom: algebra.is_ok(),
        is_coalgebra_hom: coalgebra.is_ok(),
        preserves_unit: unit.is_ok(),
        preserves_counit: counit.is_ok(),
        commutes_with_antipode: antipode.is_ok(),
        first_failure,
    })
}
