//! Rota-Baxter operators of weight −1 on cocommutative Hopf algebras.
//!
//! `B` is a coalgebra map with `B(x)B(y) = B(B(x₁)·y·S(B(x₂))·x₃)`. Every
//! identity is decided on basis tuples, which by multilinearity covers all
//! elements.

use crate::check::{expect_eq, for_all, for_all_pairs, Check, CheckReport, Witness};
use crate::error::{Error, Result};
use crate::group::{GroupMap, GroupTable};
use crate::hopf::{
    coalgebra_map_check, group_algebra, hopf_hom_check, lift_group_map, verify_hopf, HopfData, HopfParts, SubHopf,
};
use crate::linalg::{image_basis, kernel_basis, LinearMap, Matrix, SparseVec, Subspace};

/// A validated weight −1 Rota-Baxter operator on a cocommutative Hopf algebra.
#[derive(Clone, Debug)]
pub struct RBOperator {
    algebra: HopfData,
    map: LinearMap,
}

impl RBOperator {
    /// Validates `b` on `h`; a failure is reported as [`Error::Identity`].
    pub fn new(h: &HopfData, b: Matrix) -> Result<Self> {
        if let Err(w) = rb_check(h, &b)? {
            return Err(Error::Identity {
                name: "rota-baxter identity".into(),
                witness: w,
            });
        }
        Ok(RBOperator {
            algebra: h.clone(),
            map: LinearMap::new(b),
        })
    }

    /// Lifts a group-level operator to ℚ[G].
    pub fn from_group_map(g: &GroupTable, f: &GroupMap) -> Result<Self> {
        if f.len() != g.order() || f.images.iter().any(|&v| v >= g.order()) {
            return Err(Error::Precondition(format!(
                "{f} is not a map on a group of order {}",
                g.order()
            )));
        }
        Self::new(&group_algebra(g), lift_group_map(g, f))
    }

    /// `x ↦ ε(x)·1`.
    pub fn unit_counit(h: &HopfData) -> Result<Self> {
        Self::new(h, h.unit_counit().matrix().clone())
    }

    pub fn identity(h: &HopfData) -> Result<Self> {
        Self::new(h, Matrix::identity(h.dim()))
    }

    pub fn algebra(&self) -> &HopfData {
        &self.algebra
    }

    pub fn map(&self) -> &LinearMap {
        &self.map
    }

    pub fn matrix(&self) -> &Matrix {
        self.map.matrix()
    }

    pub fn apply(&self, x: &SparseVec) -> SparseVec {
        self.map.apply(x)
    }
}

/// `B(x₁)·y·S(B(x₂))·x₃`, the argument of `B` on the right of the identity.
fn sandwich(h: &HopfData, b: &LinearMap, x: &SparseVec, y: &SparseVec) -> SparseVec {
    h.sweedler(x, 3, |l| {
        let b0 = b.column(l[0]);
        let sb1 = h.s(b.column(l[1]));
        h.product(&[b0, y, &sb1, &SparseVec::unit(l[2])])
    })
}

/// The defining identity alone, on all basis pairs.
pub fn rb_identity_check(h: &HopfData, b: &LinearMap) -> Check {
    let d = h.dim();
    for_all_pairs(d, d, |i, j| {
        let lhs = h.mul(b.column(i), b.column(j));
        let rhs = b.apply(&sandwich(h, b, &SparseVec::unit(i), &SparseVec::unit(j)));
        expect_eq(&lhs, &rhs, &[i, j])
    })
}

/// Coalgebra-map condition and the defining identity.
///
/// Errors if `h` is not cocommutative or `b` has the wrong shape.
pub fn rb_check(h: &HopfData, b: &Matrix) -> Result<Check> {
    crate::hopf::require_cocommutative(h)?;
    let coalgebra = coalgebra_map_check(h, h, b)?;
    Ok(coalgebra.and_then(|()| rb_identity_check(h, &LinearMap::new(b.clone()))))
}

/// `B̃(x) = x₁·B(S(x₂))` as a linear map on `h`.
pub fn tilde_map(h: &HopfData, b: &LinearMap) -> LinearMap {
    LinearMap::from_columns(
        h.dim(),
        (0..h.dim())
            .map(|i| {
                h.sweedler(&SparseVec::unit(i), 2, |l| {
                    h.mul(&SparseVec::unit(l[0]), &b.apply(&h.s(&SparseVec::unit(l[1]))))
                })
            })
            .collect(),
    )
}

/// The companion operator `B̃`.
pub fn tilde_op(rb: &RBOperator) -> Matrix {
    tilde_map(&rb.algebra, &rb.map).matrix().clone()
}

/// `x *_B y = B(x₁)·y·S(B(x₂))·x₃`.
pub fn star_product(h: &HopfData, b: &LinearMap, x: &SparseVec, y: &SparseVec) -> SparseVec {
    sandwich(h, b, x, y)
}

/// `S_B(x) = S(B(x₁))·S(x₂)·B(x₃)`.
pub fn s_b(h: &HopfData, b: &LinearMap, x: &SparseVec) -> SparseVec {
    h.sweedler(x, 3, |l| {
        let sb0 = h.s(b.column(l[0]));
        let s1 = h.antipode().column(l[1]);
        h.product(&[&sb0, s1, b.column(l[2])])
    })
}

/// Checked version of [`star_product`] for elements of `rb`'s algebra.
pub fn star(rb: &RBOperator, x: &SparseVec, y: &SparseVec) -> Result<SparseVec> {
    rb.algebra.check_element(x)?;
    rb.algebra.check_element(y)?;
    Ok(star_product(&rb.algebra, &rb.map, x, y))
}

/// Checked version of [`s_b`].
pub fn descendent_antipode_of(rb: &RBOperator, x: &SparseVec) -> Result<SparseVec> {
    rb.algebra.check_element(x)?;
    Ok(s_b(&rb.algebra, &rb.map, x))
}

/// `H_B`: same coalgebra, product `*_B`, antipode `S_B`; not yet verified.
pub fn descendent_unchecked(h: &HopfData, b: &LinearMap) -> HopfData {
    let d = h.dim();
    let mut parts: HopfParts = h.parts();
    parts.mult = (0..d)
        .flat_map(|i| (0..d).map(move |j| (i, j)))
        .map(|(i, j)| star_product(h, b, &SparseVec::unit(i), &SparseVec::unit(j)))
        .collect();
    parts.antipode = Matrix::from_columns(d, &(0..d).map(|i| s_b(h, b, &SparseVec::unit(i))).collect::<Vec<_>>());
    HopfData::new_unchecked(parts).expect("descendent keeps the shapes of its parent")
}

/// The descendent Hopf algebra `H_B`, verified.
pub fn descendent(rb: &RBOperator) -> Result<HopfData> {
    HopfData::new(descendent_unchecked(&rb.algebra, &rb.map).parts())
}

/// `B` is again an operator on `H_B`.
pub fn descendent_rb_check(rb: &RBOperator) -> Result<Check> {
    let hb = descendent(rb)?;
    rb_check(&hb, rb.matrix())
}

/// Everything derived from `(H, B)`.
#[derive(Clone, Debug)]
pub struct RBDerived {
    pub operator: RBOperator,
    /// `B̃`.
    pub tilde: LinearMap,
    /// `H₊ = Im B`.
    pub h_plus: SubHopf,
    /// `H₋ = Im B̃`.
    pub h_minus: SubHopf,
    /// `K₊ = ker B̃`.
    pub k_plus: Subspace,
    /// `K₋ = ker B`.
    pub k_minus: Subspace,
    /// `H_B`.
    pub descendent: HopfData,
    /// `H_{B̃}`.
    pub tilde_descendent: HopfData,
}

impl RBDerived {
    pub fn algebra(&self) -> &HopfData {
        self.operator.algebra()
    }

    pub fn b(&self) -> &LinearMap {
        self.operator.map()
    }

    /// `S_B`, the antipode of `H_B`.
    pub fn descendent_antipode(&self) -> &LinearMap {
        self.descendent.antipode()
    }
}

fn structural(name: &str, e: Error) -> Error {
    match e {
        Error::HopfAxiom { axiom, witness } => Error::Identity {
            name: format!("{name}: {axiom}"),
            witness,
        },
        other => other,
    }
}

/// Computes every derived object and checks each identity, returning the
/// report alongside. Fails only when a derived object cannot be built at
/// all, for instance when an image is not closed under the Hopf operations.
pub fn derive_with_report(rb: &RBOperator) -> Result<(RBDerived, CheckReport)> {
    let h = rb.algebra();
    let b = rb.map();
    let d = h.dim();
    let e = SparseVec::unit;
    let tilde = tilde_map(h, b);
    let mut report = CheckReport::new();

    report.push(
        "rota-baxter identity",
        "B(x)B(y) = B(B(x₁) y S(B(x₂)) x₃)",
        rb_identity_check(h, b),
    );
    report.push(
        "companion is rota-baxter",
        "B̃(x) = x₁B(S(x₂)) is a weight −1 operator",
        rb_check(h, tilde.matrix())?,
    );
    report.push(
        "operator from companion",
        "B(x) = x₁B̃(S(x₂))",
        for_all(d, |i| {
            let rebuilt = h.sweedler(&e(i), 2, |l| h.mul(&e(l[0]), &tilde.apply(&h.s(&e(l[1])))));
            expect_eq(&rebuilt, b.column(i), &[i])
        }),
    );
    report.push(
        "companion is involutive",
        "(B̃)̃ = B",
        for_all(d, |i| expect_eq(tilde_map(h, &tilde).column(i), b.column(i), &[i])),
    );
    report.push(
        "factorization through companion",
        "B̃(x₁)S(B(S(x₂))) = x and B(x₁)S(B̃(S(x₂))) = x",
        for_all(d, |i| {
            let first = h.sweedler(&e(i), 2, |l| {
                h.mul(tilde.column(l[0]), &h.s(&b.apply(h.antipode().column(l[1]))))
            });
            expect_eq(&first, &e(i), &[i]).map_err(|w| Witness::new(&w.at, format!("first: {}", w.detail)))?;
            let second = h.sweedler(&e(i), 2, |l| {
                h.mul(b.column(l[0]), &h.s(&tilde.apply(h.antipode().column(l[1]))))
            });
            expect_eq(&second, &e(i), &[i]).map_err(|w| Witness::new(&w.at, format!("second: {}", w.detail)))
        }),
    );
    report.push(
        "composites with companion",
        "B̃(B(x)) = B(S(B̃(S(x)))) and B(B̃(x)) = B̃(S(B(S(x))))",
        for_all(d, |i| {
            let sx = h.antipode().column(i);
            let lhs = tilde.apply(b.column(i));
            let rhs = b.apply(&h.s(&tilde.apply(sx)));
            expect_eq(&lhs, &rhs, &[i]).map_err(|w| Witness::new(&w.at, format!("B̃B: {}", w.detail)))?;
            let lhs = b.apply(tilde.column(i));
            let rhs = tilde.apply(&h.s(&b.apply(sx)));
            expect_eq(&lhs, &rhs, &[i]).map_err(|w| Witness::new(&w.at, format!("BB̃: {}", w.detail)))
        }),
    );
    report.push(
        "companion product duality",
        "S(S(x) *_B̃ S(y)) = x *_B y",
        for_all_pairs(d, d, |i, j| {
            let lhs = h.s(&star_product(h, &tilde, h.antipode().column(i), h.antipode().column(j)));
            let rhs = star_product(h, b, &e(i), &e(j));
            expect_eq(&lhs, &rhs, &[i, j])
        }),
    );

    let descendent = descendent_unchecked(h, b);
    let hb_report = verify_hopf(&descendent);
    report.push(
        "descendent is a hopf algebra",
        "(H, *_B, 1, Δ, ε, S_B) satisfies every Hopf axiom",
        hb_report.checks.iter().find(|c| !c.passed()).map_or(Ok(()), |c| {
            let w = c.witness.clone().expect("failed check has a witness");
            Err(Witness::new(&w.at, format!("{}: {}", c.name, w.detail)))
        }),
    );
    report.push(
        "descendent is cocommutative",
        "Δ is unchanged, so swap∘Δ = Δ",
        crate::hopf::require_cocommutative(&descendent).map_err(|e| match e {
            Error::NotCocommutative(w) => w,
            other => Witness::new(&[], other.to_string()),
        }),
    );
    report.push(
        "operator is a hopf map from descendent",
        "B: H_B → H is a Hopf algebra homomorphism",
        hopf_hom_check(&descendent, h, b.matrix())?.into_check(),
    );
    report.push(
        "operator on descendent",
        "B is a weight −1 operator on H_B",
        rb_check(&descendent, b.matrix())?,
    );

    let h_plus = SubHopf::from_subspace(h, &image_basis(b.matrix())).map_err(|e| structural("image of B", e))?;
    report.push(
        "image is a hopf subalgebra",
        "Im B is closed under every Hopf operation",
        Ok(()),
    );
    let h_minus = SubHopf::from_subspace(h, &image_basis(tilde.matrix())).map_err(|e| structural("image of B̃", e))?;
    report.push(
        "companion image is a hopf subalgebra",
        "Im B̃ is closed under every Hopf operation",
        Ok(()),
    );

    let tilde_descendent = descendent_unchecked(h, &tilde);
    let derived = RBDerived {
        operator: rb.clone(),
        k_plus: kernel_basis(tilde.matrix()),
        k_minus: kernel_basis(b.matrix()),
        tilde,
        h_plus,
        h_minus,
        descendent,
        tilde_descendent,
    };
    Ok((derived, report))
}

/// Computes and verifies everything, failing on the first identity that
/// does not hold.
pub fn derive_all(rb: &RBOperator) -> Result<RBDerived> {
    let (derived, report) = derive_with_report(rb)?;
    report.into_result()?;
    Ok(derived)
}

/// Whether `H` with `*_B` keeps its own antipode `S` as a valid antipode.
/// Recorded as an observation; it fails on nonabelian examples.
pub fn plain_antipode_on_descendent(d: &RBDerived) -> Check {
    let with_s = d
        .descendent
        .with_antipode_unchecked(d.algebra().antipode().matrix().clone())
        .expect("same shape");
    let report = verify_hopf(&with_s);
    match report.checks.into_iter().find(|c| c.name == "antipode") {
        Some(c) => c.witness.map_or(Ok(()), Err),
        None => Ok(()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{catalog_group, enumerate_group_rb, tilde_group_map};
    use crate::linalg::Rational;

    fn z6_triple() -> (GroupTable, GroupMap) {
        let g = GroupTable::cyclic(6).unwrap();
        let f = GroupMap::new((0..6).map(|x| 3 * x % 6).collect());
        (g, f)
    }

    #[test]
    fn unit_counit_and_identity_are_operators() {
        for name in ["Z1", "Z4", "S3", "Q8"] {
            let h = group_algebra(&catalog_group(name).unwrap());
            assert!(RBOperator::unit_counit(&h).is_ok(), "{name}");
            assert!(RBOperator::identity(&h).is_ok(), "{name}");
        }
    }

    #[test]
    fn non_operator_is_rejected_with_group_witness() {
        let g = GroupTable::cyclic(4).unwrap();
        let f = GroupMap::new(vec![0, 2, 0, 0]);
        let group_w = crate::group::group_rb_check(&g, &f).unwrap_err();
        match RBOperator::from_group_map(&g, &f) {
            Err(Error::Identity { witness, .. }) => assert_eq!(witness.at, group_w.at),
            other => panic!("expected rejection, got {other:?}"),
        }
    }

    #[test]
    fn rb_check_requires_cocommutativity() {
        let h = crate::hopf::function_algebra(&catalog_group("S3").unwrap());
        assert!(matches!(
            rb_check(&h, &Matrix::identity(6)),
            Err(Error::NotCocommutative(_))
        ));
    }

    #[test]
    fn tilde_of_trivial_operators() {
        let h = group_algebra(&catalog_group("S3").unwrap());
        let id = RBOperator::identity(&h).unwrap();
        assert_eq!(tilde_op(&id), *h.unit_counit().matrix());
        let uc = RBOperator::unit_counit(&h).unwrap();
        assert!(tilde_op(&uc).is_identity());
    }

    #[test]
    fn tilde_of_triple_on_z6_is_quadruple() {
        let (g, f) = z6_triple();
        let rb = RBOperator::from_group_map(&g, &f).unwrap();
        let expected = lift_group_map(&g, &GroupMap::new((0..6).map(|x| 4 * x % 6).collect()));
        assert_eq!(tilde_op(&rb), expected);
        assert_eq!(lift_group_map(&g, &tilde_group_map(&g, &f)), expected);
    }

    #[test]
    fn descendent_of_unit_counit_is_opposite() {
        let g = catalog_group("S3").unwrap();
        let h = group_algebra(&g);
        let hb = descendent(&RBOperator::unit_counit(&h).unwrap()).unwrap();
        for a in 0..6 {
            for b in 0..6 {
                assert_eq!(hb.mult_basis(a, b), &SparseVec::unit(g.mul(b, a)));
            }
        }
        let hb = descendent(&RBOperator::identity(&h).unwrap()).unwrap();
        assert_eq!(hb, h);
    }

    #[test]
    fn descendent_of_triple_on_z6_is_the_group_algebra() {
        let (g, f) = z6_triple();
        let rb = RBOperator::from_group_map(&g, &f).unwrap();
        let hb = descendent(&rb).unwrap();
        assert_eq!(hb, group_algebra(&g));
    }

    #[test]
    fn star_and_s_b_agree_with_descendent_tensors() {
        let g = catalog_group("S3").unwrap();
        let h = group_algebra(&g);
        for f in enumerate_group_rb(&g, 12).unwrap() {
            let rb = RBOperator::from_group_map(&g, &f).unwrap();
            let hb = descendent(&rb).unwrap();
            let x = SparseVec::from_terms([
                (1, Rational::new(1, 2)),
                (3, Rational::from_int(-2)),
                (5, Rational::one()),
            ]);
            let y = SparseVec::from_terms([(0, Rational::from_int(3)), (4, Rational::new(-7, 3))]);
            assert_eq!(star(&rb, &x, &y).unwrap(), hb.mul(&x, &y));
            assert_eq!(descendent_antipode_of(&rb, &x).unwrap(), hb.s(&x));
            assert_eq!(star(&rb, h.unit(), &y).unwrap(), y);
        }
    }

    #[test]
    fn s_b_of_identity_is_inverse() {
        let g = catalog_group("D4").unwrap();
        let h = group_algebra(&g);
        let rb = RBOperator::identity(&h).unwrap();
        for x in 0..8 {
            assert_eq!(
                descendent_antipode_of(&rb, &SparseVec::unit(x)).unwrap(),
                SparseVec::unit(g.inv(x))
            );
        }
    }

    #[test]
    fn parent_mismatch_is_an_error() {
        let h = group_algebra(&GroupTable::cyclic(2).unwrap());
        let rb = RBOperator::identity(&h).unwrap();
        assert!(matches!(star(&rb, &SparseVec::unit(5), h.unit()), Err(Error::Shape(_))));
    }

    #[test]
    fn descendent_rb_on_small_cases() {
        let h = group_algebra(&GroupTable::cyclic(4).unwrap());
        assert!(descendent_rb_check(&RBOperator::unit_counit(&h).unwrap())
            .unwrap()
            .is_ok());
        assert!(descendent_rb_check(&RBOperator::identity(&h).unwrap()).unwrap().is_ok());
    }

    #[test]
    fn derived_dimensions() {
        let h = group_algebra(&catalog_group("S3").unwrap());
        let d = derive_all(&RBOperator::identity(&h).unwrap()).unwrap();
        assert_eq!((d.h_plus.dim(), d.h_minus.dim(), d.k_minus.dim()), (6, 1, 0));
        let d = derive_all(&RBOperator::unit_counit(&h).unwrap()).unwrap();
        assert_eq!((d.h_plus.dim(), d.h_minus.dim()), (1, 6));
        let (g, f) = z6_triple();
        let d = derive_all(&RBOperator::from_group_map(&g, &f).unwrap()).unwrap();
        assert_eq!((d.h_plus.dim(), d.h_minus.dim()), (2, 3));
    }

    #[test]
    fn every_s3_operator_passes_the_suite() {
        let g = catalog_group("S3").unwrap();
        for f in enumerate_group_rb(&g, 12).unwrap() {
            let rb = RBOperator::from_group_map(&g, &f).unwrap();
            let (_, report) = derive_with_report(&rb).unwrap();
            assert!(report.passed(), "{f}: {:?}", report.first_failure());
        }
    }
}
