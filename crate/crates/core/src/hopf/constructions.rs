use super::{HopfData, HopfParts};
use crate::group::{GroupMap, GroupTable};
use crate::linalg::{LinearMap, Matrix, Rational, SparseVec};

/// ℚ[G]: group elements as basis, `Δ(g) = g⊗g`, `ε(g) = 1`, `S(g) = g⁻¹`.
pub fn group_algebra(g: &GroupTable) -> HopfData {
    let n = g.order();
    let parts = HopfParts {
        labels: (0..n).map(|i| format!("g{i}")).collect(),
        mult: (0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .map(|(a, b)| SparseVec::unit(g.mul(a, b)))
            .collect(),
        unit: SparseVec::unit(g.identity()),
        comult: (0..n).map(|i| vec![(i, i, Rational::one())]).collect(),
        counit: vec![Rational::one(); n],
        antipode: lift_group_map(g, &GroupMap::new((0..n).map(|i| g.inv(i)).collect())),
    };
    // The axioms reduce to the group axioms, which the table already satisfies.
    HopfData::new_unchecked(parts).expect("group algebra shapes are consistent")
}

/// ℚ^G, the dual of ℚ[G]: point functions `δ_g` with pointwise product and
/// `Δ(δ_g) = Σ_{ab = g} δ_a⊗δ_b`. Not cocommutative when G is nonabelian.
pub fn function_algebra(g: &GroupTable) -> HopfData {
    let n = g.order();
    let parts = HopfParts {
        labels: (0..n).map(|i| format!("d{i}")).collect(),
        mult: (0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .map(|(a, b)| if a == b { SparseVec::unit(a) } else { SparseVec::zero() })
            .collect(),
        unit: SparseVec::from_terms((0..n).map(|i| (i, Rational::one()))),
        comult: (0..n)
            .map(|c| (0..n).map(|a| (a, g.mul(g.inv(a), c), Rational::one())).collect())
            .collect(),
        counit: (0..n)
            .map(|i| {
                if i == g.identity() {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            })
            .collect(),
        antipode: lift_group_map(g, &GroupMap::new((0..n).map(|i| g.inv(i)).collect())),
    };
    HopfData::new_unchecked(parts).expect("function algebra shapes are consistent")
}

/// `A ⊗ B` with componentwise structure; `eᵢ⊗eⱼ` has index `i·dim B + j`.
pub fn tensor_product(a: &HopfData, b: &HopfData) -> HopfData {
    let (da, db) = (a.dim(), b.dim());
    let pair = |x: &SparseVec, y: &SparseVec| {
        SparseVec::from_terms(
            x.iter()
                .flat_map(|(i, c)| y.iter().map(move |(j, d)| (i * db + j, c * d))),
        )
    };
    let split = |k: usize| (k / db, k % db);
    let d = da * db;
    let mut mult = Vec::with_capacity(d * d);
    for k in 0..d {
        let (i, j) = split(k);
        for l in 0..d {
            let (p, q) = split(l);
            mult.push(pair(a.mult_basis(i, p), b.mult_basis(j, q)));
        }
    }
    let comult = (0..d)
        .map(|k| {
            let (i, j) = split(k);
            let mut terms = Vec::new();
            for (a1, a2, c) in a.comult_basis(i) {
                for (b1, b2, e) in b.comult_basis(j) {
                    terms.push((a1 * db + b1, a2 * db + b2, c * e));
                }
            }
            terms
        })
        .collect();
    let antipode = LinearMap::from_columns(
        d,
        (0..d)
            .map(|k| {
                let (i, j) = split(k);
                pair(a.antipode().column(i), b.antipode().column(j))
            })
            .collect(),
    );
    let parts = HopfParts {
        labels: (0..d)
            .map(|k| {
                let (i, j) = split(k);
                format!("{}⊗{}", a.label(i), b.label(j))
            })
            .collect(),
        mult,
        unit: pair(a.unit(), b.unit()),
        comult,
        counit: (0..d)
            .map(|k| {
                let (i, j) = split(k);
                a.counit_basis(i) * b.counit_basis(j)
            })
            .collect(),
        antipode: antipode.matrix().clone(),
    };
    HopfData::new_unchecked(parts).expect("tensor product shapes are consistent")
}

/// The 0/1 matrix sending basis vector `g` to basis vector `f(g)`.
pub fn lift_group_map(g: &GroupTable, f: &GroupMap) -> Matrix {
    assert_eq!(f.len(), g.order(), "group map on a different group");
    Matrix::from_columns(
        g.order(),
        &f.images.iter().map(|&v| SparseVec::unit(v)).collect::<Vec<_>>(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{catalog, catalog_group};
    use crate::hopf::{coalgebra_map_check, is_cocommutative, verify_hopf};

    #[test]
    fn trivial_group_algebra() {
        let h = group_algebra(&GroupTable::cyclic(1).unwrap());
        assert_eq!(h.dim(), 1);
        assert!(h.antipode().matrix().is_identity());
    }

    #[test]
    fn z2_antipode_is_identity() {
        let h = group_algebra(&GroupTable::cyclic(2).unwrap());
        assert!(h.antipode().matrix().is_identity());
    }

    #[test]
    fn catalog_group_algebras_are_cocommutative_hopf_algebras() {
        for g in catalog() {
            let h = group_algebra(&g);
            assert!(verify_hopf(&h).passed(), "{}", g.name());
            assert!(is_cocommutative(&h));
            let s2 = h.antipode().compose(h.antipode());
            assert!(s2.matrix().is_identity());
            assert!(coalgebra_map_check(&h, &h, h.antipode().matrix()).unwrap().is_ok());
        }
    }

    #[test]
    fn function_algebra_is_a_hopf_algebra() {
        for name in ["Z3", "S3", "Q8"] {
            let h = function_algebra(&catalog_group(name).unwrap());
            assert!(verify_hopf(&h).passed(), "{name}");
        }
        assert!(!is_cocommutative(&function_algebra(&catalog_group("S3").unwrap())));
        assert!(is_cocommutative(&function_algebra(&catalog_group("Z4").unwrap())));
    }

    #[test]
    fn tensor_of_group_algebras_is_product_group_algebra() {
        let (z2, z3) = (GroupTable::cyclic(2).unwrap(), GroupTable::cyclic(3).unwrap());
        let t = tensor_product(&group_algebra(&z2), &group_algebra(&z3));
        let prod = group_algebra(&GroupTable::direct_product(&z2, &z3));
        assert!(verify_hopf(&t).passed());
        assert_eq!(t.parts().mult, prod.parts().mult);
        assert_eq!(t.antipode(), prod.antipode());
    }

    #[test]
    fn lifts() {
        let z6 = GroupTable::cyclic(6).unwrap();
        assert!(lift_group_map(&z6, &GroupMap::identity(&z6)).is_identity());
        let triple = lift_group_map(&z6, &GroupMap::new((0..6).map(|x| 3 * x % 6).collect()));
        let cols: Vec<SparseVec> = (0..6).map(|j| triple.column(j)).collect();
        assert_eq!(cols, [0, 3, 0, 3, 0, 3].map(SparseVec::unit).to_vec());
        let constant = lift_group_map(&z6, &GroupMap::constant(&z6, 0));
        assert!((0..6).all(|j| constant.get(0, j).is_one()));
        assert!((1..6).all(|i| (0..6).all(|j| constant.get(i, j).is_zero())));
    }
}
