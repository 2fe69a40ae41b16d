use proptest::prelude::*;

use rbhopf::group::{catalog, enumerate_group_rb, group_rb_check, tilde_group_map, GroupMap, GroupTable};
use rbhopf::hopf::{group_algebra, group_likes, lift_group_map, tensor_product, verify_hopf, SubHopf};
use rbhopf::linalg::{image_basis, kernel_basis, section_of, LinearMap, Matrix, Rational, SparseVec, Subspace};
use rbhopf::matched_pair::{double_cross, MatchedPairData};
use rbhopf::report::{verify_operator, Stage};
use rbhopf::rota_baxter::{derive_all, rb_identity_check, s_b, star_product, tilde_map, RBOperator};

fn small_groups() -> Vec<GroupTable> {
    catalog().into_iter().filter(|g| g.order() <= 8).collect()
}

fn rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| Rational::new(n, d))
}

fn matrix(max: usize) -> impl Strategy<Value = Matrix> {
    (1..=max, 1..=max).prop_flat_map(|(r, c)| {
        // sparse entries so that rank deficiency shows up often
        prop::collection::vec(prop_oneof![3 => Just(Rational::zero()), 2 => rational()], r * c)
            .prop_map(move |v| Matrix::from_fn(r, c, |i, j| v[i * c + j].clone()))
    })
}

fn element(dim: usize) -> impl Strategy<Value = SparseVec> {
    prop::collection::vec(rational(), dim).prop_map(|v| SparseVec::from_dense(&v))
}

/// A catalog group of order at most 8 with one of its operators.
fn operator() -> impl Strategy<Value = (GroupTable, GroupMap)> {
    let groups = small_groups();
    (0..groups.len(), any::<prop::sample::Index>()).prop_map(move |(gi, pick)| {
        let g = groups[gi].clone();
        let ops = enumerate_group_rb(&g, 12).unwrap();
        let f = ops[pick.index(ops.len())].clone();
        (g, f)
    })
}

fn group_and_map() -> impl Strategy<Value = (GroupTable, GroupMap)> {
    let groups = small_groups();
    (0..groups.len()).prop_flat_map(move |gi| {
        let g = groups[gi].clone();
        let n = g.order();
        prop::collection::vec(0..n, n).prop_map(move |v| (g.clone(), GroupMap::new(v)))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rational_field_laws(a in rational(), b in rational(), c in rational()) {
        prop_assert_eq!((a.clone() + b.clone()) + c.clone(), a.clone() + (b.clone() + c.clone()));
        prop_assert_eq!(a.clone() * (b.clone() + c.clone()), a.clone() * b.clone() + a.clone() * c.clone());
        prop_assert_eq!(a.clone() - a.clone(), Rational::zero());
        if !a.is_zero() {
            prop_assert!((a.clone() * a.recip()).is_one());
        }
        prop_assert_eq!(a.to_string().parse::<Rational>().unwrap(), a);
    }

    #[test]
    fn rank_nullity(m in matrix(6)) {
        prop_assert_eq!(kernel_basis(&m).dim() + image_basis(&m).dim(), m.cols());
        prop_assert_eq!(image_basis(&m).dim(), m.rank());
        for v in kernel_basis(&m).basis() {
            prop_assert!(m.apply(v).is_zero());
        }
    }

    #[test]
    fn echelon_basis_is_canonical(m in matrix(5), mix in prop::collection::vec(rational(), 25)) {
        // the span of the columns equals the span of invertible-ish mixtures of them
        let cols = m.columns();
        let mut mixed: Vec<SparseVec> = cols.clone();
        for (k, c) in mix.iter().enumerate() {
            let (i, j) = (k % cols.len(), (k / cols.len()) % cols.len());
            if i != j {
                mixed[i] = mixed[i].add(&mixed[j].scale(c));
            }
        }
        let a = Subspace::span(m.rows(), &cols);
        let b = Subspace::span(m.rows(), &mixed);
        prop_assert_eq!(a.basis(), b.basis());
        prop_assert_eq!(a, b);
    }

    #[test]
    fn sections_invert_on_the_image(m in matrix(6)) {
        let onto = image_basis(&m);
        let sigma = section_of(&m, &onto).unwrap();
        // σ takes coordinates on the echelon basis of the image
        for (k, v) in onto.basis().iter().enumerate() {
            prop_assert_eq!(&m.apply(&sigma.column(k)), v);
        }
    }

    #[test]
    fn group_check_matches_linear_identity((g, f) in group_and_map()) {
        let h = group_algebra(&g);
        let linear = rb_identity_check(&h, &LinearMap::new(lift_group_map(&g, &f)));
        prop_assert_eq!(group_rb_check(&g, &f).is_ok(), linear.is_ok());
    }

    #[test]
    fn enumerated_operators((g, f) in operator()) {
        prop_assert!(group_rb_check(&g, &f).is_ok());
        prop_assert_eq!(f.apply(g.identity()), g.identity());
        let t = tilde_group_map(&g, &f);
        prop_assert!(group_rb_check(&g, &t).is_ok());
        prop_assert_eq!(tilde_group_map(&g, &t), f);
    }

    #[test]
    fn companion_is_an_involution((g, f) in operator()) {
        let h = group_algebra(&g);
        let b = LinearMap::new(lift_group_map(&g, &f));
        let tt = tilde_map(&h, &tilde_map(&h, &b));
        prop_assert_eq!(tt.matrix(), b.matrix());
    }

    #[test]
    fn descendent_product_on_arbitrary_elements(
        (g, f) in operator(),
        seed in prop::collection::vec(rational(), 24),
    ) {
        let rb = RBOperator::from_group_map(&g, &f).unwrap();
        let d = derive_all(&rb).unwrap();
        let (h, b) = (d.algebra(), d.b());
        let n = h.dim();
        let x = SparseVec::from_dense(&seed[..n]);
        let y = SparseVec::from_dense(&seed[n..2 * n]);
        let z = SparseVec::from_dense(&seed[2 * n..3 * n]);
        let hb = &d.descendent;
        // the descendent product on general elements is the bilinear one
        prop_assert_eq!(star_product(h, b, &x, &y), hb.mul(&x, &y));
        prop_assert_eq!(hb.mul(&hb.mul(&x, &y), &z), hb.mul(&x, &hb.mul(&y, &z)));
        // B is multiplicative from H_B to H
        prop_assert_eq!(b.apply(&hb.mul(&x, &y)), h.mul(&b.apply(&x), &b.apply(&y)));
        // S_B is an antipode: x₁ *_B S_B(x₂) = ε(x)1
        let conv = h.sweedler(&x, 2, |l| hb.mul(&SparseVec::unit(l[0]), &s_b(h, b, &SparseVec::unit(l[1]))));
        prop_assert_eq!(conv, h.unit().scale(&h.counit(&x)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn group_algebras_are_hopf(gi in 0..catalog().len()) {
        let g = &catalog()[gi];
        let h = group_algebra(g);
        prop_assert!(verify_hopf(&h).passed());
        let s = h.antipode().matrix();
        prop_assert!(s.mul(s).unwrap().is_identity());
        if g.order() <= 12 {
            prop_assert_eq!(group_likes(&h).unwrap().len(), g.order());
        }
        let full = SubHopf::from_subspace(&h, &Subspace::full(h.dim())).unwrap();
        prop_assert_eq!(full.induced(), &h);
    }

    #[test]
    fn trivial_double_cross_is_the_tensor_product(a in 0usize..8, b in 0usize..8) {
        let groups = small_groups();
        let (ha, hb) = (group_algebra(&groups[a % groups.len()]), group_algebra(&groups[b % groups.len()]));
        let d = double_cross(&MatchedPairData::trivial(&ha, &hb)).unwrap();
        prop_assert_eq!(d.hopf(), &tensor_product(&hb, &ha));
        prop_assert_eq!(d.dim(), ha.dim() * hb.dim());
    }

    #[test]
    fn reports_are_deterministic((g, f) in operator()) {
        let strip = |mut r: rbhopf::report::VerificationReport| { r.timing = None; r };
        let a = strip(verify_operator(&g, &f, &Stage::ALL).unwrap());
        let b = strip(verify_operator(&g, &f, &Stage::ALL).unwrap());
        prop_assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
    }

    #[test]
    fn double_cross_dimension_and_cocommutativity((g, f) in operator(), x in element(8)) {
        let rb = RBOperator::from_group_map(&g, &f).unwrap();
        let d = derive_all(&rb).unwrap();
        let (rbmp, _) = rbhopf::matched_pair::mp_from_rb_with_report(&d).unwrap();
        prop_assert_eq!(rbmp.double.dim(), d.h_plus.dim() * d.h_minus.dim());
        prop_assert!(rbhopf::hopf::is_cocommutative(rbmp.double.hopf()));
        let x = SparseVec::from_terms(x.iter().filter(|(i, _)| *i < g.order()).map(|(i, c)| (i, c.clone())));
        // B̃ lands in H₋ and B in H₊
        prop_assert!(d.h_minus.space().contains(&d.tilde.apply(&x)));
        prop_assert!(d.h_plus.space().contains(&d.b().apply(&x)));
    }
}
