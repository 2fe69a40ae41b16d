use super::HopfData;
use crate::check::{expect, expect_eq, for_all, for_all_pairs, for_all_triples, CheckReport, Witness};
use crate::linalg::{Accumulator, SparseVec};

/// Product in `H⊗H`: `(a⊗b)(c⊗d) = ac⊗bd`.
pub(crate) fn tensor_square_mul(h: &HopfData, s: &SparseVec, t: &SparseVec) -> SparseVec {
    let d = h.dim();
    let mut acc = Accumulator::new();
    for (k, x) in s.iter() {
        for (l, y) in t.iter() {
            let c = x * y;
            let (left, right) = (h.mult_basis(k / d, l / d), h.mult_basis(k % d, l % d));
            for (p, u) in left.iter() {
                for (q, v) in right.iter() {
                    acc.add_term(p * d + q, &(&c * u * v));
                }
            }
        }
    }
    acc.finish()
}

/// Every Hopf axiom on basis tuples, in a fixed order, each with the first
/// failing tuple.
pub fn verify_hopf(h: &HopfData) -> CheckReport {
    let d = h.dim();
    let e = SparseVec::unit;
    let mut report = CheckReport::new();

    report.push(
        "associativity",
        "(xy)z = x(yz)",
        for_all_triples(d, d, d, |i, j, k| {
            let lhs = h.mul(h.mult_basis(i, j), &e(k));
            let rhs = h.mul(&e(i), h.mult_basis(j, k));
            expect_eq(&lhs, &rhs, &[i, j, k])
        }),
    );
    report.push(
        "unit",
        "1x = x = x1",
        for_all(d, |i| {
            expect_eq(&h.mul(h.unit(), &e(i)), &e(i), &[i])?;
            expect_eq(&h.mul(&e(i), h.unit()), &e(i), &[i])
        }),
    );
    report.push(
        "coassociativity",
        "(Δ⊗id)Δ = (id⊗Δ)Δ",
        for_all(d, |i| {
            let (l, r) = (h.delta_n(&e(i), 2), h.delta_n_right(&e(i), 2));
            expect(l == r, &[i], || format!("left nesting {l:?}, right nesting {r:?}"))
        }),
    );
    report.push(
        "counit",
        "ε(x₁)x₂ = x = x₁ε(x₂)",
        for_all(d, |i| {
            let left = SparseVec::from_terms(h.comult_basis(i).iter().map(|(a, b, c)| (*b, c * h.counit_basis(*a))));
            let right = SparseVec::from_terms(h.comult_basis(i).iter().map(|(a, b, c)| (*a, c * h.counit_basis(*b))));
            expect_eq(&left, &e(i), &[i])?;
            expect_eq(&right, &e(i), &[i])
        }),
    );
    report.push(
        "coproduct multiplicative",
        "Δ(xy) = Δ(x)Δ(y)",
        for_all_pairs(d, d, |i, j| {
            let lhs = h.coproduct(h.mult_basis(i, j));
            let rhs = tensor_square_mul(h, &h.coproduct(&e(i)), &h.coproduct(&e(j)));
            expect_eq(&lhs, &rhs, &[i, j])
        }),
    );
    report.push("coproduct unital", "Δ(1) = 1⊗1", {
        let one = h.unit();
        let expected = SparseVec::from_terms(
            one.iter()
                .flat_map(|(a, x)| one.iter().map(move |(b, y)| (a * d + b, x * y))),
        );
        expect_eq(&h.coproduct(one), &expected, &[])
    });
    report.push(
        "counit multiplicative",
        "ε(xy) = ε(x)ε(y)",
        for_all_pairs(d, d, |i, j| {
            let lhs = h.counit(h.mult_basis(i, j));
            let rhs = h.counit_basis(i) * h.counit_basis(j);
            expect(lhs == rhs, &[i, j], || format!("ε(xy) = {lhs}, ε(x)ε(y) = {rhs}"))
        }),
    );
    report.push("counit unital", "ε(1) = 1", {
        let v = h.counit(h.unit());
        expect(v.is_one(), &[], || format!("ε(1) = {v}"))
    });
    report.push(
        "antipode",
        "S(x₁)x₂ = ε(x)1 = x₁S(x₂)",
        for_all(d, |i| {
            let expected = h.unit().scale(h.counit_basis(i));
            let mut left = Accumulator::new();
            let mut right = Accumulator::new();
            for (a, b, c) in h.comult_basis(i) {
                left.add_scaled(&h.mul(h.antipode().column(*a), &e(*b)), c);
                right.add_scaled(&h.mul(&e(*a), h.antipode().column(*b)), c);
            }
            expect_eq(&left.finish(), &expected, &[i])
                .map_err(|w| Witness::new(&w.at, format!("S(x₁)x₂: {}", w.detail)))?;
            expect_eq(&right.finish(), &expected, &[i])
                .map_err(|w| Witness::new(&w.at, format!("x₁S(x₂): {}", w.detail)))
        }),
    );
    report
}

/// `Δ = swap∘Δ` on every basis vector.
pub fn is_cocommutative(h: &HopfData) -> bool {
    cocommutativity_witness(h).is_none()
}

pub(crate) fn cocommutativity_witness(h: &HopfData) -> Option<Witness> {
    let d = h.dim();
    (0..d).find_map(|i| {
        let delta = h.coproduct(&SparseVec::unit(i));
        let swapped = SparseVec::from_terms(delta.iter().map(|(k, c)| ((k % d) * d + k / d, c.clone())));
        (delta != swapped).then(|| Witness::new(&[i], format!("Δ = {delta}, swapped = {swapped}")))
    })
}

/// Errors with [`crate::Error::NotCocommutative`] unless `h` is cocommutative.
pub(crate) fn require_cocommutative(h: &HopfData) -> crate::Result<()> {
    match cocommutativity_witness(h) {
        None => Ok(()),
        Some(w) => Err(crate::Error::NotCocommutative(w)),
    }
}
