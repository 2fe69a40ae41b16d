//! Projection pairs on double cross products, the pair `(C, C̃)` built from a
//! weight −1 operator, and the maps `φ` and `π` out of `H`.
//!
//! Elements of `H₋⋈H₊` are written `(a, x)` with `a ∈ H₋`, `x ∈ H₊`.

use crate::check::{expect, expect_eq, for_all, for_all_pairs, Check, CheckReport, Witness};
use crate::error::{Error, Result};
use crate::hopf::{coalgebra_map_check, hopf_hom_check, HopfData, SubHopf};
use crate::linalg::{image_basis, kernel_basis, Accumulator, LinearMap, Matrix, Rational, SparseVec, Subspace};
use crate::matched_pair::{companion_pair_map, DoubleCross, RBMatchedPair};
use crate::rota_baxter::{rb_check, rb_identity_check, star_product, tilde_map};

/// Two endomorphisms `p`, `p̃` of a double cross product.
#[derive(Clone, Debug)]
pub struct ProjectionPair {
    pub ambient: DoubleCross,
    pub p: Matrix,
    pub p_tilde: Matrix,
}

impl ProjectionPair {
    /// The same pair with the roles of `p` and `p̃` exchanged.
    pub fn swapped(&self) -> ProjectionPair {
        ProjectionPair {
            ambient: self.ambient.clone(),
            p: self.p_tilde.clone(),
            p_tilde: self.p.clone(),
        }
    }
}

/// A weight −1 operator on a Hopf subalgebra of a double cross product.
#[derive(Clone, Debug)]
pub struct InducedRB {
    pub carrier: SubHopf,
    /// On the carrier's echelon basis.
    pub operator: Matrix,
}

/// A linear map between two Hopf algebras with operators.
#[derive(Clone, Debug)]
pub struct RBMorphism {
    pub src: HopfData,
    pub src_operator: Matrix,
    pub dst: HopfData,
    pub dst_operator: Matrix,
    pub map: Matrix,
}

impl RBMorphism {
    /// Hopf homomorphism conditions.
    pub fn hom_check(&self) -> Result<Check> {
        Ok(hopf_hom_check(&self.src, &self.dst, &self.map)?.into_check())
    }

    /// `f∘B = B′∘f`.
    pub fn intertwining_check(&self) -> Result<Check> {
        Ok(matrices_equal(
            &self.map.mul(&self.src_operator)?,
            &self.dst_operator.mul(&self.map)?,
        ))
    }

    pub fn rank(&self) -> usize {
        self.map.rank()
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.dst.dim()
    }

    pub fn is_bijective(&self) -> bool {
        self.is_surjective() && self.rank() == self.src.dim()
    }
}

fn matrices_equal(a: &Matrix, b: &Matrix) -> Check {
    for_all(a.cols(), |j| expect_eq(&a.column(j), &b.column(j), &[j]))
}

fn square_shape(d: &DoubleCross, m: &Matrix) -> Result<()> {
    if m.rows() != d.dim() || m.cols() != d.dim() {
        return Err(Error::Shape(format!(
            "map is {}x{}, the double cross product has dimension {}",
            m.rows(),
            m.cols(),
            d.dim()
        )));
    }
    Ok(())
}

/// Coalgebra map satisfying the weight −1 identity. Unlike
/// [`rb_check`] this does not require a cocommutative algebra.
fn operator_check(h: &HopfData, m: &Matrix) -> Result<Check> {
    Ok(coalgebra_map_check(h, h, m)?.and_then(|()| rb_identity_check(h, &LinearMap::new(m.clone()))))
}

/// `Σ p(x₁)q(x₂)` on basis vector `i`.
fn convolve(h: &HopfData, p: &LinearMap, q: &LinearMap, i: usize) -> SparseVec {
    h.sweedler(&SparseVec::unit(i), 2, |l| h.mul(p.column(l[0]), q.column(l[1])))
}

/// Idempotency, Hopf endomorphism and `p(x₁)q(x₂) = x`, each with its
/// first failing basis vector.
pub fn proj_pair_check(d: &DoubleCross, p: &Matrix, q: &Matrix) -> Result<CheckReport> {
    square_shape(d, p)?;
    square_shape(d, q)?;
    let h = d.hopf();
    let mut report = CheckReport::new();
    report.push(
        "first projection is idempotent",
        "p∘p = p",
        matrices_equal(&p.mul(p)?, p),
    );
    report.push(
        "second projection is idempotent",
        "p̃∘p̃ = p̃",
        matrices_equal(&q.mul(q)?, q),
    );
    report.push(
        "first projection is a hopf endomorphism",
        "p preserves every Hopf operation",
        hopf_hom_check(h, h, p)?.into_check(),
    );
    report.push(
        "second projection is a hopf endomorphism",
        "p̃ preserves every Hopf operation",
        hopf_hom_check(h, h, q)?.into_check(),
    );
    let (pl, ql) = (LinearMap::new(p.clone()), LinearMap::new(q.clone()));
    report.push(
        "projections factor the identity",
        "p(x₁)p̃(x₂) = x",
        for_all(h.dim(), |i| {
            expect_eq(&convolve(h, &pl, &ql, i), &SparseVec::unit(i), &[i])
        }),
    );
    Ok(report)
}

/// Consequences of being a projection pair: both maps are operators, they
/// annihilate each other, and the factorization also holds reversed.
pub fn dmp_check(pp: &ProjectionPair) -> Result<CheckReport> {
    let d = &pp.ambient;
    square_shape(d, &pp.p)?;
    square_shape(d, &pp.p_tilde)?;
    let h = d.hopf();
    let ue = h.unit_counit();
    let (p_then_q, q_then_p) = (pp.p.mul(&pp.p_tilde)?, pp.p_tilde.mul(&pp.p)?);
    let mut report = CheckReport::new();
    report.push(
        "first projection is rota-baxter",
        "p is a weight −1 operator on the double cross product",
        operator_check(h, &pp.p)?,
    );
    report.push(
        "second projection is rota-baxter",
        "p̃ is a weight −1 operator on the double cross product",
        operator_check(h, &pp.p_tilde)?,
    );
    report.push(
        "projections annihilate each other",
        "p∘p̃ = p̃∘p = u∘ε",
        matrices_equal(&p_then_q, ue.matrix()).and_then(|()| matrices_equal(&q_then_p, ue.matrix())),
    );
    let (pl, ql) = (LinearMap::new(pp.p.clone()), LinearMap::new(pp.p_tilde.clone()));
    report.push(
        "reversed factorization",
        "p̃(x₁)p(x₂) = x",
        for_all(h.dim(), |i| {
            expect_eq(&convolve(h, &ql, &pl, i), &SparseVec::unit(i), &[i])
        }),
    );
    Ok(report)
}

/// Both sides of the commuting-images criterion for an idempotent Hopf
/// endomorphism `p`, with `q(x) = x₁p(S(x₂))`.
#[derive(Clone, Debug)]
pub struct CommutingImages {
    /// `q(x) = x₁p(S(x₂))`.
    pub q: Matrix,
    /// `(p, q)` passes [`proj_pair_check`].
    pub is_projection_pair: bool,
    /// First failing projection-pair condition.
    pub pair_failure: Option<Witness>,
    /// `p(v)q(w) = q(w)p(v)` for all basis `v`, `w`.
    pub images_commute: bool,
    pub commute_failure: Option<Witness>,
}

impl CommutingImages {
    /// The two statements agree.
    pub fn equivalent(&self) -> bool {
        self.is_projection_pair == self.images_commute
    }
}

pub fn cmm_check(d: &DoubleCross, p: &Matrix) -> Result<CommutingImages> {
    square_shape(d, p)?;
    let h = d.hopf();
    let pl = LinearMap::new(p.clone());
    let q = tilde_map(h, &pl).matrix().clone();
    let report = proj_pair_check(d, p, &q)?;
    let pair_failure = report.as_check().err();
    let ql = LinearMap::new(q.clone());
    let commute = for_all_pairs(h.dim(), h.dim(), |v, w| {
        let lhs = h.mul(pl.column(v), ql.column(w));
        let rhs = h.mul(ql.column(w), pl.column(v));
        expect_eq(&lhs, &rhs, &[v, w])
    });
    Ok(CommutingImages {
        q,
        is_projection_pair: pair_failure.is_none(),
        pair_failure,
        images_commute: commute.is_ok(),
        commute_failure: commute.err(),
    })
}

/// `C((a, x)) = p((a, ε(x)1))` on `K = Im p`.
pub fn rbp_operator(pp: &ProjectionPair) -> Result<InducedRB> {
    let d = &pp.ambient;
    square_shape(d, &pp.p)?;
    let h = d.hopf();
    let acting = d.pair().left();
    let first_leg = LinearMap::from_columns(
        d.dim(),
        (0..d.dim())
            .map(|k| {
                let (a, x) = d.split(k);
                d.embed(&SparseVec::unit(a), acting.unit())
                    .scale(acting.counit_basis(x))
            })
            .collect(),
    );
    let carrier = SubHopf::from_subspace(h, &image_basis(&pp.p))?;
    let p = LinearMap::new(pp.p.clone());
    let mut cols = Vec::with_capacity(carrier.dim());
    for (k, v) in carrier.space().basis().iter().enumerate() {
        let image = p.apply(&first_leg.apply(v));
        cols.push(carrier.coords(&image).ok_or_else(|| Error::Identity {
            name: "induced operator preserves the image".into(),
            witness: Witness::new(&[k], format!("C({v}) = {image} leaves Im p")),
        })?);
    }
    let operator = Matrix::from_columns(carrier.dim(), &cols);
    rb_check(carrier.induced(), &operator)?.map_err(|witness| Error::Identity {
        name: "induced operator is rota-baxter".into(),
        witness,
    })?;
    Ok(InducedRB { carrier, operator })
}

/// Formula evaluation over `H`, with results assembled in `H₋⋈H₊`.
struct Formulas<'a> {
    rbmp: &'a RBMatchedPair,
    h: &'a HopfData,
    b: &'a LinearMap,
    t: &'a LinearMap,
}

impl<'a> Formulas<'a> {
    fn new(rbmp: &'a RBMatchedPair) -> Self {
        let d = &rbmp.source;
        Formulas {
            rbmp,
            h: d.algebra(),
            b: d.b(),
            t: &d.tilde,
        }
    }

    fn b(&self, v: &SparseVec) -> SparseVec {
        self.b.apply(v)
    }

    fn t(&self, v: &SparseVec) -> SparseVec {
        self.t.apply(v)
    }

    fn s(&self, v: &SparseVec) -> SparseVec {
        self.h.s(v)
    }

    fn mul(&self, a: &SparseVec, b: &SparseVec) -> SparseVec {
        self.h.mul(a, b)
    }

    /// `S(B(S(v)))`.
    fn sbs(&self, v: &SparseVec) -> SparseVec {
        self.s(&self.b(&self.s(v)))
    }

    fn minus(&self, v: &SparseVec) -> SparseVec {
        self.rbmp.source.h_minus.coords(v).expect("value lies in Im B̃")
    }

    fn plus(&self, v: &SparseVec) -> SparseVec {
        self.rbmp.source.h_plus.coords(v).expect("value lies in Im B")
    }

    /// `(a, x) ∈ H₋⋈H₊` from `a ∈ H₋`, `x ∈ H₊` given in `H`.
    fn pair(&self, a: &SparseVec, x: &SparseVec) -> SparseVec {
        self.rbmp.double.embed(&self.minus(a), &self.plus(x))
    }

    /// `x ▷ a` in `H`, for `x ∈ H₊`, `a ∈ H₋`.
    fn act(&self, x: &SparseVec, a: &SparseVec) -> SparseVec {
        let v = self.rbmp.pair.act(&self.plus(x), &self.minus(a));
        self.rbmp.source.h_minus.embed(&v)
    }

    /// `x ◁ a` in `H`.
    fn react(&self, x: &SparseVec, a: &SparseVec) -> SparseVec {
        let v = self.rbmp.pair.react(&self.plus(x), &self.minus(a));
        self.rbmp.source.h_plus.embed(&v)
    }

    fn sw2(&self, x: &SparseVec, mut f: impl FnMut(&SparseVec, &SparseVec) -> SparseVec) -> SparseVec {
        self.h
            .sweedler(x, 2, |l| f(&SparseVec::unit(l[0]), &SparseVec::unit(l[1])))
    }

    /// `C((B̃(x), B(y))) = (B̃(B̃(x₁)B(y₁)), SBS(B̃(x₂)B(y₂)))`.
    fn c(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        self.sw2(x, |x1, x2| {
            self.sw2(y, |y1, y2| {
                let first = self.t(&self.mul(&self.t(x1), &self.b(y1)));
                let second = self.sbs(&self.mul(&self.t(x2), &self.b(y2)));
                self.pair(&first, &second)
            })
        })
    }

    /// `C̃((B̃(x), B(y))) = (B̃(S(B(S(x₁))B(y₁))), S(B(B̃(x₂)B̃(S(y₂)))))`.
    fn c_tilde(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        self.sw2(x, |x1, x2| {
            self.sw2(y, |y1, y2| {
                let first = self.t(&self.s(&self.mul(&self.b(&self.s(x1)), &self.b(y1))));
                let second = self.s(&self.b(&self.mul(&self.t(x2), &self.t(&self.s(y2)))));
                self.pair(&first, &second)
            })
        })
    }

    /// `(B̃(x), B(y))`.
    fn element(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        self.pair(&self.t(x), &self.b(y))
    }
}

/// Materializes `f` on the basis of `H₋⋈H₊` through the given sections.
fn materialize(
    rbmp: &RBMatchedPair,
    sigma_minus: &Matrix,
    sigma_plus: &Matrix,
    f: impl Fn(&SparseVec, &SparseVec) -> SparseVec,
) -> Matrix {
    let d = &rbmp.double;
    let cols: Vec<SparseVec> = (0..d.dim())
        .map(|k| {
            let (a, x) = d.split(k);
            f(&sigma_minus.column(a), &sigma_plus.column(x))
        })
        .collect();
    Matrix::from_columns(d.dim(), &cols)
}

/// Adds a combination of `kernel` vectors to every column of `sigma`.
fn perturb(sigma: &Matrix, kernel: &Subspace) -> Matrix {
    let cols: Vec<SparseVec> = (0..sigma.cols())
        .map(|j| {
            let mut acc = Accumulator::new();
            acc.add(&sigma.column(j));
            for (t, k) in kernel.basis().iter().enumerate() {
                acc.add_scaled(k, &Rational::from_int((2 * j + t + 1) as i64));
            }
            acc.finish()
        })
        .collect();
    Matrix::from_columns(sigma.rows(), &cols)
}

fn span_of_columns(m: &LinearMap) -> Subspace {
    Subspace::span(m.rows(), (0..m.cols()).map(|j| m.column(j)))
}

fn same_subspace(a: &Subspace, b: &Subspace) -> Check {
    if let Some(v) = a.basis().iter().find(|v| !b.contains(v)) {
        return Err(Witness::new(&[], format!("{v} is only in the first space")));
    }
    if let Some(v) = b.basis().iter().find(|v| !a.contains(v)) {
        return Err(Witness::new(&[], format!("{v} is only in the second space")));
    }
    Ok(())
}

/// Builds `(C, C̃)` on `H₋⋈H₊` and runs every check on it.
pub fn c_pair_with_report(rbmp: &RBMatchedPair) -> Result<(ProjectionPair, CheckReport)> {
    let f = Formulas::new(rbmp);
    let src = &rbmp.source;
    let c = materialize(rbmp, &rbmp.sigma_minus, &rbmp.sigma_plus, |x, y| f.c(x, y));
    let ct = materialize(rbmp, &rbmp.sigma_minus, &rbmp.sigma_plus, |x, y| f.c_tilde(x, y));
    let (sm, sp) = (
        perturb(&rbmp.sigma_minus, &src.k_plus),
        perturb(&rbmp.sigma_plus, &src.k_minus),
    );
    let c2 = materialize(rbmp, &sm, &sp, |x, y| f.c(x, y));
    let ct2 = materialize(rbmp, &sm, &sp, |x, y| f.c_tilde(x, y));

    let mut report = CheckReport::new();
    report.push(
        "projections independent of representatives",
        "adding ker B̃ and ker B to the representatives leaves C and C̃ unchanged",
        matrices_equal(&c, &c2)
            .map_err(|w| Witness::new(&w.at, format!("C: {}", w.detail)))
            .and_then(|()| matrices_equal(&ct, &ct2).map_err(|w| Witness::new(&w.at, format!("C̃: {}", w.detail)))),
    );
    let pp = ProjectionPair {
        ambient: rbmp.double.clone(),
        p: c,
        p_tilde: ct,
    };
    report.extend(proj_pair_check(&pp.ambient, &pp.p, &pp.p_tilde)?);
    report.extend(dmp_check(&pp)?);

    let h = f.h;
    let e = SparseVec::unit;
    let dh = pp.ambient.hopf();
    let (cl, ctl) = (LinearMap::new(pp.p.clone()), LinearMap::new(pp.p_tilde.clone()));
    report.push(
        "factorization in both orders",
        "C((B̃(x₁),B(y₁)))C̃((B̃(x₂),B(y₂))) = C̃((B̃(x₁),B(y₁)))C((B̃(x₂),B(y₂))) = (B̃(x),B(y))",
        for_all_pairs(h.dim(), h.dim(), |i, j| {
            let target = f.element(&e(i), &e(j));
            let mut forward = Accumulator::new();
            let mut backward = Accumulator::new();
            for (x1, x2, cx) in h.comult_basis(i) {
                for (y1, y2, cy) in h.comult_basis(j) {
                    let first = f.element(&e(*x1), &e(*y1));
                    let second = f.element(&e(*x2), &e(*y2));
                    let coeff = cx * cy;
                    forward.add_scaled(&dh.mul(&cl.apply(&first), &ctl.apply(&second)), &coeff);
                    backward.add_scaled(&dh.mul(&ctl.apply(&first), &cl.apply(&second)), &coeff);
                }
            }
            expect_eq(&forward.finish(), &target, &[i, j])
                .map_err(|w| Witness::new(&w.at, format!("C then C̃: {}", w.detail)))?;
            expect_eq(&backward.finish(), &target, &[i, j])
                .map_err(|w| Witness::new(&w.at, format!("C̃ then C: {}", w.detail)))
        }),
    );
    let cmm = cmm_check(&pp.ambient, &pp.p)?;
    report.push(
        "commuting images",
        "with p̃(x) = x₁C(S(x₂)), (C, p̃) is a projection pair iff Im C and Im p̃ commute; both hold and p̃ = C̃",
        expect(cmm.equivalent(), &[], || {
            format!(
                "projection pair: {}, images commute: {}",
                cmm.is_projection_pair, cmm.images_commute
            )
        })
        .and_then(|()| cmm.pair_failure.clone().map_or(Ok(()), Err))
        .and_then(|()| cmm.commute_failure.clone().map_or(Ok(()), Err))
        .and_then(|()| matrices_equal(&cmm.q, &pp.p_tilde)),
    );
    report.push(
        "image of C",
        "Im C = {(B̃(x₁), S(B(S(x₂))))}",
        same_subspace(&image_basis(&pp.p), &span_of_columns(&companion_pair_map(rbmp))),
    );
    let family = LinearMap::from_columns(
        dh.dim(),
        (0..h.dim())
            .map(|i| f.sw2(&e(i), |x1, x2| f.pair(&f.t(&f.sbs(x1)), &f.s(&f.b(&f.t(x2))))))
            .collect(),
    );
    report.push(
        "image of C̃",
        "Im C̃ = {(B̃(S(B(S(x₁)))), S(B(B̃(x₂))))}",
        same_subspace(&image_basis(&pp.p_tilde), &span_of_columns(&family)),
    );
    Ok((pp, report))
}

/// `(C, C̃)`, failing on the first check that does not hold.
pub fn build_c_pair(rbmp: &RBMatchedPair) -> Result<ProjectionPair> {
    let (pp, report) = c_pair_with_report(rbmp)?;
    report.into_result()?;
    Ok(pp)
}

/// The auxiliary identities behind `(C, C̃)`, on all basis pairs `x`, `y`.
pub fn lemma_suite(rbmp: &RBMatchedPair) -> CheckReport {
    let f = Formulas::new(rbmp);
    let h = f.h;
    let dh = rbmp.double.hopf();
    let e = SparseVec::unit;
    let n = h.dim();
    let mut report = CheckReport::new();

    // B̃(S(y)S(B(S(x)))) and S(B(yB̃(x)))
    let left_target = |x: &SparseVec, y: &SparseVec| f.t(&f.mul(&f.s(y), &f.sbs(x)));
    let right_target = |x: &SparseVec, y: &SparseVec| f.s(&f.b(&f.mul(y, &f.t(x))));

    report.push(
        "left action through S∘B∘B̃",
        "B̃(S(B(S(x₁))))(S(B(B̃(x₂)))▷B̃(S(y))) = B̃(S(y)S(B(S(x))))",
        for_all_pairs(n, n, |i, j| {
            let (x, y) = (e(i), e(j));
            let lhs = f.sw2(&x, |x1, x2| {
                f.mul(&f.t(&f.sbs(x1)), &f.act(&f.s(&f.b(&f.t(x2))), &f.t(&f.s(&y))))
            });
            expect_eq(&lhs, &left_target(&x, &y), &[i, j])
        }),
    );
    report.push(
        "left action through S∘B",
        "B̃(S(y₁))(S(B(y₂))▷B̃(S(B(S(x))))) = B̃(S(y)S(B(S(x))))",
        for_all_pairs(n, n, |i, j| {
            let (x, y) = (e(i), e(j));
            let lhs = f.sw2(&y, |y1, y2| {
                f.mul(&f.t(&f.s(y1)), &f.act(&f.s(&f.b(y2)), &f.t(&f.sbs(&x))))
            });
            expect_eq(&lhs, &left_target(&x, &y), &[i, j])
        }),
    );
    report.push(
        "right action through S∘B∘B̃",
        "(S(B(B̃(x)))◁B̃(S(y₁)))S(B(y₂)) = S(B(yB̃(x)))",
        for_all_pairs(n, n, |i, j| {
            let (x, y) = (e(i), e(j));
            let lhs = f.sw2(&y, |y1, y2| {
                f.mul(&f.react(&f.s(&f.b(&f.t(&x))), &f.t(&f.s(y1))), &f.s(&f.b(y2)))
            });
            expect_eq(&lhs, &right_target(&x, &y), &[i, j])
        }),
    );
    report.push(
        "right action through S∘B",
        "(S(B(y))◁B̃(S(B(S(x₁)))))S(B(B̃(x₂))) = S(B(yB̃(x)))",
        for_all_pairs(n, n, |i, j| {
            let (x, y) = (e(i), e(j));
            let lhs = f.sw2(&x, |x1, x2| {
                f.mul(&f.react(&f.s(&f.b(&y)), &f.t(&f.sbs(x1))), &f.s(&f.b(&f.t(x2))))
            });
            expect_eq(&lhs, &right_target(&x, &y), &[i, j])
        }),
    );
    report.push(
        "commuting pair elements",
        "(B̃(S(B(S(x₁)))), S(B(B̃(x₂))))(B̃(S(y₁)), S(B(y₂))) = (B̃(S(y₁)), S(B(y₂)))(B̃(S(B(S(x₁)))), S(B(B̃(x₂))))",
        for_all_pairs(n, n, |i, j| {
            let (x, y) = (e(i), e(j));
            let p = f.sw2(&x, |x1, x2| f.pair(&f.t(&f.sbs(x1)), &f.s(&f.b(&f.t(x2)))));
            let q = f.sw2(&y, |y1, y2| f.pair(&f.t(&f.s(y1)), &f.s(&f.b(y2))));
            expect_eq(&dh.mul(&p, &q), &dh.mul(&q, &p), &[i, j])
        }),
    );

    let src = &rbmp.source;
    let (b, t) = (src.b(), &src.tilde);
    report.push(
        "second projection through descendent products",
        "C̃((B̃(x),B(y))) = (B̃(S(B(S(y₁))B(x₁))), S(B(B̃(y₂)B̃(S(x₂))))) \
         = (B̃(S(B(S(y₁) *_B x₁))), S(B(B̃(y₂ *_B̃ S(x₂))))) \
         = (B̃(S(B(S(y₁ *_B̃ S(x₁))))), S(B(B̃(y₂ *_B̃ S(x₂)))))",
        for_all_pairs(n, n, |i, j| {
            let (x, y) = (e(i), e(j));
            let c_tilde = f.c_tilde(&x, &y);
            let first = f.sw2(&x, |x1, x2| {
                f.sw2(&y, |y1, y2| {
                    f.pair(
                        &f.t(&f.s(&f.mul(&f.b(&f.s(y1)), &f.b(x1)))),
                        &f.s(&f.b(&f.mul(&f.t(y2), &f.t(&f.s(x2))))),
                    )
                })
            });
            let second = f.sw2(&x, |x1, x2| {
                f.sw2(&y, |y1, y2| {
                    f.pair(
                        &f.t(&f.s(&f.b(&star_product(h, b, &f.s(y1), x1)))),
                        &f.s(&f.b(&f.t(&star_product(h, t, y2, &f.s(x2))))),
                    )
                })
            });
            let third = f.sw2(&x, |x1, x2| {
                f.sw2(&y, |y1, y2| {
                    f.pair(
                        &f.t(&f.sbs(&star_product(h, t, y1, &f.s(x1)))),
                        &f.s(&f.b(&f.t(&star_product(h, t, y2, &f.s(x2))))),
                    )
                })
            });
            let tag = |label: &'static str| move |w: Witness| Witness::new(&w.at, format!("{label}: {}", w.detail));
            expect_eq(&c_tilde, &first, &[i, j]).map_err(tag("C̃ vs first form"))?;
            expect_eq(&first, &second, &[i, j]).map_err(tag("first vs second form"))?;
            expect_eq(&second, &third, &[i, j]).map_err(tag("second vs third form"))
        }),
    );
    report
}

/// `φ(x) = (B̃(x₁), S(B(S(x₂))))` into `H₋⋈H₊`.
pub fn phi_map(rbmp: &RBMatchedPair) -> LinearMap {
    companion_pair_map(rbmp)
}

/// `π(x) = (B̃(S(B(x₁))), S(B(B̃(S(x₂)))))` into `H₋⋈H₊`.
pub fn pi_map(rbmp: &RBMatchedPair) -> LinearMap {
    let f = Formulas::new(rbmp);
    let e = SparseVec::unit;
    LinearMap::from_columns(
        rbmp.double.dim(),
        (0..f.h.dim())
            .map(|i| f.sw2(&e(i), |x1, x2| f.pair(&f.t(&f.s(&f.b(x1))), &f.s(&f.b(&f.t(&f.s(x2)))))))
            .collect(),
    )
}

/// Coordinates of every column of `m` in `sub`.
fn corestrict(m: &LinearMap, sub: &SubHopf, what: &str) -> Result<Matrix> {
    let cols = (0..m.cols())
        .map(|j| {
            sub.coords(m.column(j)).ok_or_else(|| Error::Identity {
                name: format!("{what} lands in its target"),
                witness: Witness::new(&[j], format!("value {}", m.column(j))),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Matrix::from_columns(sub.dim(), &cols))
}

/// The operator `x₁B(S(x₂))` on `h`.
fn companion_on(h: &HopfData, m: &Matrix) -> Matrix {
    tilde_map(h, &LinearMap::new(m.clone())).matrix().clone()
}

/// The two isomorphisms carried by `φ: H → Im C`.
#[derive(Clone, Debug)]
pub struct PhiIso {
    /// `(H, B̃) → (H₁, B₁)`.
    pub to_b1: RBMorphism,
    /// `(H, B) → (H₁, B̃₁)`.
    pub to_b1_tilde: RBMorphism,
}

/// Builds `φ`, `B₁`, `B̃₁` and checks both isomorphisms.
pub fn phi_iso_with_report(rbmp: &RBMatchedPair, pp: &ProjectionPair) -> Result<(PhiIso, CheckReport)> {
    let src = &rbmp.source;
    let h = src.algebra();
    let induced = rbp_operator(pp)?;
    let h1 = induced.carrier.induced();
    let phi = corestrict(&phi_map(rbmp), &induced.carrier, "φ")?;
    let b1 = induced.operator.clone();
    let b1_tilde = companion_on(h1, &b1);
    let to_b1 = RBMorphism {
        src: h.clone(),
        src_operator: src.tilde.matrix().clone(),
        dst: h1.clone(),
        dst_operator: b1.clone(),
        map: phi.clone(),
    };
    let to_b1_tilde = RBMorphism {
        src: h.clone(),
        src_operator: src.b().matrix().clone(),
        dst: h1.clone(),
        dst_operator: b1_tilde.clone(),
        map: phi,
    };
    let mut report = CheckReport::new();
    report.push(
        "image operator is rota-baxter",
        "B₁((a,x)) = C((a, ε(x)1)) is a weight −1 operator on Im C",
        rb_check(h1, &b1)?,
    );
    report.push(
        "image companion is rota-baxter",
        "B̃₁ is a weight −1 operator on Im C",
        rb_check(h1, &b1_tilde)?,
    );
    report.push(
        "φ is bijective",
        "rank φ = dim H = dim Im C",
        expect(to_b1.is_bijective(), &[], || {
            format!("rank {}, dim H = {}, dim Im C = {}", to_b1.rank(), h.dim(), h1.dim())
        }),
    );
    report.push(
        "φ is a hopf homomorphism",
        "φ(xy) = φ(x)φ(y) and φ preserves the coalgebra and antipode",
        to_b1.hom_check()?,
    );
    report.push("φ intertwines B̃ and B₁", "φ∘B̃ = B₁∘φ", to_b1.intertwining_check()?);
    report.push(
        "φ intertwines B and B̃₁",
        "φ∘B = B̃₁∘φ",
        to_b1_tilde.intertwining_check()?,
    );
    Ok((PhiIso { to_b1, to_b1_tilde }, report))
}

pub fn phi_iso(rbmp: &RBMatchedPair, pp: &ProjectionPair) -> Result<PhiIso> {
    let (iso, report) = phi_iso_with_report(rbmp, pp)?;
    report.into_result()?;
    Ok(iso)
}

/// The two surjections carried by `π`.
#[derive(Clone, Debug)]
pub struct PiHom {
    /// `(H_B, B) → (H₂, B₂)`.
    pub from_descendent: RBMorphism,
    /// `(H_{B̃}, B̃) → (H₂, B̃₂)` through `π∘S`.
    pub from_tilde_descendent: RBMorphism,
}

/// Builds `π`, `B₂`, `B̃₂` and checks both surjections and that `ker π` is a
/// Hopf ideal of `H_B`.
pub fn pi_hom_with_report(rbmp: &RBMatchedPair, pp: &ProjectionPair) -> Result<(PiHom, CheckReport)> {
    let src = &rbmp.source;
    let h = src.algebra();
    let induced = rbp_operator(&pp.swapped())?;
    let h2 = induced.carrier.induced();
    let pi_full = pi_map(rbmp);
    let pi = corestrict(&pi_full, &induced.carrier, "π")?;
    let pi_s = pi.mul(h.antipode().matrix())?;
    let b2 = induced.operator.clone();
    let b2_tilde = companion_on(h2, &b2);
    let from_descendent = RBMorphism {
        src: src.descendent.clone(),
        src_operator: src.b().matrix().clone(),
        dst: h2.clone(),
        dst_operator: b2.clone(),
        map: pi.clone(),
    };
    let from_tilde_descendent = RBMorphism {
        src: src.tilde_descendent.clone(),
        src_operator: src.tilde.matrix().clone(),
        dst: h2.clone(),
        dst_operator: b2_tilde.clone(),
        map: pi_s,
    };
    let mut report = CheckReport::new();
    report.push(
        "second image operator is rota-baxter",
        "B₂((a,x)) = C̃((a, ε(x)1)) is a weight −1 operator on Im C̃",
        rb_check(h2, &b2)?,
    );
    report.push(
        "second image companion is rota-baxter",
        "B̃₂ is a weight −1 operator on Im C̃",
        rb_check(h2, &b2_tilde)?,
    );
    report.push(
        "π is a hopf homomorphism from the descendent",
        "π(x *_B y) = π(x)π(y) and π preserves the coalgebra and antipode",
        from_descendent.hom_check()?,
    );
    report.push(
        "π intertwines B and B₂",
        "π∘B = B₂∘π",
        from_descendent.intertwining_check()?,
    );
    report.push(
        "π is surjective",
        "Im π = Im C̃",
        same_subspace(&span_of_columns(&pi_full), induced.carrier.space()),
    );
    report.push(
        "π∘S is a hopf homomorphism from the companion descendent",
        "π(S(x *_B̃ y)) = π(S(x))π(S(y)) and π∘S preserves the coalgebra and antipode",
        from_tilde_descendent.hom_check()?,
    );
    report.push(
        "π∘S intertwines B̃ and B̃₂",
        "π∘S∘B̃ = B̃₂∘π∘S",
        from_tilde_descendent.intertwining_check()?,
    );
    report.push(
        "π∘S is surjective",
        "rank π∘S = dim Im C̃",
        expect(from_tilde_descendent.is_surjective(), &[], || {
            format!("rank {}, dim Im C̃ = {}", from_tilde_descendent.rank(), h2.dim())
        }),
    );
    report.push(
        "kernel of π is a hopf ideal",
        "ker π is a two-sided *_B ideal, a coideal and S_B-stable",
        kernel_ideal_check(&src.descendent, &pi_full),
    );
    Ok((
        PiHom {
            from_descendent,
            from_tilde_descendent,
        },
        report,
    ))
}

pub fn pi_hom(rbmp: &RBMatchedPair, pp: &ProjectionPair) -> Result<PiHom> {
    let (hom, report) = pi_hom_with_report(rbmp, pp)?;
    report.into_result()?;
    Ok(hom)
}

/// `ker f` is an ideal, a coideal and stable under the antipode of `h`.
///
/// `Δ(k) ∈ ker f⊗h + h⊗ker f` is tested as `(f⊗f)Δ(k) = 0`, since the
/// kernel of `f⊗f` is exactly that sum.
pub fn kernel_ideal_check(h: &HopfData, f: &LinearMap) -> Check {
    let ker = kernel_basis(f.matrix());
    let dim = h.dim();
    for (k, v) in ker.basis().iter().enumerate() {
        for x in 0..dim {
            let e = SparseVec::unit(x);
            let left = h.mul(&e, v);
            let right = h.mul(v, &e);
            expect(ker.contains(&left), &[k, x], || {
                format!("x·k = {left} leaves the kernel")
            })?;
            expect(ker.contains(&right), &[k, x], || {
                format!("k·x = {right} leaves the kernel")
            })?;
        }
        let image = h.tensor_apply(&h.coproduct(v), f, f, f.rows());
        expect(image.is_zero(), &[k], || format!("(f⊗f)Δ(k) = {image}"))?;
        let c = h.counit(v);
        expect(c.is_zero(), &[k], || format!("ε(k) = {c}"))?;
        let s = h.s(v);
        expect(ker.contains(&s), &[k], || format!("S(k) = {s} leaves the kernel"))?;
    }
    Ok(())
}
