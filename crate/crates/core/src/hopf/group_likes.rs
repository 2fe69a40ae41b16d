//! Exact search for group-like elements.
//!
//! Write `Δ(eᵢ) = Σ c_i^{jk} eⱼ⊗eₖ` and let `Lⱼ` be the matrix with
//! `(Lⱼ)_{k,i} = c_i^{jk}`. Then `Δ(x) = x⊗x` says exactly `Lⱼx = xⱼx` for
//! every `j`: `x` is a common eigenvector of all `Lⱼ` whose eigenvalue vector
//! is `x` itself.
//!
//! Scaling `Lⱼ` by the common denominator `d` of its entries gives an integer
//! matrix, whose rational eigenvalues are integers bounded by its row-sum
//! norm. So every candidate `xⱼ` is one of finitely many `k/d`. The search
//! branches over these candidates coordinate by coordinate, keeping the joint
//! eigenspace, and prunes as soon as that space is zero. At a leaf the
//! eigenvalue vector λ is the only possible group-like, and it is accepted
//! when it lies in the joint eigenspace and `ε(λ) = 1`.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use super::HopfData;
use crate::error::{Error, Result};
use crate::linalg::{common_denominator, kernel_basis, Matrix, Rational, SparseVec, Subspace};

/// Largest dimension [`group_likes`] accepts.
pub const GROUP_LIKES_CAP: usize = 24;

/// All `x` with `Δ(x) = x⊗x` and `ε(x) = 1`, sorted.
pub fn group_likes(h: &HopfData) -> Result<Vec<SparseVec>> {
    let d = h.dim();
    if d > GROUP_LIKES_CAP {
        return Err(Error::CapExceeded {
            what: "dimension",
            value: d,
            cap: GROUP_LIKES_CAP,
        });
    }
    let mut ls: Vec<Matrix> = (0..d).map(|_| Matrix::zeros(d, d)).collect();
    for i in 0..d {
        for (j, k, c) in h.comult_basis(i) {
            ls[*j].set(*k, i, c.clone());
        }
    }
    let candidates: Vec<Vec<Rational>> = ls.iter().map(eigenvalue_candidates).collect();
    let mut out = Vec::new();
    let mut lambda = Vec::with_capacity(d);
    branch(h, &ls, &candidates, Subspace::full(d), &mut lambda, &mut out);
    out.sort_by(|a: &SparseVec, b: &SparseVec| a.terms().cmp(b.terms()));
    out.dedup();
    Ok(out)
}

/// `k/den` for every integer `|k| ≤ ‖den·L‖∞`.
fn eigenvalue_candidates(l: &Matrix) -> Vec<Rational> {
    let entries: Vec<&Rational> = (0..l.rows()).flat_map(|i| l.row(i).iter()).collect();
    let den = common_denominator(entries.iter().copied());
    let norm: BigInt = (0..l.rows())
        .map(|i| {
            l.row(i)
                .iter()
                .map(|c| (c.numer() * (&den / c.denom())).abs())
                .sum::<BigInt>()
        })
        .max()
        .unwrap_or_default();
    let bound = norm.to_i64().expect("row-sum norm fits in i64 at supported dimensions");
    let den = Rational::from_bigints(den, BigInt::from(1)).expect("nonzero denominator");
    (-bound..=bound).map(|k| Rational::from_int(k) / &den).collect()
}

fn branch(
    h: &HopfData,
    ls: &[Matrix],
    candidates: &[Vec<Rational>],
    space: Subspace,
    lambda: &mut Vec<Rational>,
    out: &mut Vec<SparseVec>,
) {
    let j = lambda.len();
    if j == ls.len() {
        let x = SparseVec::from_dense(lambda);
        if space.contains(&x) && h.counit(&x).is_one() {
            out.push(x);
        }
        return;
    }
    for c in &candidates[j] {
        let restricted = restrict(&ls[j], c, &space);
        if restricted.dim() == 0 {
            continue;
        }
        lambda.push(c.clone());
        branch(h, ls, candidates, restricted, lambda, out);
        lambda.pop();
    }
}

/// `space ∩ ker(L − c·I)`.
fn restrict(l: &Matrix, c: &Rational, space: &Subspace) -> Subspace {
    let basis = space.basis();
    let images: Vec<SparseVec> = basis.iter().map(|b| l.apply(b).sub(&b.scale(c))).collect();
    let m = Matrix::from_columns(l.rows(), &images);
    let ker = kernel_basis(&m);
    let vectors: Vec<SparseVec> = ker.basis().iter().map(|a| space.embed(a)).collect();
    Subspace::span(space.ambient_dim(), &vectors)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{catalog_group, GroupTable};
    use crate::hopf::{function_algebra, group_algebra};

    fn units(n: usize) -> Vec<SparseVec> {
        (0..n).map(SparseVec::unit).collect()
    }

    #[test]
    fn group_algebra_group_likes_are_the_basis() {
        for n in [1, 2, 3] {
            let h = group_algebra(&GroupTable::cyclic(n).unwrap());
            assert_eq!(group_likes(&h).unwrap(), units(n));
        }
        let s3 = group_algebra(&catalog_group("S3").unwrap());
        assert_eq!(group_likes(&s3).unwrap(), units(6));
    }

    #[test]
    fn group_likes_of_function_algebra_are_characters() {
        // group-likes of ℚ^G are the ℚ-valued characters G → ℚˣ; Z4 has two (trivial, sign)
        let h = function_algebra(&GroupTable::cyclic(4).unwrap());
        let likes = group_likes(&h).unwrap();
        assert_eq!(likes.len(), 2);
        assert!(likes.contains(h.unit()));
    }

    #[test]
    fn dimension_cap() {
        let h = group_algebra(&catalog_group("Z3xZ3").unwrap());
        assert!(group_likes(&h).is_ok());
        let big = crate::hopf::tensor_product(
            &group_algebra(&catalog_group("S4").unwrap()),
            &group_algebra(&GroupTable::cyclic(2).unwrap()),
        );
        assert!(matches!(group_likes(&big), Err(Error::CapExceeded { .. })));
    }
}
