use super::{Accumulator, Matrix, Rational, SparseVec};
use crate::error::{Error, Result};

/// A subspace of ℚⁿ held by its reduced row echelon basis.
///
/// The echelon basis is unique for a given subspace, so derived equality is
/// subspace equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<SparseVec>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: (0..ambient).map(SparseVec::unit).collect(),
            pivots: (0..ambient).collect(),
        }
    }

    /// Span of `vectors`, which must live in ℚ^`ambient`.
    pub fn span<'a>(ambient: usize, vectors: impl IntoIterator<Item = &'a SparseVec>) -> Self {
        let rows: Vec<&SparseVec> = vectors.into_iter().filter(|v| !v.is_zero()).collect();
        if rows.is_empty() {
            return Self::zero(ambient);
        }
        let mut m = Matrix::zeros(rows.len(), ambient);
        for (i, v) in rows.iter().enumerate() {
            for (j, c) in v.iter() {
                assert!(j < ambient, "vector entry {j} outside ambient dimension {ambient}");
                m.set(i, j, c.clone());
            }
        }
        Self::from_rref_rows(ambient, &m)
    }

    fn from_rref_rows(ambient: usize, m: &Matrix) -> Self {
        let rref = m.rref();
        let basis = (0..rref.pivots.len())
            .map(|i| SparseVec::from_dense(rref.matrix.row(i)))
            .collect();
        Subspace {
            ambient,
            basis,
            pivots: rref.pivots,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[SparseVec] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates of `v` in the echelon basis, or `None` if `v` is outside.
    pub fn coords(&self, v: &SparseVec) -> Option<SparseVec> {
        let coords = SparseVec::from_terms(self.pivots.iter().enumerate().map(|(k, &p)| (k, v.get(p))));
        (self.embed(&coords) == *v).then_some(coords)
    }

    /// Inverse of [`Subspace::coords`]: the vector with the given coordinates.
    pub fn embed(&self, coords: &SparseVec) -> SparseVec {
        let mut acc = Accumulator::new();
        for (k, c) in coords.iter() {
            acc.add_scaled(&self.basis[k], c);
        }
        acc.finish()
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.coords(v).is_some()
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient == other.ambient && self.basis.iter().all(|b| other.contains(b))
    }

    /// `ambient × dim` matrix whose columns are the echelon basis.
    pub fn inclusion(&self) -> Matrix {
        Matrix::from_columns(self.ambient, &self.basis)
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        Subspace::span(self.ambient, self.basis.iter().chain(&other.basis))
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        // a ∈ ker [U | -W]  ↦  U a
        let (du, dw) = (self.dim(), other.dim());
        let mut m = Matrix::zeros(self.ambient, du + dw);
        for (k, b) in self.basis.iter().enumerate() {
            for (i, c) in b.iter() {
                m.set(i, k, c.clone());
            }
        }
        for (k, b) in other.basis.iter().enumerate() {
            for (i, c) in b.iter() {
                m.set(i, du + k, -c);
            }
        }
        let ker = kernel_basis(&m);
        let vectors: Vec<SparseVec> = ker
            .basis()
            .iter()
            .map(|a| {
                let head = SparseVec::from_terms(a.iter().filter(|(k, _)| *k < du).map(|(k, c)| (k, c.clone())));
                self.embed(&head)
            })
            .collect();
        Subspace::span(self.ambient, &vectors)
    }
}

/// `{ v : m·v = 0 }` in canonical form.
pub fn kernel_basis(m: &Matrix) -> Subspace {
    let rref = m.rref();
    let pivot_rows: Vec<(usize, usize)> = rref.pivots.iter().copied().enumerate().collect();
    let free = (0..m.cols()).filter(|c| !rref.pivots.contains(c));
    let vectors: Vec<SparseVec> = free
        .map(|f| {
            let mut terms = vec![(f, Rational::one())];
            for &(row, p) in &pivot_rows {
                terms.push((p, -rref.matrix.get(row, f)));
            }
            SparseVec::from_terms(terms)
        })
        .collect();
    Subspace::span(m.cols(), &vectors)
}

/// Column span of `m` in canonical form.
pub fn image_basis(m: &Matrix) -> Subspace {
    Subspace::span(m.rows(), &m.columns())
}

/// Solves `m·v = b` for every right-hand side with one elimination.
/// Free variables are set to zero.
pub fn solve_many(m: &Matrix, rhs: &[SparseVec]) -> Vec<Option<SparseVec>> {
    let (rows, cols) = (m.rows(), m.cols());
    let mut aug = Matrix::zeros(rows, cols + rhs.len());
    for i in 0..rows {
        for j in 0..cols {
            aug.set(i, j, m.get(i, j).clone());
        }
    }
    for (k, b) in rhs.iter().enumerate() {
        for (i, c) in b.iter() {
            assert!(i < rows, "right-hand side outside codomain");
            aug.set(i, cols + k, c.clone());
        }
    }
    let rref = aug.rref_pivoting_on(cols);
    let pivots = rref.pivots;
    let rank = pivots.len();
    (0..rhs.len())
        .map(|k| {
            let col = cols + k;
            // A nonzero entry below the pivot rows means b ∉ image.
            if (rank..rows).any(|i| !rref.matrix.get(i, col).is_zero()) {
                return None;
            }
            Some(SparseVec::from_terms(
                pivots
                    .iter()
                    .enumerate()
                    .map(|(row, &p)| (p, rref.matrix.get(row, col).clone())),
            ))
        })
        .collect()
}

pub fn solve(m: &Matrix, b: &SparseVec) -> Option<SparseVec> {
    solve_many(m, std::slice::from_ref(b)).pop().flatten()
}

/// A right inverse of `m` on `onto`: `m · σ` is the inclusion of `onto`,
/// with `σ` expressed on `onto`'s echelon basis.
pub fn section_of(m: &Matrix, onto: &Subspace) -> Result<Matrix> {
    if onto.ambient_dim() != m.rows() {
        return Err(Error::Shape(format!(
            "subspace of dimension-{} space is not in the {}-row codomain",
            onto.ambient_dim(),
            m.rows()
        )));
    }
    let solutions = solve_many(m, onto.basis());
    let mut cols = Vec::with_capacity(solutions.len());
    for (k, s) in solutions.into_iter().enumerate() {
        match s {
            Some(v) => cols.push(v),
            None => {
                return Err(Error::Precondition(format!(
                    "basis vector {k} of the target subspace is not in the image"
                )))
            }
        }
    }
    Ok(Matrix::from_columns(m.cols(), &cols))
}
