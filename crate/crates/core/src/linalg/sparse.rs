use std::collections::BTreeMap;
use std::fmt;

use super::Rational;

/// Sparse coordinate vector: strictly increasing indices, no stored zeros.
///
/// The dimension is implicit; callers pair a `SparseVec` with the space it
/// lives in.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct SparseVec {
    terms: Vec<(usize, Rational)>,
}

impl SparseVec {
    pub fn zero() -> Self {
        SparseVec { terms: Vec::new() }
    }

    pub fn unit(index: usize) -> Self {
        SparseVec {
            terms: vec![(index, Rational::one())],
        }
    }

    pub fn scaled_unit(index: usize, coeff: Rational) -> Self {
        if coeff.is_zero() {
            Self::zero()
        } else {
            SparseVec {
                terms: vec![(index, coeff)],
            }
        }
    }

    /// Builds from arbitrary (index, coeff) pairs, summing duplicates.
    pub fn from_terms(terms: impl IntoIterator<Item = (usize, Rational)>) -> Self {
        let mut acc = Accumulator::new();
        for (i, c) in terms {
            acc.add_term(i, &c);
        }
        acc.finish()
    }

    pub fn from_dense(values: &[Rational]) -> Self {
        SparseVec {
            terms: values
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(i, v)| (i, v.clone()))
                .collect(),
        }
    }

    pub fn to_dense(&self, dim: usize) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); dim];
        for (i, c) in &self.terms {
            out[*i] = c.clone();
        }
        out
    }

    pub fn terms(&self) -> &[(usize, Rational)] {
        &self.terms
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.terms.iter().map(|(i, c)| (*i, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.terms.len()
    }

    pub fn get(&self, index: usize) -> Rational {
        match self.terms.binary_search_by_key(&index, |(i, _)| *i) {
            Ok(pos) => self.terms[pos].1.clone(),
            Err(_) => Rational::zero(),
        }
    }

    /// One past the largest stored index (0 for the zero vector).
    pub fn support_bound(&self) -> usize {
        self.terms.last().map_or(0, |(i, _)| i + 1)
    }

    pub fn sum_of_coeffs(&self) -> Rational {
        self.terms.iter().map(|(_, c)| c).sum()
    }

    pub fn scale(&self, c: &Rational) -> SparseVec {
        if c.is_zero() {
            return Self::zero();
        }
        if c.is_one() {
            return self.clone();
        }
        SparseVec {
            terms: self.terms.iter().map(|(i, v)| (*i, v * c)).collect(),
        }
    }

    pub fn add(&self, other: &SparseVec) -> SparseVec {
        self.merge(other, false)
    }

    pub fn sub(&self, other: &SparseVec) -> SparseVec {
        self.merge(other, true)
    }

    fn merge(&self, other: &SparseVec, negate: bool) -> SparseVec {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut a, mut b) = (self.terms.iter().peekable(), other.terms.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some((i, x)), Some((j, y))) => {
                    if i < j {
                        out.push((*i, x.clone()));
                        a.next();
                    } else if j < i {
                        out.push((*j, if negate { -y } else { y.clone() }));
                        b.next();
                    } else {
                        let s = if negate { x - y } else { x + y };
                        if !s.is_zero() {
                            out.push((*i, s));
                        }
                        a.next();
                        b.next();
                    }
                }
                (Some((i, x)), None) => {
                    out.push((*i, x.clone()));
                    a.next();
                }
                (None, Some((j, y))) => {
                    out.push((*j, if negate { -y } else { y.clone() }));
                    b.next();
                }
                (None, None) => break,
            }
        }
        SparseVec { terms: out }
    }

    pub fn dot_dense(&self, dense: &[Rational]) -> Rational {
        self.terms.iter().map(|(i, c)| c * &dense[*i]).sum()
    }

    /// Index of the only nonzero coordinate if it equals one.
    pub fn as_basis_index(&self) -> Option<usize> {
        match self.terms.as_slice() {
            [(i, c)] if c.is_one() => Some(*i),
            _ => None,
        }
    }
}

impl fmt::Debug for SparseVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (i, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            if c.is_one() {
                write!(f, "e{i}")?;
            } else {
                write!(f, "({c})e{i}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for SparseVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Sums scaled terms and vectors; used wherever a result is built up piecewise.
#[derive(Default)]
pub struct Accumulator {
    map: BTreeMap<usize, Rational>,
}

impl Accumulator {
    pub fn new() -> Self {
        Accumulator { map: BTreeMap::new() }
    }

    pub fn add_term(&mut self, index: usize, coeff: &Rational) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.map.entry(index).or_insert_with(Rational::zero);
        *slot += coeff;
    }

    pub fn add_scaled(&mut self, v: &SparseVec, coeff: &Rational) {
        if coeff.is_zero() {
            return;
        }
        if coeff.is_one() {
            for (i, c) in v.iter() {
                self.add_term(i, c);
            }
        } else {
            for (i, c) in v.iter() {
                self.add_term(i, &(c * coeff));
            }
        }
    }

    pub fn add(&mut self, v: &SparseVec) {
        self.add_scaled(v, &Rational::one());
    }

    pub fn finish(self) -> SparseVec {
        SparseVec {
            terms: self.map.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rational {
        Rational::from_int(n)
    }

    #[test]
    fn arithmetic_drops_zeros() {
        let a = SparseVec::from_terms([(0, r(1)), (3, r(2))]);
        let b = SparseVec::from_terms([(3, r(2)), (1, r(-1))]);
        assert_eq!(a.sub(&b), SparseVec::from_terms([(0, r(1)), (1, r(1))]));
        assert_eq!(a.add(&b).get(3), r(4));
        assert!(a.sub(&a).is_zero());
        assert_eq!(SparseVec::from_terms([(2, r(1)), (2, r(-1))]), SparseVec::zero());
    }

    #[test]
    fn dense_roundtrip() {
        let d = vec![r(0), r(5), r(0), Rational::new(1, 3)];
        let s = SparseVec::from_dense(&d);
        assert_eq!(s.nnz(), 2);
        assert_eq!(s.to_dense(4), d);
        assert_eq!(s.support_bound(), 4);
    }
}
