use super::Rational;
use crate::error::{Error, Result};

/// Dense multi-index array over ℚ, row-major (last index fastest).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tensor {
    shape: Vec<usize>,
    data: Vec<Rational>,
}

impl Tensor {
    pub fn zeros(shape: &[usize]) -> Self {
        Tensor {
            shape: shape.to_vec(),
            data: vec![Rational::zero(); shape.iter().product()],
        }
    }

    pub fn scalar(value: Rational) -> Self {
        Tensor {
            shape: Vec::new(),
            data: vec![value],
        }
    }

    pub fn vector(values: Vec<Rational>) -> Self {
        Tensor {
            shape: vec![values.len()],
            data: values,
        }
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn rank(&self) -> usize {
        self.shape.len()
    }

    fn offset(&self, index: &[usize]) -> usize {
        assert_eq!(index.len(), self.shape.len(), "index arity");
        index.iter().zip(&self.shape).fold(0, |acc, (&i, &n)| {
            assert!(i < n, "index out of range");
            acc * n + i
        })
    }

    pub fn get(&self, index: &[usize]) -> &Rational {
        &self.data[self.offset(index)]
    }

    pub fn set(&mut self, index: &[usize], value: Rational) {
        let o = self.offset(index);
        self.data[o] = value;
    }

    pub fn add_at(&mut self, index: &[usize], value: &Rational) {
        let o = self.offset(index);
        self.data[o] += value;
    }

    pub fn data(&self) -> &[Rational] {
        &self.data
    }

    pub fn as_scalar(&self) -> Option<&Rational> {
        self.shape.is_empty().then(|| &self.data[0])
    }

    /// Contracts index `axis` against `v`, removing that axis.
    pub fn contract_axis(&self, axis: usize, v: &[Rational]) -> Result<Tensor> {
        if axis >= self.rank() {
            return Err(Error::Shape(format!("axis {axis} of a rank-{} tensor", self.rank())));
        }
        if v.len() != self.shape[axis] {
            return Err(Error::Shape(format!(
                "operand of length {} against axis of length {}",
                v.len(),
                self.shape[axis]
            )));
        }
        let outer: usize = self.shape[..axis].iter().product();
        let n = self.shape[axis];
        let inner: usize = self.shape[axis + 1..].iter().product();
        let mut shape = self.shape.clone();
        shape.remove(axis);
        let mut data = vec![Rational::zero(); outer * inner];
        for o in 0..outer {
            for (k, c) in v.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let base = (o * n + k) * inner;
                for i in 0..inner {
                    let t = &self.data[base + i];
                    if !t.is_zero() {
                        data[o * inner + i] += t * c;
                    }
                }
            }
        }
        Ok(Tensor { shape, data })
    }
}

/// Contracts the leading indices of `t` against `operands`, in order.
pub fn tensor_contract(t: &Tensor, operands: &[&[Rational]]) -> Result<Tensor> {
    if operands.len() > t.rank() {
        return Err(Error::Shape(format!(
            "{} operands for a rank-{} tensor",
            operands.len(),
            t.rank()
        )));
    }
    operands.iter().try_fold(t.clone(), |acc, v| acc.contract_axis(0, v))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arity_mismatch_is_rejected() {
        let t = Tensor::zeros(&[2, 3]);
        let v = vec![Rational::one(); 2];
        assert!(tensor_contract(&t, &[&v, &v, &v]).is_err());
        assert!(tensor_contract(&t, &[&v, &v]).is_err());
        let out = tensor_contract(&t, &[&v]).unwrap();
        assert_eq!(out.shape(), &[3]);
    }

    #[test]
    fn full_contraction_is_scalar() {
        let mut t = Tensor::zeros(&[2, 2]);
        t.set(&[0, 1], Rational::from_int(3));
        let a = vec![Rational::one(), Rational::zero()];
        let b = vec![Rational::zero(), Rational::from_int(2)];
        let s = tensor_contract(&t, &[&a, &b]).unwrap();
        assert_eq!(s.as_scalar(), Some(&Rational::from_int(6)));
    }
}
