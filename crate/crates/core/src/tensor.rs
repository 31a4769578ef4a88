//! Coordinate-component tensors with exact rational-function entries.
//!
//! A [`Tensor`] of valence `(p, q)` stores `dim^(p+q)` components. Indices
//! are ordered upper slots first, then lower slots, row-major. A `(1,1)`
//! tensor is therefore a matrix whose row is the upper index, and
//! `T(X)^i = T^i_j X^j`.

use std::ops::{Add, Neg, Sub};

use ratcas::{Rational, RationalFunction};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tensor {
    dim: usize,
    upper: usize,
    lower: usize,
    data: Vec<RationalFunction>,
}

/// All multi-indices of a given rank in row-major order.
pub fn multi_indices(dim: usize, rank: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = dim.pow(rank as u32);
    (0..total).map(move |mut flat| {
        let mut idx = vec![0; rank];
        for slot in (0..rank).rev() {
            idx[slot] = flat % dim;
            flat /= dim;
        }
        idx
    })
}

impl Tensor {
    pub fn zeros(dim: usize, upper: usize, lower: usize) -> Self {
        let n = dim.pow((upper + lower) as u32);
        Tensor { dim, upper, lower, data: vec![RationalFunction::zero(); n] }
    }

    pub fn from_fn<F>(dim: usize, upper: usize, lower: usize, mut f: F) -> Self
    where
        F: FnMut(&[usize]) -> RationalFunction,
    {
        let data = multi_indices(dim, upper + lower).map(|idx| f(&idx)).collect();
        Tensor { dim, upper, lower, data }
    }

    pub fn scalar(dim: usize, value: RationalFunction) -> Self {
        Tensor { dim, upper: 0, lower: 0, data: vec![value] }
    }

    pub fn vector(components: Vec<RationalFunction>) -> Self {
        Tensor { dim: components.len(), upper: 1, lower: 0, data: components }
    }

    pub fn covector(components: Vec<RationalFunction>) -> Self {
        Tensor { dim: components.len(), upper: 0, lower: 1, data: components }
    }

    /// Builds a rank-2 tensor from rows. Rows index the first slot.
    pub fn from_rows(upper: usize, lower: usize, rows: Vec<Vec<RationalFunction>>) -> Result<Self> {
        let dim = rows.len();
        if upper + lower != 2 {
            return Err(Error::Valence { upper, lower });
        }
        if let Some(bad) = rows.iter().find(|r| r.len() != dim) {
            return Err(Error::DimensionMismatch { expected: dim, found: bad.len() });
        }
        Ok(Tensor { dim, upper, lower, data: rows.into_iter().flatten().collect() })
    }

    pub fn identity(dim: usize) -> Self {
        Tensor::from_fn(dim, 1, 1, |i| delta(i[0], i[1]))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn valence(&self) -> (usize, usize) {
        (self.upper, self.lower)
    }

    pub fn rank(&self) -> usize {
        self.upper + self.lower
    }

    pub fn expect_valence(&self, upper: usize, lower: usize) -> Result<()> {
        if (self.upper, self.lower) == (upper, lower) {
            Ok(())
        } else {
            Err(Error::Valence { upper, lower })
        }
    }

    fn flat(&self, idx: &[usize]) -> usize {
        debug_assert_eq!(idx.len(), self.rank());
        idx.iter().fold(0, |acc, &i| acc * self.dim + i)
    }

    pub fn get(&self, idx: &[usize]) -> &RationalFunction {
        &self.data[self.flat(idx)]
    }

    pub fn at(&self, i: usize, j: usize) -> &RationalFunction {
        self.get(&[i, j])
    }

    pub fn components(&self) -> &[RationalFunction] {
        &self.data
    }

    pub fn entries(&self) -> impl Iterator<Item = (Vec<usize>, &RationalFunction)> {
        multi_indices(self.dim, self.rank()).zip(self.data.iter())
    }

    pub fn nonzero_entries(&self) -> impl Iterator<Item = (Vec<usize>, &RationalFunction)> {
        self.entries().filter(|(_, v)| !v.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(RationalFunction::is_zero)
    }

    pub fn map<F: FnMut(&RationalFunction) -> RationalFunction>(&self, f: F) -> Self {
        Tensor { dim: self.dim, upper: self.upper, lower: self.lower, data: self.data.iter().map(f).collect() }
    }

    pub fn scale(&self, c: &RationalFunction) -> Self {
        self.map(|v| v * c)
    }

    pub fn scale_rational(&self, c: &Rational) -> Self {
        self.map(|v| v.scale(c))
    }

    pub fn transpose(&self) -> Self {
        debug_assert_eq!(self.rank(), 2);
        Tensor::from_fn(self.dim, self.upper, self.lower, |i| self.at(i[1], i[0]).clone())
    }

    pub fn is_symmetric(&self) -> bool {
        self.rank() == 2 && (0..self.dim).all(|i| (0..i).all(|j| self.at(i, j) == self.at(j, i)))
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.rank() == 2
            && (0..self.dim).all(|i| self.at(i, i).is_zero() && (0..i).all(|j| *self.at(i, j) == -self.at(j, i)))
    }

    /// Trace of a `(1,1)` tensor.
    pub fn trace(&self) -> RationalFunction {
        (0..self.dim).map(|i| self.at(i, i).clone()).sum()
    }

    /// Matrix product of two `(1,1)` tensors: `(A∘B)(X) = A(B(X))`.
    pub fn compose(&self, other: &Tensor) -> Tensor {
        Tensor::from_fn(self.dim, 1, 1, |i| {
            (0..self.dim).map(|m| self.at(i[0], m) * other.at(m, i[1])).sum()
        })
    }

    /// `T(X)` for a `(1,1)` tensor.
    pub fn apply(&self, x: &VectorField) -> VectorField {
        VectorField::new(
            (0..self.dim)
                .map(|i| (0..self.dim).map(|j| self.at(i, j) * x.component(j)).sum())
                .collect(),
        )
    }

    /// `T(X, Y)` for a `(0,2)` tensor.
    pub fn pair(&self, x: &VectorField, y: &VectorField) -> RationalFunction {
        let mut acc = RationalFunction::zero();
        for i in 0..self.dim {
            if x.component(i).is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if y.component(j).is_zero() {
                    continue;
                }
                acc = acc + &(self.at(i, j) * x.component(i)) * y.component(j);
            }
        }
        acc
    }

    /// `ω(X)` for a `(0,1)` tensor.
    pub fn contract_vector(&self, x: &VectorField) -> RationalFunction {
        (0..self.dim).map(|i| self.get(&[i]) * x.component(i)).sum()
    }

    /// Outer product `a ⊗ b`; upper slots of both come first, then lower.
    pub fn outer(&self, other: &Tensor) -> Tensor {
        assert_eq!(self.dim, other.dim);
        let upper = self.upper + other.upper;
        let lower = self.lower + other.lower;
        Tensor::from_fn(self.dim, upper, lower, |idx| {
            let (up, low) = idx.split_at(upper);
            let mut a = up[..self.upper].to_vec();
            a.extend_from_slice(&low[..self.lower]);
            let mut b = up[self.upper..].to_vec();
            b.extend_from_slice(&low[self.lower..]);
            self.get(&a) * other.get(&b)
        })
    }

    pub fn as_vector(&self) -> Result<VectorField> {
        self.expect_valence(1, 0)?;
        Ok(VectorField::new(self.data.clone()))
    }
}

/// Integer as an exact rational.
pub fn int(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

pub(crate) fn delta(i: usize, j: usize) -> RationalFunction {
    if i == j {
        RationalFunction::one()
    } else {
        RationalFunction::zero()
    }
}

fn zip_with(a: &Tensor, b: &Tensor, f: impl Fn(&RationalFunction, &RationalFunction) -> RationalFunction) -> Tensor {
    assert_eq!(
        (a.dim, a.upper, a.lower),
        (b.dim, b.upper, b.lower),
        "tensor shapes differ"
    );
    Tensor {
        dim: a.dim,
        upper: a.upper,
        lower: a.lower,
        data: a.data.iter().zip(&b.data).map(|(x, y)| f(x, y)).collect(),
    }
}

impl Add for &Tensor {
    type Output = Tensor;
    fn add(self, rhs: &Tensor) -> Tensor {
        zip_with(self, rhs, |a, b| a + b)
    }
}

impl Sub for &Tensor {
    type Output = Tensor;
    fn sub(self, rhs: &Tensor) -> Tensor {
        zip_with(self, rhs, |a, b| a - b)
    }
}

impl Neg for &Tensor {
    type Output = Tensor;
    fn neg(self) -> Tensor {
        self.map(|v| -v)
    }
}

impl Add for Tensor {
    type Output = Tensor;
    fn add(self, rhs: Tensor) -> Tensor {
        &self + &rhs
    }
}

impl Sub for Tensor {
    type Output = Tensor;
    fn sub(self, rhs: Tensor) -> Tensor {
        &self - &rhs
    }
}

/// Contravariant vector field given by its coordinate components.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VectorField(Vec<RationalFunction>);

impl VectorField {
    pub fn new(components: Vec<RationalFunction>) -> Self {
        VectorField(components)
    }

    pub fn zero(dim: usize) -> Self {
        VectorField(vec![RationalFunction::zero(); dim])
    }

    /// Coordinate field `∂_i`.
    pub fn coordinate(dim: usize, i: usize) -> Self {
        VectorField((0..dim).map(|j| delta(i, j)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn component(&self, i: usize) -> &RationalFunction {
        &self.0[i]
    }

    pub fn components(&self) -> &[RationalFunction] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(RationalFunction::is_zero)
    }

    /// Directional derivative `X(f) = X^i ∂_i f`.
    pub fn derive(&self, f: &RationalFunction) -> RationalFunction {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| c * &f.partial(i))
            .sum()
    }

    pub fn scale(&self, c: &RationalFunction) -> Self {
        VectorField(self.0.iter().map(|v| v * c).collect())
    }

    pub fn to_tensor(&self) -> Tensor {
        Tensor::vector(self.0.clone())
    }
}

impl Add for &VectorField {
    type Output = VectorField;
    fn add(self, rhs: &VectorField) -> VectorField {
        VectorField(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &VectorField {
    type Output = VectorField;
    fn sub(self, rhs: &VectorField) -> VectorField {
        VectorField(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &VectorField {
    type Output = VectorField;
    fn neg(self) -> VectorField {
        VectorField(self.0.iter().map(|a| -a).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(v: i64) -> RationalFunction {
        RationalFunction::from_int(v)
    }

    #[test]
    fn multi_index_order_is_row_major() {
        let all: Vec<_> = multi_indices(2, 2).collect();
        assert_eq!(all, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
        assert_eq!(multi_indices(3, 0).count(), 1);
    }

    #[test]
    fn compose_and_apply() {
        let swap = Tensor::from_rows(1, 1, vec![vec![c(0), c(1)], vec![c(1), c(0)]]).unwrap();
        assert_eq!(swap.compose(&swap), Tensor::identity(2));
        let v = VectorField::new(vec![c(3), c(5)]);
        assert_eq!(swap.apply(&v), VectorField::new(vec![c(5), c(3)]));
        assert!(swap.trace().is_zero());
    }

    #[test]
    fn outer_product_slot_order() {
        let v = Tensor::vector(vec![c(1), c(2)]);
        let w = Tensor::covector(vec![c(3), c(4)]);
        let t = v.outer(&w);
        assert_eq!(t.valence(), (1, 1));
        assert_eq!(t.at(1, 0), &c(6));
        let s = w.outer(&v);
        assert_eq!(s.valence(), (1, 1));
        assert_eq!(s, t);
    }

    #[test]
    fn symmetry_predicates() {
        let a = Tensor::from_rows(0, 2, vec![vec![c(0), c(1)], vec![c(-1), c(0)]]).unwrap();
        assert!(a.is_antisymmetric());
        assert!(!a.is_symmetric());
        assert!(Tensor::identity(2).is_symmetric());
    }
}
