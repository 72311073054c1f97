//! Dense matrices over `Q[τ]` and their evaluation at a monodromy.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::field::{Field, NumberField, RationalField, Scalar};
use super::linalg::{rank, SparseVec};
use super::poly::QPoly;
use crate::error::AlgebraError;

#[derive(Clone, PartialEq, Eq, Default)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<QPoly>,
}

impl PolyMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        PolyMatrix { rows, cols, entries: vec![QPoly::zero(); rows * cols] }
    }

    /// Builds from row-major entries; panics if the length is not `rows * cols`.
    pub fn from_entries(rows: usize, cols: usize, entries: Vec<QPoly>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count must be rows * cols");
        PolyMatrix { rows, cols, entries }
    }

    pub fn from_int_rows(rows: &[&[&[i64]]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let entries = rows.iter().flat_map(|row| row.iter().map(|p| QPoly::from_ints(p))).collect();
        Self::from_entries(r, c, entries)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &QPoly {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: QPoly) {
        self.entries[i * self.cols + j] = p;
    }

    pub fn entries(&self) -> &[QPoly] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(QPoly::is_zero)
    }

    pub fn nnz(&self) -> usize {
        self.entries.iter().filter(|p| !p.is_zero()).count()
    }

    /// Nonzero entries of each row, in column order.
    pub fn sparse_rows(&self) -> Vec<SparseVec<QPoly>> {
        (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .filter_map(|j| {
                        let p = self.get(i, j);
                        (!p.is_zero()).then(|| (j, p.clone()))
                    })
                    .collect()
            })
            .collect()
    }

    pub fn from_sparse_rows(rows: Vec<SparseVec<QPoly>>, cols: usize) -> Self {
        let mut m = Self::zeros(rows.len(), cols);
        for (i, r) in rows.into_iter().enumerate() {
            for (j, p) in r {
                m.set(i, j, p);
            }
        }
        m
    }

    /// Matrix product; panics on a shape mismatch.
    pub fn mul(&self, other: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.cols, other.rows, "inner dimensions must agree");
        let mut out = PolyMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let s = out.get(i, j) + &(a * b);
                        out.set(i, j, s);
                    }
                }
            }
        }
        out
    }

    /// Sparse rows of the matrix evaluated at `τ = a` in the field `f`.
    pub fn eval_rows<F: Field>(&self, f: &F, a: &F::Elem) -> Vec<SparseVec<F::Elem>> {
        (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .filter_map(|j| {
                        let p = self.get(i, j);
                        if p.is_zero() {
                            return None;
                        }
                        let v = f.eval_poly(p, a);
                        (!f.is_zero(&v)).then_some((j, v))
                    })
                    .collect()
            })
            .collect()
    }

    pub fn rank_in<F: Field>(&self, f: &F, a: &F::Elem) -> Result<usize, AlgebraError> {
        rank(f, self.eval_rows(f, a), self.cols)
    }

    /// Exact rank of the matrix evaluated at `τ = a`.
    pub fn rank_at(&self, a: &Scalar) -> Result<usize, AlgebraError> {
        match a {
            Scalar::Rational(r) => self.rank_in(&RationalField, r),
            Scalar::Algebraic { field, residue } => self.rank_in::<NumberField>(field, residue),
        }
    }
}

impl fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "PolyMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for j in 0..self.cols {
                write!(f, "{}; ", self.get(i, j))?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::Scalar;
    use alloc::sync::Arc;

    #[test]
    fn rank_at_examples() {
        let m = PolyMatrix::from_int_rows(&[&[&[-2, 1]]]);
        assert_eq!(m.rank_at(&Scalar::int(2)).unwrap(), 0);
        assert_eq!(m.rank_at(&Scalar::int(3)).unwrap(), 1);
        let alex = PolyMatrix::from_int_rows(&[&[&[2, -3, 2]]]);
        let k = Arc::new(NumberField::from_ints(&[2, -3, 2]).unwrap());
        assert_eq!(alex.rank_at(&Scalar::root_of(k)).unwrap(), 0);
    }

    #[test]
    fn product_shape() {
        let a = PolyMatrix::from_int_rows(&[&[&[0, 1], &[1]]]);
        let b = PolyMatrix::from_int_rows(&[&[&[1]], &[&[0, -1]]]);
        assert!(a.mul(&b).is_zero());
    }
}
