//! Explicit bases of twisted cohomology over a field, with coordinates of cocycles.

use alloc::collections::BTreeMap;
use alloc::rc::Rc;
use alloc::vec::Vec;

use crate::algebra::field::Field;
use crate::algebra::linalg::{kernel, transpose, Echelon, SparseVec};
use crate::algebra::rat::Rat;
use crate::cochain::{twisted_coboundary_rows, CochainBasis};
use crate::cocycle::IntegralOneCocycle;
use crate::complex::SimplicialComplex;
use crate::error::AlgebraError;

/// `H^q(X; E_a)` presented as `Z^q / B^q` with echelon data for both.
#[derive(Clone, Debug)]
pub struct CohomologyBasis<E> {
    pub q: usize,
    /// Coboundaries `B^q`.
    pub boundaries: Echelon<E>,
    /// Normal forms of cocycles modulo `B^q`; its rows are the class representatives.
    pub classes: Echelon<E>,
    /// Pivot columns of `classes`, in representative order.
    pub pivots: Vec<usize>,
    /// Coboundary rows `δ^q` (for cocycle checks).
    pub delta: Vec<SparseVec<E>>,
}

impl<E: Clone + PartialEq + core::fmt::Debug> CohomologyBasis<E> {
    pub fn compute<F: Field<Elem = E>>(
        f: &F,
        x: &SimplicialComplex,
        z: &IntegralOneCocycle,
        a: &E,
        q: usize,
    ) -> Result<Self, AlgebraError> {
        let basis = CochainBasis::absolute(x);
        let n = x.count(q);
        let mut boundaries = Echelon::new(n);
        if q > 0 {
            let prev = twisted_coboundary_rows(f, x, z, &basis, q - 1, a)?;
            for b in transpose(&prev, x.count(q - 1)) {
                boundaries.insert(f, &b)?;
            }
        }
        let delta = twisted_coboundary_rows(f, x, z, &basis, q, a)?;
        let mut classes = Echelon::new(n);
        for c in kernel(f, &delta, n)? {
            let nf = boundaries.reduce(f, &c);
            classes.insert(f, &nf)?;
        }
        let pivots = classes.pivots().collect();
        Ok(CohomologyBasis { q, boundaries, classes, pivots, delta })
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn rep(&self, i: usize) -> &SparseVec<E> {
        self.classes.row(self.pivots[i]).unwrap()
    }

    pub fn reps(&self) -> impl Iterator<Item = &SparseVec<E>> {
        self.pivots.iter().map(|p| self.classes.row(*p).unwrap())
    }

    pub fn is_cocycle<F: Field<Elem = E>>(&self, f: &F, c: &[(usize, E)]) -> bool {
        crate::algebra::linalg::mat_vec(f, &self.delta, c).is_empty()
    }

    pub fn is_coboundary<F: Field<Elem = E>>(&self, f: &F, c: &[(usize, E)]) -> bool {
        self.boundaries.contains(f, c)
    }

    /// Coordinates of the class of a cocycle in the representative basis, or `None` if
    /// `c` is not a cocycle.
    pub fn coordinates<F: Field<Elem = E>>(&self, f: &F, c: &[(usize, E)]) -> Option<Vec<E>> {
        let nf = self.boundaries.reduce(f, c);
        let (rest, coeffs) = self.classes.reduce_tracked(f, &nf);
        if !rest.is_empty() {
            return None;
        }
        let mut out = alloc::vec![f.zero(); self.dim()];
        let index: BTreeMap<usize, usize> = self.pivots.iter().enumerate().map(|(i, p)| (*p, i)).collect();
        for (p, v) in coeffs {
            out[index[&p]] = v;
        }
        Some(out)
    }
}

/// Cohomology bases keyed by `(monodromy, degree)`, computed on demand.
pub struct CohomologyCache<'x, F: Field> {
    f: &'x F,
    x: &'x SimplicialComplex,
    z: &'x IntegralOneCocycle,
    map: BTreeMap<(Vec<Rat>, usize), Rc<CohomologyBasis<F::Elem>>>,
}

impl<'x, F: Field> CohomologyCache<'x, F> {
    pub fn new(f: &'x F, x: &'x SimplicialComplex, z: &'x IntegralOneCocycle) -> Self {
        CohomologyCache { f, x, z, map: BTreeMap::new() }
    }

    pub fn get(&mut self, a: &F::Elem, q: usize) -> Result<Rc<CohomologyBasis<F::Elem>>, AlgebraError> {
        let key = (self.f.key(a), q);
        if let Some(b) = self.map.get(&key) {
            return Ok(b.clone());
        }
        let b = Rc::new(CohomologyBasis::compute(self.f, self.x, self.z, a, q)?);
        self.map.insert(key, b.clone());
        Ok(b)
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::RationalField;
    use crate::algebra::rat::rat_int;

    #[test]
    fn circle_cohomology() {
        let x = SimplicialComplex::build(&[[0, 1], [1, 2], [0, 2]]).unwrap();
        let z = IntegralOneCocycle::validate(&x, &[(0, 1, 1)], true).unwrap();
        let f = RationalField;
        let h1 = CohomologyBasis::compute(&f, &x, &z, &rat_int(1), 1).unwrap();
        assert_eq!(h1.dim(), 1);
        let h0 = CohomologyBasis::compute(&f, &x, &z, &rat_int(1), 0).unwrap();
        assert_eq!(h0.dim(), 1);
        for q in 0..2 {
            assert_eq!(CohomologyBasis::compute(&f, &x, &z, &rat_int(5), q).unwrap().dim(), 0);
        }
        // the indicator of one edge generates H^1 at a = 1
        let e = alloc::vec![(2usize, rat_int(1))];
        assert_eq!(h1.coordinates(&f, &e).unwrap().len(), 1);
        assert!(!h1.is_coboundary(&f, &e));
    }
}
