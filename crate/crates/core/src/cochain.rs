//! Twisted cochains over a coefficient field.
//!
//! A `q`-cochain assigns to each `q`-simplex a value in the fiber over its minimal vertex.
//! The twisted coboundary at monodromy `a` is
//!
//! `(δα)(v_0…v_{q+1}) = a^{z(v_0,v_1)} α(v_1…v_{q+1}) + Σ_{i≥1} (-1)^i α(d_i σ)`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::algebra::field::Field;
use crate::algebra::linalg::SparseVec;
use crate::cocycle::IntegralOneCocycle;
use crate::complex::{face, SimplicialComplex, Subcomplex};
use crate::error::AlgebraError;

/// Integer powers of a fixed field element, memoized.
pub struct Powers<'f, F: Field> {
    f: &'f F,
    base: F::Elem,
    cache: BTreeMap<i64, F::Elem>,
}

impl<'f, F: Field> Powers<'f, F> {
    pub fn new(f: &'f F, base: F::Elem) -> Self {
        Powers { f, base, cache: BTreeMap::new() }
    }

    pub fn get(&mut self, k: i64) -> Result<F::Elem, AlgebraError> {
        if let Some(v) = self.cache.get(&k) {
            return Ok(v.clone());
        }
        let v = self.f.pow(&self.base, k)?;
        self.cache.insert(k, v.clone());
        Ok(v)
    }
}

/// Basis of the cochain groups, optionally relative to a subcomplex (simplices outside it).
#[derive(Clone, Debug)]
pub struct CochainBasis {
    /// For each degree, parent simplex indices in basis order.
    pub members: Vec<Vec<usize>>,
    /// For each degree, parent index to basis position.
    pub position: Vec<Vec<Option<usize>>>,
}

impl CochainBasis {
    pub fn absolute(x: &SimplicialComplex) -> Self {
        Self::build(x, None)
    }

    pub fn relative(x: &SimplicialComplex, a: &Subcomplex) -> Self {
        Self::build(x, Some(a))
    }

    fn build(x: &SimplicialComplex, a: Option<&Subcomplex>) -> Self {
        let mut members = Vec::new();
        let mut position = Vec::new();
        for d in 0..=x.dim() {
            let m: Vec<usize> = match a {
                Some(a) => a.complement(d),
                None => (0..x.count(d)).collect(),
            };
            let mut pos = alloc::vec![None; x.count(d)];
            for (k, &i) in m.iter().enumerate() {
                pos[i] = Some(k);
            }
            members.push(m);
            position.push(pos);
        }
        CochainBasis { members, position }
    }

    pub fn dim(&self, q: usize) -> usize {
        self.members.get(q).map_or(0, Vec::len)
    }
}

/// Rows of the twisted coboundary `δ^q: C^q → C^{q+1}` at monodromy `a`.
pub fn twisted_coboundary_rows<F: Field>(
    f: &F,
    x: &SimplicialComplex,
    z: &IntegralOneCocycle,
    basis: &CochainBasis,
    q: usize,
    a: &F::Elem,
) -> Result<Vec<SparseVec<F::Elem>>, AlgebraError> {
    let mut pw = Powers::new(f, a.clone());
    let Some(rows) = basis.members.get(q + 1) else {
        return Ok(Vec::new());
    };
    let simplices = x.simplices(q + 1);
    rows.iter()
        .map(|&r| {
            let s = &simplices[r];
            let mut row = Vec::with_capacity(s.len());
            for i in 0..s.len() {
                let fi = x.index_of(&face(s, i)).unwrap();
                let Some(col) = basis.position[q][fi] else { continue };
                let c = if i == 0 {
                    pw.get(z.get(x, s[0], s[1]))?
                } else if i % 2 == 0 {
                    f.one()
                } else {
                    f.neg(&f.one())
                };
                row.push((col, c));
            }
            row.sort_by_key(|e| e.0);
            Ok(row)
        })
        .collect()
}

/// Applies the twisted coboundary to a dense absolute cochain.
pub fn twisted_coboundary<F: Field>(
    f: &F,
    x: &SimplicialComplex,
    z: &IntegralOneCocycle,
    q: usize,
    a: &F::Elem,
    alpha: &[F::Elem],
) -> Result<Vec<F::Elem>, AlgebraError> {
    let mut pw = Powers::new(f, a.clone());
    x.simplices(q + 1)
        .iter()
        .map(|s| {
            let mut acc = f.zero();
            for i in 0..s.len() {
                let v = &alpha[x.index_of(&face(s, i)).unwrap()];
                if f.is_zero(v) {
                    continue;
                }
                let term = if i == 0 {
                    f.mul(&pw.get(z.get(x, s[0], s[1]))?, v)
                } else if i % 2 == 0 {
                    v.clone()
                } else {
                    f.neg(v)
                };
                acc = f.add(&acc, &term);
            }
            Ok(acc)
        })
        .collect()
}

/// Twisted Alexander–Whitney product of a `p`-cochain and a `q`-cochain (dense, absolute):
/// `(α∪β)(v_0…v_{p+q}) = α(v_0…v_p) · a_2^{z(v_0 → v_p)} · β(v_p…v_{p+q})`.
#[allow(clippy::too_many_arguments)]
pub fn twisted_cup<F: Field>(
    f: &F,
    x: &SimplicialComplex,
    z: &IntegralOneCocycle,
    p: usize,
    q: usize,
    a2: &F::Elem,
    alpha: &[F::Elem],
    beta: &[F::Elem],
) -> Result<Vec<F::Elem>, AlgebraError> {
    let mut pw = Powers::new(f, a2.clone());
    x.simplices(p + q)
        .iter()
        .map(|s| {
            let u = &alpha[x.index_of(&s[..=p]).unwrap()];
            if f.is_zero(u) {
                return Ok(f.zero());
            }
            let v = &beta[x.index_of(&s[p..]).unwrap()];
            if f.is_zero(v) {
                return Ok(f.zero());
            }
            let t = pw.get(z.transport(x, s, p))?;
            Ok(f.mul(&f.mul(u, &t), v))
        })
        .collect()
}

pub fn to_sparse<F: Field>(f: &F, v: &[F::Elem]) -> SparseVec<F::Elem> {
    v.iter().enumerate().filter(|(_, x)| !f.is_zero(x)).map(|(i, x)| (i, x.clone())).collect()
}

pub fn to_dense<F: Field>(f: &F, v: &[(usize, F::Elem)], len: usize) -> Vec<F::Elem> {
    let mut out = alloc::vec![f.zero(); len];
    for (i, x) in v {
        out[*i] = x.clone();
    }
    out
}
