//! Sparse exact linear algebra over a [`Field`].
//!
//! Vectors are sorted `(column, value)` lists with no explicit zeros.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::field::Field;
use super::poly::QPoly;
use super::rat::Rat;
use crate::error::AlgebraError;

pub type SparseVec<E> = Vec<(usize, E)>;

/// Returns `v - c·w`.
pub fn sub_scaled<F: Field>(f: &F, v: &[(usize, F::Elem)], c: &F::Elem, w: &[(usize, F::Elem)]) -> SparseVec<F::Elem> {
    let mut out = Vec::with_capacity(v.len() + w.len());
    let (mut i, mut j) = (0, 0);
    while i < v.len() || j < w.len() {
        if j == w.len() || (i < v.len() && v[i].0 < w[j].0) {
            out.push(v[i].clone());
            i += 1;
        } else if i == v.len() || w[j].0 < v[i].0 {
            out.push((w[j].0, f.neg(&f.mul(c, &w[j].1))));
            j += 1;
        } else {
            let x = f.sub(&v[i].1, &f.mul(c, &w[j].1));
            if !f.is_zero(&x) {
                out.push((v[i].0, x));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

pub fn scale<F: Field>(f: &F, c: &F::Elem, v: &[(usize, F::Elem)]) -> SparseVec<F::Elem> {
    if f.is_zero(c) {
        return Vec::new();
    }
    v.iter().map(|(k, x)| (*k, f.mul(c, x))).collect()
}

pub fn get<E>(v: &[(usize, E)], col: usize) -> Option<&E> {
    v.binary_search_by_key(&col, |e| e.0).ok().map(|i| &v[i].1)
}

/// Sorts entries by column, merging duplicates and dropping zeros.
pub fn normalize<F: Field>(f: &F, mut v: Vec<(usize, F::Elem)>) -> SparseVec<F::Elem> {
    v.sort_by_key(|e| e.0);
    let mut out: SparseVec<F::Elem> = Vec::with_capacity(v.len());
    for (k, x) in v {
        match out.last_mut() {
            Some((k0, x0)) if *k0 == k => *x0 = f.add(x0, &x),
            _ => out.push((k, x)),
        }
    }
    out.retain(|(_, x)| !f.is_zero(x));
    out
}

/// Rank of the matrix with the given sparse rows, by elimination with Markowitz-style pivoting.
pub fn rank<F: Field>(f: &F, rows: Vec<SparseVec<F::Elem>>, ncols: usize) -> Result<usize, AlgebraError> {
    let mut rows: Vec<Option<SparseVec<F::Elem>>> =
        rows.into_iter().map(|r| if r.is_empty() { None } else { Some(r) }).collect();
    let mut col_rows: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); ncols];
    for (i, r) in rows.iter().enumerate() {
        if let Some(r) = r {
            for (c, _) in r {
                col_rows[*c].insert(i);
            }
        }
    }
    let mut rank = 0;
    loop {
        let Some(pr) = rows
            .iter()
            .enumerate()
            .filter_map(|(i, r)| r.as_ref().map(|r| (r.len(), i)))
            .min()
            .map(|(_, i)| i)
        else {
            break;
        };
        let prow = rows[pr].take().unwrap();
        for (c, _) in &prow {
            col_rows[*c].remove(&pr);
        }
        let (pc, pv) = prow
            .iter()
            .min_by_key(|(c, _)| col_rows[*c].len())
            .map(|(c, v)| (*c, v.clone()))
            .unwrap();
        let inv = f.inv(&pv)?;
        let targets: Vec<usize> = col_rows[pc].iter().copied().collect();
        for i in targets {
            let old = rows[i].take().unwrap();
            let factor = f.mul(get(&old, pc).unwrap(), &inv);
            let new = sub_scaled(f, &old, &factor, &prow);
            for (c, _) in &old {
                col_rows[*c].remove(&i);
            }
            for (c, _) in &new {
                col_rows[*c].insert(i);
            }
            if !new.is_empty() {
                rows[i] = Some(new);
            }
        }
        rank += 1;
    }
    Ok(rank)
}

/// A subspace in row-echelon form: rows with distinct leading columns, each leading entry 1.
///
/// Reduction modulo the subspace yields a canonical representative of each coset.
#[derive(Clone, Debug)]
pub struct Echelon<E> {
    ncols: usize,
    rows: BTreeMap<usize, SparseVec<E>>,
}

impl<E: Clone + PartialEq + core::fmt::Debug> Echelon<E> {
    pub fn new(ncols: usize) -> Self {
        Echelon { ncols, rows: BTreeMap::new() }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    pub fn rows(&self) -> impl Iterator<Item = &SparseVec<E>> {
        self.rows.values()
    }

    pub fn row(&self, pivot: usize) -> Option<&SparseVec<E>> {
        self.rows.get(&pivot)
    }

    /// Canonical representative of `v` modulo the subspace, with the multiples of each
    /// basis row that were subtracted (keyed by pivot column).
    pub fn reduce_tracked<F: Field<Elem = E>>(&self, f: &F, v: &[(usize, E)]) -> (SparseVec<E>, Vec<(usize, E)>) {
        let mut v: BTreeMap<usize, E> = v.iter().cloned().collect();
        let mut coeffs = Vec::new();
        let mut cursor = 0usize;
        loop {
            let next = v
                .range(cursor..)
                .find(|(k, _)| self.rows.contains_key(k))
                .map(|(k, x)| (*k, x.clone()));
            let Some((p, c)) = next else { break };
            for (k, x) in &self.rows[&p] {
                let y = match v.get(k) {
                    Some(old) => f.sub(old, &f.mul(&c, x)),
                    None => f.neg(&f.mul(&c, x)),
                };
                if f.is_zero(&y) {
                    v.remove(k);
                } else {
                    v.insert(*k, y);
                }
            }
            coeffs.push((p, c));
            cursor = p + 1;
        }
        (v.into_iter().collect(), coeffs)
    }

    pub fn reduce<F: Field<Elem = E>>(&self, f: &F, v: &[(usize, E)]) -> SparseVec<E> {
        self.reduce_tracked(f, v).0
    }

    pub fn contains<F: Field<Elem = E>>(&self, f: &F, v: &[(usize, E)]) -> bool {
        self.reduce(f, v).is_empty()
    }

    /// Adds `v` to the span. Returns the pivot of the new row, or `None` if `v` was dependent.
    pub fn insert<F: Field<Elem = E>>(&mut self, f: &F, v: &[(usize, E)]) -> Result<Option<usize>, AlgebraError> {
        let r = self.reduce(f, v);
        let Some((p, lead)) = r.first().cloned() else {
            return Ok(None);
        };
        let inv = f.inv(&lead)?;
        self.rows.insert(p, scale(f, &inv, &r));
        Ok(Some(p))
    }

    /// Converts to reduced row-echelon form: every pivot column is zero outside its own row.
    pub fn into_rref<F: Field<Elem = E>>(mut self, f: &F) -> Self {
        let pivots: Vec<usize> = self.rows.keys().rev().copied().collect();
        for p in pivots {
            let row = self.rows.remove(&p).unwrap();
            let (head, tail) = row.split_first().unwrap();
            let (tail, _) = self.reduce_tracked(f, tail);
            let mut full = vec![head.clone()];
            full.extend(tail);
            self.rows.insert(p, full);
        }
        self
    }
}

/// Basis of the kernel `{x : M x = 0}` of the matrix with the given sparse rows.
pub fn kernel<F: Field>(f: &F, rows: &[SparseVec<F::Elem>], ncols: usize) -> Result<Vec<SparseVec<F::Elem>>, AlgebraError> {
    let mut ech = Echelon::new(ncols);
    for r in rows {
        ech.insert(f, r)?;
    }
    let ech = ech.into_rref(f);
    // x_free = e_j, x_pivot(p) = -row_p[j]
    let mut by_free: BTreeMap<usize, Vec<(usize, F::Elem)>> = BTreeMap::new();
    for (p, row) in &ech.rows {
        for (j, x) in row.iter().skip(1) {
            by_free.entry(*j).or_default().push((*p, f.neg(x)));
        }
    }
    let mut out = Vec::new();
    for j in 0..ncols {
        if ech.rows.contains_key(&j) {
            continue;
        }
        let mut v = by_free.remove(&j).unwrap_or_default();
        v.push((j, f.one()));
        v.sort_by_key(|e| e.0);
        out.push(v);
    }
    Ok(out)
}

/// Columns of a sparse-row matrix, as sparse vectors indexed by row.
pub fn transpose<E: Clone>(rows: &[SparseVec<E>], ncols: usize) -> Vec<SparseVec<E>> {
    let mut cols: Vec<SparseVec<E>> = vec![Vec::new(); ncols];
    for (i, r) in rows.iter().enumerate() {
        for (j, x) in r {
            cols[*j].push((i, x.clone()));
        }
    }
    cols
}

/// Applies a sparse-row matrix to a sparse vector.
pub fn mat_vec<F: Field>(f: &F, rows: &[SparseVec<F::Elem>], v: &[(usize, F::Elem)]) -> SparseVec<F::Elem> {
    let dense: BTreeMap<usize, &F::Elem> = v.iter().map(|(k, x)| (*k, x)).collect();
    let mut out = Vec::new();
    for (i, r) in rows.iter().enumerate() {
        let mut acc = f.zero();
        for (k, x) in r {
            if let Some(y) = dense.get(k) {
                acc = f.add(&acc, &f.mul(x, y));
            }
        }
        if !f.is_zero(&acc) {
            out.push((i, acc));
        }
    }
    out
}

/// Characteristic polynomial `det(x·I - M)` of a square rational matrix (Faddeev–LeVerrier).
pub fn char_poly(m: &[Vec<Rat>]) -> QPoly {
    let n = m.len();
    let mut coeffs = vec![Rat::zero(); n + 1];
    coeffs[n] = Rat::one();
    let mut mk = vec![vec![Rat::zero(); n]; n]; // M_0 = 0
    for k in 1..=n {
        // M_k = M·M_{k-1} + c_{n-k+1}·I
        let mut next = vec![vec![Rat::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                let mut s = Rat::zero();
                for l in 0..n {
                    if !m[i][l].is_zero() && !mk[l][j].is_zero() {
                        s += &m[i][l] * &mk[l][j];
                    }
                }
                next[i][j] = s;
            }
            next[i][i] += &coeffs[n - k + 1];
        }
        mk = next;
        // c_{n-k} = -tr(M·M_k)/k
        let mut tr = Rat::zero();
        for i in 0..n {
            for l in 0..n {
                tr += &m[i][l] * &mk[l][i];
            }
        }
        coeffs[n - k] = -tr / Rat::from_integer((k as i64).into());
    }
    QPoly::new(coeffs)
}

/// Dense rational rank, for small matrices.
pub fn dense_rank(m: &[Vec<Rat>]) -> usize {
    let ncols = m.first().map_or(0, |r| r.len());
    let rows = m
        .iter()
        .map(|r| r.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(j, x)| (j, x.clone())).collect())
        .collect();
    rank(&super::field::RationalField, rows, ncols).expect("rational elimination never fails")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::{NumberField, RationalField};
    use crate::algebra::rat::{rat, rat_int};

    fn dense(rows: &[&[i64]]) -> Vec<SparseVec<Rat>> {
        rows.iter()
            .map(|r| r.iter().enumerate().filter(|(_, &x)| x != 0).map(|(j, &x)| (j, rat_int(x))).collect())
            .collect()
    }

    #[test]
    fn rank_small() {
        let m = dense(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(rank(&RationalField, m, 3).unwrap(), 2);
        assert_eq!(rank(&RationalField, Vec::new(), 4).unwrap(), 0);
    }

    #[test]
    fn kernel_is_annihilated() {
        let m = dense(&[&[1, -1, 0, 0], &[0, 1, -1, 0], &[1, 0, -1, 0]]);
        let k = kernel(&RationalField, &m, 4).unwrap();
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(mat_vec(&RationalField, &m, v).is_empty());
        }
    }

    #[test]
    fn echelon_normal_form_is_canonical() {
        let f = RationalField;
        let mut e = Echelon::new(3);
        e.insert(&f, &[(0, rat_int(1)), (1, rat_int(1))]).unwrap();
        let a = e.reduce(&f, &[(0, rat_int(2)), (2, rat_int(1))]);
        let b = e.reduce(&f, &[(1, rat_int(-2)), (2, rat_int(1))]);
        assert_eq!(a, b);
    }

    #[test]
    fn rank_over_number_field() {
        // [[x, 2], [1, x]] over Q(sqrt 2) has determinant x^2 - 2 = 0
        let k = NumberField::from_ints(&[-2, 0, 1]).unwrap();
        let x = k.generator();
        let m = vec![
            vec![(0, x.clone()), (1, QPoly::from_ints(&[2]))],
            vec![(0, QPoly::one()), (1, x)],
        ];
        assert_eq!(rank(&k, m, 2).unwrap(), 1);
    }

    #[test]
    fn char_poly_of_cat_map() {
        let m = vec![vec![rat_int(2), rat_int(1)], vec![rat_int(1), rat_int(1)]];
        assert_eq!(char_poly(&m), QPoly::from_ints(&[1, -3, 1]));
        let id = vec![vec![rat(1, 2)]];
        assert_eq!(char_poly(&id), QPoly::new(vec![rat(-1, 2), rat_int(1)]));
    }
}
