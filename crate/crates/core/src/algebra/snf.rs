//! Smith normal form over the principal ideal domain `Q[τ]`.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use super::linalg::SparseVec;
use super::poly::QPoly;
use super::polymatrix::PolyMatrix;
use super::rat::{denom_lcm, numer_gcd, Rat};

/// Elementary divisors `d_1 | d_2 | … | d_r`, monic; `r` is the rank over `Q(τ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub divisors: Vec<QPoly>,
    pub rank: usize,
}

impl SmithForm {
    /// Number of divisors that do not vanish at the root class of `f` (i.e. are not divisible by `f`).
    pub fn rank_mod(&self, f: &QPoly) -> usize {
        self.divisors.iter().filter(|d| !f.divides(d)).count()
    }

    /// Rank at a rational point: the number of divisors nonzero there.
    pub fn rank_at_rat(&self, a: &Rat) -> usize {
        self.divisors.iter().filter(|d| !num_traits::Zero::is_zero(&d.eval(a))).count()
    }
}

struct Work {
    rows: Vec<Option<SparseVec<QPoly>>>,
    col_rows: Vec<BTreeSet<usize>>,
}

impl Work {
    fn entry(&self, i: usize, j: usize) -> Option<&QPoly> {
        let r = self.rows[i].as_ref()?;
        r.binary_search_by_key(&j, |e| e.0).ok().map(|k| &r[k].1)
    }

    fn replace_row(&mut self, i: usize, new: SparseVec<QPoly>) {
        if let Some(old) = self.rows[i].take() {
            for (c, _) in &old {
                self.col_rows[*c].remove(&i);
            }
        }
        for (c, _) in &new {
            self.col_rows[*c].insert(i);
        }
        self.rows[i] = Some(new);
    }

    fn remove_row(&mut self, i: usize) {
        if let Some(old) = self.rows[i].take() {
            for (c, _) in &old {
                self.col_rows[*c].remove(&i);
            }
        }
    }

    /// Minimal degree, then minimal height, then smallest Markowitz cost.
    fn pick_pivot(&self) -> Option<(usize, usize)> {
        let mut best: Option<((usize, u64, usize), (usize, usize))> = None;
        for (i, r) in self.rows.iter().enumerate() {
            let Some(r) = r else { continue };
            for (j, p) in r {
                let key = (
                    p.degree().unwrap(),
                    p.height(),
                    (r.len() - 1) * (self.col_rows[*j].len() - 1),
                );
                if best.as_ref().is_none_or(|(k, _)| key < *k) {
                    best = Some((key, (i, *j)));
                }
            }
        }
        best.map(|(_, ij)| ij)
    }
}

/// `v - q·w` for polynomial rows.
fn row_sub(v: &[(usize, QPoly)], q: &QPoly, w: &[(usize, QPoly)]) -> SparseVec<QPoly> {
    let mut out = Vec::with_capacity(v.len() + w.len());
    let (mut i, mut j) = (0, 0);
    while i < v.len() || j < w.len() {
        if j == w.len() || (i < v.len() && v[i].0 < w[j].0) {
            out.push(v[i].clone());
            i += 1;
        } else if i == v.len() || w[j].0 < v[i].0 {
            out.push((w[j].0, -(q * &w[j].1)));
            j += 1;
        } else {
            let x = &v[i].1 - &(q * &w[j].1);
            if !x.is_zero() {
                out.push((v[i].0, x));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Rescales a row by a rational unit so its coefficients are coprime integers.
fn primitivize(row: SparseVec<QPoly>) -> SparseVec<QPoly> {
    let coeffs = || row.iter().flat_map(|(_, p)| p.coeffs().iter());
    let l = denom_lcm(coeffs());
    let g = numer_gcd(coeffs());
    if num_traits::Zero::is_zero(&g) {
        return row;
    }
    let s = Rat::new(l, g);
    if num_traits::One::is_one(&s) {
        return row;
    }
    row.into_iter().map(|(j, p)| (j, p.scale(&s))).collect()
}

/// Elementary divisors of `m` over `Q[τ]`.
pub fn snf(m: &PolyMatrix) -> SmithForm {
    snf_sparse(m.sparse_rows(), m.cols())
}

pub fn snf_sparse(rows: Vec<SparseVec<QPoly>>, ncols: usize) -> SmithForm {
    let mut w = Work { rows: Vec::with_capacity(rows.len()), col_rows: vec![BTreeSet::new(); ncols] };
    for (i, r) in rows.into_iter().enumerate() {
        w.rows.push(None);
        if !r.is_empty() {
            w.replace_row(i, primitivize(r));
        }
    }
    let mut diag: Vec<QPoly> = Vec::new();
    'outer: while let Some((pr, pc)) = w.pick_pivot() {
        let piv = w.entry(pr, pc).unwrap().clone();
        let prow = w.rows[pr].clone().unwrap();
        // clear the pivot column by Euclidean row operations
        let others: Vec<usize> = w.col_rows[pc].iter().copied().filter(|&i| i != pr).collect();
        let mut leftover = false;
        for i in others {
            let e = w.entry(i, pc).unwrap().clone();
            let (q, r) = e.div_rem(&piv);
            if !r.is_zero() {
                leftover = true;
            }
            if q.is_zero() {
                continue;
            }
            let new = row_sub(w.rows[i].as_ref().unwrap(), &q, &prow);
            if new.is_empty() {
                w.remove_row(i);
            } else {
                w.replace_row(i, primitivize(new));
            }
        }
        if leftover {
            continue 'outer;
        }
        // the pivot column is now clean: column operations only touch the pivot row
        let mut reduced = Vec::with_capacity(prow.len());
        let mut divides_row = true;
        for (j, p) in &prow {
            if *j == pc {
                reduced.push((*j, p.clone()));
                continue;
            }
            let r = p.rem(&piv);
            if !r.is_zero() {
                divides_row = false;
                reduced.push((*j, r));
            }
        }
        if divides_row {
            w.remove_row(pr);
            diag.push(piv.monic());
        } else {
            w.replace_row(pr, reduced);
        }
    }
    SmithForm { rank: diag.len(), divisors: divisibility_chain(diag) }
}

/// Turns any list of nonzero diagonal entries into the equivalent divisor chain.
pub fn divisibility_chain(mut d: Vec<QPoly>) -> Vec<QPoly> {
    let n = d.len();
    for i in 0..n {
        for j in i + 1..n {
            if d[i].divides(&d[j]) {
                continue;
            }
            let g = d[i].gcd(&d[j]);
            let l = (&d[i] * &d[j]).exact_div(&g).unwrap().monic();
            d[i] = g;
            d[j] = l;
        }
    }
    d.into_iter().map(|p| p.monic()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn snf_examples() {
        let diag = PolyMatrix::from_int_rows(&[&[&[1], &[]], &[&[], &[0, 1]]]);
        assert_eq!(snf(&diag).divisors, vec![QPoly::one(), QPoly::x()]);

        // [[τ, 1], [0, τ]] → [1, τ²]
        let m = PolyMatrix::from_int_rows(&[&[&[0, 1], &[1]], &[&[], &[0, 1]]]);
        let s = snf(&m);
        assert_eq!(s.divisors, vec![QPoly::one(), QPoly::x().pow(2)]);
        assert_eq!(s.rank, 2);
        assert_eq!(s.rank_at_rat(&Rat::from_integer(0.into())), 1);

        let empty = snf(&PolyMatrix::zeros(0, 0));
        assert_eq!(empty, SmithForm { divisors: vec![], rank: 0 });
    }

    #[test]
    fn chain_fixup() {
        let d = divisibility_chain(vec![QPoly::from_ints(&[-1, 1]), QPoly::from_ints(&[-2, 1])]);
        assert_eq!(d, vec![QPoly::one(), QPoly::from_ints(&[2, -3, 1])]);
    }

    #[test]
    fn non_diagonal_gcd_structure() {
        // [[τ-1, 0], [0, τ-2]] ~ diag(1, (τ-1)(τ-2)); [[τ, τ], [τ, τ]] has rank 1 with divisor τ
        let m = PolyMatrix::from_int_rows(&[&[&[-1, 1], &[]], &[&[], &[-2, 1]]]);
        assert_eq!(snf(&m).divisors, vec![QPoly::one(), QPoly::from_ints(&[2, -3, 1])]);
        let m = PolyMatrix::from_int_rows(&[&[&[0, 1], &[0, 1]], &[&[0, 1], &[0, 1]]]);
        assert_eq!(snf(&m).divisors, vec![QPoly::x()]);
    }
}
