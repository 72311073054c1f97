use alloc::vec::Vec;

use super::{poly_matrix, PolyComplex};
use crate::algebra::linalg::SparseVec;
use crate::algebra::poly::QPoly;
use crate::cut::CutPresentation;
use crate::error::Result;

/// `C^q = C^q(N)[τ] ⊕ C^{q-1}(V)[τ]` with `δ(α, β) = (δ_N α, (i₊* − τ i₋*)α − δ_V β)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeformationComplex {
    pub complex: PolyComplex,
    /// `#q`-simplices of `N` per degree; the `N` block comes first in every `C^q`.
    pub n_counts: Vec<usize>,
}

pub fn deformation_complex(cut: &CutPresentation) -> Result<DeformationComplex> {
    let n = &cut.n;
    let v_count = |d: usize| cut.v.as_ref().map_or(0, |v| v.count(d));
    let top = match cut.v_dim() {
        Some(dv) => n.dim().max(dv + 1),
        None => n.dim(),
    };
    let n_counts: Vec<usize> = (0..=top).map(|q| n.count(q)).collect();
    let ranks: Vec<usize> = (0..=top)
        .map(|q| n.count(q) + if q > 0 { v_count(q - 1) } else { 0 })
        .collect();
    let mut differentials = Vec::with_capacity(top + 1);
    for q in 0..=top {
        let offset = n.count(q); // start of the V block in C^q
        let mut rows: Vec<SparseVec<QPoly>> = Vec::new();
        if q < n.dim() {
            for r in n.coboundary_matrix(q)?.rows {
                rows.push(r.into_iter().map(|(j, x)| (j, QPoly::from_ints(&[x]))).collect());
            }
        } else {
            rows.extend((0..n.count(q + 1)).map(|_| Vec::new()));
        }
        if let Some(v) = &cut.v {
            if q <= v.dim() {
                let plus = cut.pullback(&cut.i_plus, q);
                let minus = cut.pullback(&cut.i_minus, q);
                let dv = if q > 0 { Some(v.coboundary_matrix(q - 1)?) } else { None };
                for k in 0..v.count(q) {
                    let mut row: SparseVec<QPoly> = Vec::new();
                    for (j, s) in &plus.rows[k] {
                        row.push((*j, QPoly::from_ints(&[*s])));
                    }
                    for (j, s) in &minus.rows[k] {
                        row.push((*j, QPoly::from_ints(&[0, -*s])));
                    }
                    if let Some(dv) = &dv {
                        for (j, s) in &dv.rows[k] {
                            row.push((offset + *j, QPoly::from_ints(&[-*s])));
                        }
                    }
                    row.sort_by_key(|e| e.0);
                    rows.push(row);
                }
            }
        }
        let ncols = ranks[q];
        let nrows = if q < top { ranks[q + 1] } else { 0 };
        rows.resize_with(nrows, Vec::new);
        differentials.push(poly_matrix(rows, ncols));
    }
    let complex = PolyComplex { ranks, differentials };
    complex.check_square_zero(None)?;
    Ok(DeformationComplex { complex, n_counts })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::Scalar;
    use crate::complex::SimplicialComplex;
    use crate::novikov::evaluate_at_zero;

    fn cut_circle() -> CutPresentation {
        let n = SimplicialComplex::build(&[[0, 1]]).unwrap();
        let v = SimplicialComplex::build(&[[0]]).unwrap();
        CutPresentation::new(n, Some(v), alloc::vec![0], alloc::vec![1]).unwrap()
    }

    #[test]
    fn interval_cut() {
        let c = deformation_complex(&cut_circle()).unwrap();
        assert_eq!(c.complex.ranks, alloc::vec![2, 2]);
        // δ⁰ = [[-1, 1], [1, -τ]]
        let d0 = c.complex.differential(0).unwrap();
        assert_eq!(d0.get(1, 0), &QPoly::one());
        assert_eq!(d0.get(1, 1), &QPoly::from_ints(&[0, -1]));
        assert_eq!(c.complex.smith(0).divisors, alloc::vec![QPoly::one(), QPoly::from_ints(&[-1, 1])]);
        assert_eq!(c.complex.evaluate_all(&Scalar::int(1)).unwrap(), alloc::vec![1, 1]);
        assert_eq!(c.complex.evaluate_all(&Scalar::int(2)).unwrap(), alloc::vec![0, 0]);
        assert_eq!((evaluate_at_zero(&c, 0), evaluate_at_zero(&c, 1)), (0, 0));
    }

    #[test]
    fn empty_v_is_plain_cochains() {
        let n = SimplicialComplex::build(&[[0, 1], [1, 2], [0, 2]]).unwrap();
        let cut = CutPresentation::new(n, None, alloc::vec![], alloc::vec![]).unwrap();
        let c = deformation_complex(&cut).unwrap();
        assert_eq!(c.complex.evaluate_all(&Scalar::int(5)).unwrap(), alloc::vec![1, 1]);
        assert_eq!((evaluate_at_zero(&c, 0), evaluate_at_zero(&c, 1)), (1, 1));
    }
}
