use alloc::vec::Vec;

use super::{poly_matrix, PolyComplex};
use crate::algebra::linalg::SparseVec;
use crate::algebra::poly::QPoly;
use crate::algebra::rat::rat_int;
use crate::cochain::CochainBasis;
use crate::cocycle::IntegralOneCocycle;
use crate::complex::{face, SimplicialComplex, Subcomplex};
use crate::error::Result;

/// The twisted cochain complex with formal monodromy `τ`.
///
/// Each Laurent row of `δ^q` is stored multiplied by `τ^{-row_shifts[q][i]}` so that its
/// lowest exponent is zero; this changes ranks only at `τ = 0`.
#[derive(Clone, Debug)]
pub struct TwistedComplex {
    pub complex: PolyComplex,
    pub row_shifts: Vec<Vec<i64>>,
    pub basis: CochainBasis,
}

pub fn twisted_complex(x: &SimplicialComplex, z: &IntegralOneCocycle) -> Result<TwistedComplex> {
    build(x, z, CochainBasis::absolute(x))
}

/// Cochains vanishing on `a`.
pub fn relative_twisted_complex(x: &SimplicialComplex, a: &Subcomplex, z: &IntegralOneCocycle) -> Result<TwistedComplex> {
    build(x, z, CochainBasis::relative(x, a))
}

fn build(x: &SimplicialComplex, z: &IntegralOneCocycle, basis: CochainBasis) -> Result<TwistedComplex> {
    let top = x.dim();
    let ranks: Vec<usize> = (0..=top).map(|q| basis.dim(q)).collect();
    let mut differentials = Vec::with_capacity(top + 1);
    let mut row_shifts = Vec::with_capacity(top + 1);
    for q in 0..=top {
        let mut rows: Vec<SparseVec<QPoly>> = Vec::new();
        let mut shifts = Vec::new();
        if q < top {
            for &r in &basis.members[q + 1] {
                let s = &x.simplices(q + 1)[r];
                let mut laurent: Vec<(usize, i64, i64)> = Vec::with_capacity(s.len());
                for i in 0..s.len() {
                    let fi = x.index_of(&face(s, i)).unwrap();
                    let Some(col) = basis.position[q][fi] else { continue };
                    let exp = if i == 0 { z.get(x, s[0], s[1]) } else { 0 };
                    laurent.push((col, exp, if i % 2 == 0 { 1 } else { -1 }));
                }
                let shift = laurent.iter().map(|e| e.1).min().unwrap_or(0);
                let mut row: SparseVec<QPoly> = laurent
                    .into_iter()
                    .map(|(col, exp, sign)| (col, QPoly::monomial(rat_int(sign), (exp - shift) as usize)))
                    .collect();
                row.sort_by_key(|e| e.0);
                rows.push(row);
                shifts.push(shift);
            }
        }
        differentials.push(poly_matrix(rows, ranks[q]));
        row_shifts.push(shifts);
    }
    let complex = PolyComplex { ranks, differentials };
    let weights: Vec<Vec<u32>> = row_shifts
        .iter()
        .map(|s| {
            let m = s.iter().copied().min().unwrap_or(0);
            s.iter().map(|&k| (k - m) as u32).collect()
        })
        .collect();
    complex.check_square_zero(Some(&weights))?;
    Ok(TwistedComplex { complex, row_shifts, basis })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::Scalar;

    fn circle() -> (SimplicialComplex, IntegralOneCocycle) {
        let x = SimplicialComplex::build(&[[0, 1], [1, 2], [0, 2]]).unwrap();
        let z = IntegralOneCocycle::validate(&x, &[(0, 1, 1)], true).unwrap();
        (x, z)
    }

    #[test]
    fn circle_divisor() {
        let (x, z) = circle();
        let t = twisted_complex(&x, &z).unwrap();
        let s = t.complex.smith(0);
        assert_eq!(s.divisors.last().unwrap(), &QPoly::from_ints(&[-1, 1]));
        assert_eq!(t.complex.evaluate_all(&Scalar::int(1)).unwrap(), alloc::vec![1, 1]);
        assert_eq!(t.complex.evaluate_all(&Scalar::ratio(2, 3)).unwrap(), alloc::vec![0, 0]);
    }

    #[test]
    fn untwisted_has_no_tau() {
        let x = SimplicialComplex::build(&[[0, 1, 2], [1, 2, 3]]).unwrap();
        let t = twisted_complex(&x, &IntegralOneCocycle::zero(&x)).unwrap();
        assert!(t.complex.differentials.iter().all(|m| m.entries().iter().all(|p| p.degree().unwrap_or(0) == 0)));
    }

    #[test]
    fn relative_extremes() {
        let (x, z) = circle();
        let full = relative_twisted_complex(&x, &Subcomplex::full(&x), &z).unwrap();
        assert_eq!(full.complex.evaluate_all(&Scalar::int(3)).unwrap(), alloc::vec![0, 0]);
        let none = relative_twisted_complex(&x, &Subcomplex::empty(&x), &z).unwrap();
        assert_eq!(none.complex, twisted_complex(&x, &z).unwrap().complex);
    }
}
