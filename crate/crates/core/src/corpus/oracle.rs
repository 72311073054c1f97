//! Twisted cohomology of mapping tori from the Wang sequence
//! `H^i(T_h; E_a) ≅ ker(h* − a | H^i(F)) ⊕ coker(h* − a | H^{i-1}(F))`.

use alloc::vec::Vec;

use super::SimplicialSelfMap;
use crate::algebra::field::{Field, NumberField, RationalField, Scalar};
use crate::algebra::linalg::{rank, SparseVec};
use crate::algebra::rat::{rat_int, Rat};
use crate::cohomology::CohomologyBasis;
use crate::cocycle::IntegralOneCocycle;
use crate::error::{AlgebraError, Error, Result};

/// Matrix of `h*` on `H^q(F; Q)` in the representative basis; column `j` holds the
/// coordinates of `h*` applied to the `j`-th representative.
pub fn induced_action(h: &SimplicialSelfMap, q: usize) -> Result<Vec<Vec<Rat>>> {
    let f = RationalField;
    let x = &h.source;
    let z = IntegralOneCocycle::zero(x);
    let basis = CohomologyBasis::compute(&f, x, &z, &rat_int(1), q)?;
    let d = basis.dim();
    let mut m = alloc::vec![alloc::vec![rat_int(0); d]; d];
    for (j, rep) in basis.reps().enumerate() {
        let dense: Vec<Rat> = {
            let mut v = alloc::vec![rat_int(0); x.count(q)];
            for (k, c) in rep {
                v[*k] = c.clone();
            }
            v
        };
        let pulled: SparseVec<Rat> = x
            .simplices(q)
            .iter()
            .enumerate()
            .filter_map(|(k, s)| {
                let (img, sign) = h.apply(s);
                let c = &dense[x.index_of(&img).unwrap()];
                (*c != rat_int(0)).then(|| (k, c * rat_int(sign)))
            })
            .collect();
        let coords = basis
            .coordinates(&f, &pulled)
            .ok_or_else(|| Error::NotAnIsomorphism("pullback of a cocycle is not a cocycle".into()))?;
        for (i, c) in coords.into_iter().enumerate() {
            m[i][j] = c;
        }
    }
    Ok(m)
}

fn shifted_rank<F: Field>(f: &F, m: &[Vec<Rat>], a: &F::Elem) -> Result<usize, AlgebraError> {
    let rows: Vec<SparseVec<F::Elem>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .enumerate()
                .filter_map(|(j, c)| {
                    let mut e = f.from_rat(c);
                    if i == j {
                        e = f.sub(&e, a);
                    }
                    (!f.is_zero(&e)).then_some((j, e))
                })
                .collect()
        })
        .collect();
    rank(f, rows, m.len())
}

fn dims_in<F: Field>(f: &F, actions: &[Vec<Vec<Rat>>], a: &F::Elem) -> Result<Vec<usize>, AlgebraError> {
    let ranks = actions.iter().map(|m| shifted_rank(f, m, a)).collect::<Result<Vec<_>, _>>()?;
    Ok((0..=actions.len())
        .map(|i| {
            let ker = actions.get(i).map_or(0, |m| m.len() - ranks[i]);
            let coker = if i > 0 { actions[i - 1].len() - ranks[i - 1] } else { 0 };
            ker + coker
        })
        .collect())
}

/// Dimensions `dim H^i(T_h; E_a)` for `i = 0..=dim F + 1` from the actions of `h*` on
/// `H^0(F), …, H^{dim F}(F)`.
pub fn mv_oracle_dims_from_action(actions: &[Vec<Vec<Rat>>], a: &Scalar) -> Result<Vec<usize>> {
    if a.is_zero() {
        return Err(AlgebraError::ZeroMonodromy.into());
    }
    Ok(match a {
        Scalar::Rational(r) => dims_in(&RationalField, actions, r)?,
        Scalar::Algebraic { field, residue } => dims_in::<NumberField>(field, actions, residue)?,
    })
}

/// Wang-sequence dimensions for the mapping torus of a simplicial automorphism.
pub fn mv_oracle_dims(h: &SimplicialSelfMap, a: &Scalar) -> Result<Vec<usize>> {
    let actions = (0..=h.source.dim()).map(|q| induced_action(h, q)).collect::<Result<Vec<_>>>()?;
    mv_oracle_dims_from_action(&actions, a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::circle;

    #[test]
    fn reflection_acts_by_minus_one() {
        let c = circle(3).unwrap().complex;
        let h = SimplicialSelfMap::new(c, alloc::vec![0, 2, 1]).unwrap();
        assert_eq!(induced_action(&h, 1).unwrap(), alloc::vec![alloc::vec![rat_int(-1)]]);
        assert_eq!(mv_oracle_dims(&h, &Scalar::int(-1)).unwrap(), alloc::vec![0, 1, 1]);
        assert_eq!(mv_oracle_dims(&h, &Scalar::int(1)).unwrap(), alloc::vec![1, 1, 0]);
        assert_eq!(mv_oracle_dims(&h, &Scalar::int(3)).unwrap(), alloc::vec![0, 0, 0]);
    }
}
