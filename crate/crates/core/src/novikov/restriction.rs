use crate::algebra::field::{Field, NumberField, RationalField, Scalar};
use crate::algebra::linalg::{kernel, rank, transpose, Echelon};
use crate::cochain::{twisted_coboundary_rows, CochainBasis};
use crate::cocycle::IntegralOneCocycle;
use crate::complex::{SimplicialComplex, Subcomplex};
use crate::error::{AlgebraError, Result};

/// Whether `H^q(X, A; E_a) → H^q(X; E_a)` is surjective.
///
/// Surjectivity means every cocycle of `X` is a relative cocycle plus a coboundary, so
/// it is decided by comparing `dim(Z_rel + B)` with `dim Z`.
pub fn restriction_epi(x: &SimplicialComplex, sub: &Subcomplex, z: &IntegralOneCocycle, a: &Scalar, q: usize) -> Result<bool> {
    if a.is_zero() {
        return Err(AlgebraError::ZeroMonodromy.into());
    }
    if q > x.dim() {
        return Ok(true);
    }
    Ok(match a {
        Scalar::Rational(r) => epi_in(&RationalField, x, sub, z, r, q)?,
        Scalar::Algebraic { field, residue } => epi_in::<NumberField>(field, x, sub, z, residue, q)?,
    })
}

fn epi_in<F: Field>(
    f: &F,
    x: &SimplicialComplex,
    sub: &Subcomplex,
    z: &IntegralOneCocycle,
    a: &F::Elem,
    q: usize,
) -> Result<bool, AlgebraError> {
    let abs = CochainBasis::absolute(x);
    let rel = CochainBasis::relative(x, sub);
    let cocycle_dim = x.count(q) - rank(f, twisted_coboundary_rows(f, x, z, &abs, q, a)?, x.count(q))?;

    let mut span = Echelon::new(x.count(q));
    let rel_rows = twisted_coboundary_rows(f, x, z, &rel, q, a)?;
    for v in kernel(f, &rel_rows, rel.dim(q))? {
        let embedded: alloc::vec::Vec<_> = v.into_iter().map(|(k, e)| (rel.members[q][k], e)).collect();
        span.insert(f, &embedded)?;
    }
    if q > 0 {
        let prev = twisted_coboundary_rows(f, x, z, &abs, q - 1, a)?;
        for b in transpose(&prev, x.count(q - 1)) {
            span.insert(f, &b)?;
        }
    }
    Ok(span.dim() == cocycle_dim)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_subcomplexes() {
        let x = SimplicialComplex::build(&[[0, 1], [1, 2], [0, 2]]).unwrap();
        let z = IntegralOneCocycle::validate(&x, &[(0, 1, 1)], true).unwrap();
        let a = Scalar::int(1);
        for q in 0..=1 {
            assert!(restriction_epi(&x, &Subcomplex::empty(&x), &z, &a, q).unwrap());
            // A = X: surjective iff the target vanishes; at a = 1 it does not
            assert!(!restriction_epi(&x, &Subcomplex::full(&x), &z, &a, q).unwrap());
            assert!(restriction_epi(&x, &Subcomplex::full(&x), &z, &Scalar::int(2), q).unwrap());
        }
    }
}
