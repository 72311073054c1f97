//! Cochain complexes over `Q[τ]` whose specializations at `τ = a` compute twisted cohomology.
//!
//! Two constructions are provided: the deformation complex of a cut presentation, and the
//! direct twisted complex of a complex with an integral cocycle (absolute or relative).
//! The deformation complex evaluated at `a` computes the twisted cohomology at `a⁻¹`.

mod deformation;
mod restriction;
mod twisted;

pub use deformation::{deformation_complex, DeformationComplex};
pub use restriction::restriction_epi;
pub use twisted::{relative_twisted_complex, twisted_complex, TwistedComplex};

use alloc::vec::Vec;

use crate::algebra::field::Scalar;
use crate::algebra::linalg::SparseVec;
use crate::algebra::poly::QPoly;
use crate::algebra::polymatrix::PolyMatrix;
use crate::algebra::rat::Rat;
use crate::algebra::snf::{snf, SmithForm};
use crate::error::{AlgebraError, Error, Result};

/// A finite cochain complex of free `Q[τ]`-modules.
///
/// `differentials[q]` is the matrix of `δ^q: C^q → C^{q+1}` (rows index `C^{q+1}`); the
/// last one has zero rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyComplex {
    pub ranks: Vec<usize>,
    pub differentials: Vec<PolyMatrix>,
}

impl PolyComplex {
    pub fn top_degree(&self) -> usize {
        self.ranks.len() - 1
    }

    pub fn rank(&self, q: usize) -> usize {
        self.ranks.get(q).copied().unwrap_or(0)
    }

    pub fn differential(&self, q: usize) -> Option<&PolyMatrix> {
        self.differentials.get(q)
    }

    fn rank_at_any(&self, q: usize, a: &Scalar) -> Result<usize, AlgebraError> {
        match self.differentials.get(q) {
            Some(m) if m.rows() > 0 && m.cols() > 0 => m.rank_at(a),
            _ => Ok(0),
        }
    }

    fn dim_at_any(&self, q: usize, a: &Scalar) -> Result<usize, AlgebraError> {
        let r_out = self.rank_at_any(q, a)?;
        let r_in = if q > 0 { self.rank_at_any(q - 1, a)? } else { 0 };
        Ok(self.rank(q) - r_out - r_in)
    }

    /// `dim H^q` of the complex specialized at `τ = a`, for `a ≠ 0`.
    pub fn evaluate(&self, a: &Scalar, q: usize) -> Result<usize> {
        if a.is_zero() {
            return Err(AlgebraError::ZeroMonodromy.into());
        }
        Ok(self.dim_at_any(q, a)?)
    }

    pub fn evaluate_all(&self, a: &Scalar) -> Result<Vec<usize>> {
        (0..self.ranks.len()).map(|q| self.evaluate(a, q)).collect()
    }

    /// Smith form of `δ^q`.
    pub fn smith(&self, q: usize) -> SmithForm {
        match self.differentials.get(q) {
            Some(m) => snf(m),
            None => SmithForm { divisors: Vec::new(), rank: 0 },
        }
    }

    pub fn smith_all(&self) -> Vec<SmithForm> {
        (0..self.ranks.len()).map(|q| self.smith(q)).collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.ranks
            .iter()
            .enumerate()
            .map(|(q, &r)| if q % 2 == 0 { r as i64 } else { -(r as i64) })
            .sum()
    }

    /// Checks `δ^{q+1} · W_q · δ^q = 0` exactly, where `W_q` is the diagonal `τ^{w}` weighting
    /// of `C^{q+1}` given by `weights` (all zero for an honest polynomial complex).
    pub(crate) fn check_square_zero(&self, weights: Option<&[Vec<u32>]>) -> Result<()> {
        for q in 0..self.differentials.len().saturating_sub(1) {
            let first = self.differentials[q].sparse_rows();
            let second = self.differentials[q + 1].sparse_rows();
            let w = weights.map(|w| &w[q]);
            for row in &second {
                let mut acc: alloc::collections::BTreeMap<usize, QPoly> = Default::default();
                for (j, p) in row {
                    let pj = match w {
                        Some(w) => p * &QPoly::monomial(Rat::from_integer(1.into()), w[*j] as usize),
                        None => p.clone(),
                    };
                    for (k, r) in &first[*j] {
                        let e = acc.entry(*k).or_default();
                        *e = &*e + &(&pj * r);
                    }
                }
                if acc.values().any(|p| !p.is_zero()) {
                    return Err(Error::NotAChainComplex(q));
                }
            }
        }
        Ok(())
    }
}

fn poly_matrix(rows: Vec<SparseVec<QPoly>>, ncols: usize) -> PolyMatrix {
    PolyMatrix::from_sparse_rows(rows, ncols)
}

/// `dim H^q` of the deformation complex at `τ = 0`, i.e. rational `H^q(N, i₊(V))`.
pub fn evaluate_at_zero(c: &DeformationComplex, q: usize) -> usize {
    c.complex
        .dim_at_any(q, &Scalar::Rational(Rat::from_integer(0.into())))
        .expect("rational elimination never fails")
}
