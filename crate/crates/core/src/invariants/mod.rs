//! Novikov numbers, the jump locus of twisted Betti numbers, and cup-length bounds.

mod bounds;
mod cup;

pub use bounds::{approximant_bounds, crit_bound, crit_bound_with, default_candidates, draw_surrogate, thm3_bound, CritBoundReport, Mode, DEFAULT_SEED};
pub use cup::{cup_length, verify_certificate, CertificateFactor, CupLengthCertificate, CupOptions};

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::algebra::factor::gcd_free_basis;
use crate::algebra::field::{NumberField, Scalar};
use crate::algebra::poly::QPoly;
use crate::algebra::snf::SmithForm;
use crate::cocycle::IntegralOneCocycle;
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::novikov::{twisted_complex, TwistedComplex};

/// One jump of `dim H^q` at the roots of `factor`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Jump {
    /// Monic, squarefree, coprime to every other reported factor, never `τ`.
    pub factor: QPoly,
    pub jumped_dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeJumps {
    pub q: usize,
    pub generic_dim: usize,
    pub jumps: Vec<Jump>,
}

/// Generic twisted Betti numbers and their jumps, in the direct monodromy convention.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JumpReport {
    pub degrees: Vec<DegreeJumps>,
    /// All distinct jump factors, sorted by degree then coefficients.
    pub factors: Vec<QPoly>,
    /// Degrees in which some elementary divisor is divisible by `τ`; these powers are not
    /// monodromies and are excluded from the jumps.
    pub tau_divisible: Vec<usize>,
}

impl JumpReport {
    pub fn novikov_numbers(&self) -> Vec<usize> {
        self.degrees.iter().map(|d| d.generic_dim).collect()
    }

    /// Dimensions predicted at `a`: the jumped value where `a` is a root of a factor,
    /// the generic value elsewhere.
    pub fn predicted_dims(&self, a: &Scalar) -> Vec<usize> {
        self.degrees
            .iter()
            .map(|d| {
                d.jumps
                    .iter()
                    .find(|j| a.eval_poly(&j.factor).is_zero())
                    .map_or(d.generic_dim, |j| j.jumped_dim)
            })
            .collect()
    }
}

/// A root of each factor: the rational root of a linear factor, otherwise the root class
/// of the factor in its own number field.
pub fn factor_root(factor: &QPoly) -> Result<Scalar> {
    if factor.degree() == Some(1) {
        let c = factor.coeffs();
        return Ok(Scalar::rational(-&c[0] / &c[1]));
    }
    Ok(Scalar::root_of(Arc::new(NumberField::new(factor.primitive_part())?)))
}

fn generic_dims(t: &TwistedComplex, smith: &[SmithForm]) -> Vec<usize> {
    (0..t.complex.ranks.len())
        .map(|q| t.complex.rank(q) - smith[q].rank - if q > 0 { smith[q - 1].rank } else { 0 })
        .collect()
}

/// `b_q(ξ) = rank C^q − r(δ^q) − r(δ^{q−1})` with generic ranks over `Q(τ)`.
pub fn novikov_numbers(x: &SimplicialComplex, z: &IntegralOneCocycle) -> Result<Vec<usize>> {
    let t = twisted_complex(x, z)?;
    let smith = t.complex.smith_all();
    let b = generic_dims(&t, &smith);
    check_euler(x, &b)?;
    Ok(b)
}

fn check_euler(x: &SimplicialComplex, b: &[usize]) -> Result<()> {
    let chi: i64 = b.iter().enumerate().map(|(q, &d)| if q % 2 == 0 { d as i64 } else { -(d as i64) }).sum();
    if chi != x.euler_characteristic() {
        return Err(Error::Inconsistency(format!(
            "Euler characteristic {} differs from the alternating sum {} of Novikov numbers",
            x.euler_characteristic(),
            chi
        )));
    }
    Ok(())
}

pub fn jump_locus(x: &SimplicialComplex, z: &IntegralOneCocycle) -> Result<JumpReport> {
    jump_locus_of(x, &twisted_complex(x, z)?)
}

/// Jump locus from a prebuilt twisted complex of `x`.
pub fn jump_locus_of(x: &SimplicialComplex, t: &TwistedComplex) -> Result<JumpReport> {
    let smith = t.complex.smith_all();
    let generic = generic_dims(t, &smith);
    check_euler(x, &generic)?;
    let tau = QPoly::x();
    let all: Vec<QPoly> = gcd_free_basis(smith.iter().flat_map(|s| s.divisors.iter()).filter(|d| !d.is_constant()))
        .into_iter()
        .filter(|f| *f != tau)
        .collect();
    let tau_divisible = (0..smith.len()).filter(|&q| smith[q].divisors.iter().any(|d| tau.divides(d))).collect();
    let mut degrees = Vec::with_capacity(generic.len());
    for (q, &g) in generic.iter().enumerate() {
        let mut jumps = Vec::new();
        for f in &all {
            let out = smith[q].rank_mod(f);
            let inc = if q > 0 { smith[q - 1].rank_mod(f) } else { 0 };
            let dim = t.complex.rank(q) - out - inc;
            if dim != g {
                if dim < g {
                    return Err(Error::Inconsistency(format!("dimension drops below the generic value at {}", f)));
                }
                jumps.push(Jump { factor: f.clone(), jumped_dim: dim });
            }
        }
        degrees.push(DegreeJumps { q, generic_dim: g, jumps });
    }
    let mut factors: Vec<QPoly> = degrees.iter().flat_map(|d| d.jumps.iter().map(|j| j.factor.clone())).collect();
    factors.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
    factors.dedup();
    Ok(JumpReport { degrees, factors, tau_divisible })
}

/// Exact `dim H^q(X; E_a)` for all `q`.
pub fn twisted_dims(x: &SimplicialComplex, z: &IntegralOneCocycle, a: &Scalar) -> Result<Vec<usize>> {
    twisted_complex(x, z)?.complex.evaluate_all(a)
}

/// Human-readable summary of a jump report.
pub fn describe_jumps(r: &JumpReport) -> String {
    let mut s = String::new();
    for d in &r.degrees {
        s.push_str(&format!("H^{}: generic {}", d.q, d.generic_dim));
        for j in &d.jumps {
            s.push_str(&format!("; {} at roots of {}", j.jumped_dim, j.factor));
        }
        s.push('\n');
    }
    s
}
