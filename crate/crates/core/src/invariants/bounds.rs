//! Critical-point bounds for rank-one classes and for approximations of higher-rank classes.

use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::cup::{cup_length, CupLengthCertificate, CupOptions};
use super::{factor_root, jump_locus, JumpReport};
use crate::algebra::field::Scalar;
use crate::algebra::poly::QPoly;
use crate::algebra::rat::Rat;
use crate::cocycle::IntegralOneCocycle;
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};

/// Seed used when the caller does not supply one.
pub const DEFAULT_SEED: u64 = 20_240_601;

/// Retries with a fresh surrogate when a run finds no product.
const SURROGATE_RETRIES: usize = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    ExhaustiveOverCandidates,
    /// A random rational stood in for a generic monodromy.
    Probabilistic,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::ExhaustiveOverCandidates => "exhaustive-over-candidates",
            Mode::Probabilistic => "probabilistic",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CritBoundReport {
    pub cl_lower_bound: usize,
    /// `max(cl_lower_bound − 1, 0)`.
    pub crit_point_bound: usize,
    pub certificate: Option<CupLengthCertificate>,
    pub mode: Mode,
    /// Seed of the surrogate generator, when one was used.
    pub seed: Option<u64>,
    pub surrogates: Vec<Rat>,
    pub candidates: Vec<Scalar>,
    /// Pairs of number fields whose mixed products were not searched.
    pub skipped: Vec<String>,
}

impl CritBoundReport {
    pub(crate) fn new(
        cl: usize,
        certificate: Option<CupLengthCertificate>,
        mode: Mode,
        candidates: Vec<Scalar>,
        skipped: Vec<String>,
    ) -> Self {
        CritBoundReport {
            cl_lower_bound: cl,
            crit_point_bound: cl.saturating_sub(1),
            certificate,
            mode,
            seed: None,
            surrogates: Vec::new(),
            candidates,
            skipped,
        }
    }
}

/// A rational `n/d` with `2 ≤ d`, `2d ≤ n ≤ 10⁶`, redrawn while it is a root of a factor in `avoid`.
pub fn draw_surrogate(rng: &mut ChaCha8Rng, avoid: &[QPoly]) -> Rat {
    loop {
        let d: i64 = rng.random_range(2..=500_000);
        let n: i64 = rng.random_range(2 * d..=1_000_000);
        let g = Rat::new(BigInt::from(n), BigInt::from(d));
        if avoid.iter().all(|f| !f.eval(&g).is_zero()) {
            return g;
        }
    }
}

/// One root per jump factor, the surrogate, `1`, and the inverses of all of them.
pub fn default_candidates(report: &JumpReport, surrogate: &Rat) -> Result<Vec<Scalar>> {
    let mut base: Vec<Scalar> = report.factors.iter().map(factor_root).collect::<Result<_>>()?;
    base.push(Scalar::rational(surrogate.clone()));
    let mut out: Vec<Scalar> = Vec::with_capacity(2 * base.len() + 1);
    for s in base {
        let inv = s.inverse()?;
        for c in [s, inv] {
            if !out.contains(&c) {
                out.push(c);
            }
        }
    }
    let one = Scalar::int(1);
    if !out.contains(&one) {
        out.push(one);
    }
    Ok(out)
}

/// Jump locus followed by a cup-length search over the default candidates.
pub fn crit_bound(x: &SimplicialComplex, z: &IntegralOneCocycle, seed: u64, opts: &CupOptions) -> Result<CritBoundReport> {
    let report = jump_locus(x, z)?;
    crit_bound_with(x, z, &report, seed, opts)
}

/// [`crit_bound`] with a jump report computed beforehand.
pub fn crit_bound_with(
    x: &SimplicialComplex,
    z: &IntegralOneCocycle,
    report: &JumpReport,
    seed: u64,
    opts: &CupOptions,
) -> Result<CritBoundReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut surrogates = Vec::new();
    let mut last = None;
    for _ in 0..=SURROGATE_RETRIES {
        let g = draw_surrogate(&mut rng, &report.factors);
        surrogates.push(g.clone());
        let candidates = default_candidates(report, &g)?;
        let r = cup_length(x, z, &candidates, opts)?;
        let done = r.cl_lower_bound > 0;
        last = Some(r);
        if done {
            break;
        }
    }
    let mut r = last.expect("at least one attempt");
    r.mode = Mode::Probabilistic;
    r.seed = Some(seed);
    r.surrogates = surrogates;
    Ok(r)
}

/// Best bound over the rank-one approximants `η = Σ n_i z_i` of a higher-rank class.
pub fn thm3_bound(
    x: &SimplicialComplex,
    base: &[IntegralOneCocycle],
    approximants: &[Vec<i64>],
    seed: u64,
    opts: &CupOptions,
) -> Result<CritBoundReport> {
    let reports = approximant_bounds(x, base, approximants, seed, opts)?;
    let mut best = reports[0].clone();
    for r in reports {
        if r.cl_lower_bound > best.cl_lower_bound {
            best = r;
        }
    }
    Ok(best)
}

/// One report per approximant, in input order.
pub fn approximant_bounds(
    x: &SimplicialComplex,
    base: &[IntegralOneCocycle],
    approximants: &[Vec<i64>],
    seed: u64,
    opts: &CupOptions,
) -> Result<Vec<CritBoundReport>> {
    if approximants.is_empty() || base.is_empty() {
        return Err(Error::ParameterOutOfRange("need at least one base class and one approximant".into()));
    }
    let mut etas = Vec::with_capacity(approximants.len());
    for n in approximants {
        if n.len() != base.len() || n.iter().all(|&c| c == 0) {
            return Err(Error::NotInSpan(n.clone()));
        }
        let terms: Vec<(i64, &IntegralOneCocycle)> = n.iter().copied().zip(base.iter()).collect();
        let eta = IntegralOneCocycle::combination(&terms);
        if eta.is_zero() {
            return Err(Error::NotInSpan(n.clone()));
        }
        etas.push(eta);
    }
    etas.iter().map(|eta| crit_bound(x, eta, seed, opts)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn surrogate_is_reproducible_and_large() {
        let mut a = ChaCha8Rng::seed_from_u64(7);
        let mut b = ChaCha8Rng::seed_from_u64(7);
        let g = draw_surrogate(&mut a, &[]);
        assert_eq!(g, draw_surrogate(&mut b, &[]));
        assert!(g >= Rat::from_integer(BigInt::from(2)));
    }

    #[test]
    fn circle_and_surface_bounds() {
        let c = corpus::circle(3).unwrap();
        let r = crit_bound(&c.complex, &c.cocycle, DEFAULT_SEED, &CupOptions::default()).unwrap();
        assert_eq!((r.cl_lower_bound, r.crit_point_bound), (0, 0));
        assert_eq!(r.mode, Mode::Probabilistic);
        let s = corpus::surface(2).unwrap();
        let r = crit_bound(&s.complex, &s.cocycle, DEFAULT_SEED, &CupOptions::default()).unwrap();
        assert_eq!((r.cl_lower_bound, r.crit_point_bound), (2, 1));
        assert_eq!(r.seed, Some(DEFAULT_SEED));
    }

    #[test]
    fn approximants_are_validated() {
        let c = corpus::circle(3).unwrap();
        let opts = CupOptions::default();
        assert!(matches!(thm3_bound(&c.complex, core::slice::from_ref(&c.cocycle), &[alloc::vec![0]], 1, &opts), Err(Error::NotInSpan(_))));
        assert!(matches!(
            thm3_bound(&c.complex, core::slice::from_ref(&c.cocycle), &[alloc::vec![1, 2]], 1, &opts),
            Err(Error::NotInSpan(_))
        ));
        let single = thm3_bound(&c.complex, core::slice::from_ref(&c.cocycle), &[alloc::vec![1]], 1, &opts).unwrap();
        assert_eq!(single, crit_bound(&c.complex, &c.cocycle, 1, &opts).unwrap());
    }
}
