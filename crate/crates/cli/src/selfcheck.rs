//! Cross-convention checks over the built-in corpus.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use novikov_core::algebra::{rat_int, Field, PolyMatrix, Rat, RationalField, Scalar};
use novikov_core::cochain::{twisted_coboundary, twisted_cup};
use novikov_core::cocycle::IntegralOneCocycle;
use novikov_core::complex::SimplicialComplex;
use novikov_core::corpus::{self, GeneratedSpace, SimplicialSelfMap};
use novikov_core::invariants::twisted_dims;
use novikov_core::novikov::deformation_complex;
use novikov_core::Result;

#[derive(Default)]
struct Group {
    name: &'static str,
    passed: usize,
    failures: Vec<String>,
}

impl Group {
    fn new(name: &'static str) -> Self {
        Group { name, ..Group::default() }
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if ok {
            self.passed += 1;
        } else {
            self.failures.push(what());
        }
    }
}

fn random_rat(rng: &mut ChaCha8Rng) -> Rat {
    loop {
        let n: i64 = rng.random_range(-20..=20);
        if n != 0 {
            return Rat::new(n.into(), rng.random_range(1..=7).into());
        }
    }
}

fn random_cochain(rng: &mut ChaCha8Rng, len: usize) -> Vec<Rat> {
    (0..len).map(|_| if rng.random_bool(0.5) { rat_int(0) } else { rat_int(rng.random_range(-4..=4)) }).collect()
}

fn square_zero(differentials: &[PolyMatrix]) -> Option<usize> {
    differentials.windows(2).position(|w| w[0].rows() > 0 && w[1].rows() > 0 && !w[1].mul(&w[0]).is_zero())
}

fn twisted_square_zero(x: &SimplicialComplex, z: &IntegralOneCocycle, a: &Rat, q: usize, alpha: &[Rat]) -> Result<bool> {
    let f = RationalField;
    let d1 = twisted_coboundary(&f, x, z, q, a, alpha)?;
    let d2 = twisted_coboundary(&f, x, z, q + 1, a, &d1)?;
    Ok(d2.iter().all(|c| f.is_zero(c)))
}

/// `δ_{a₁a₂}(α ∪ β) = δ_{a₁}α ∪ β + (−1)^p α ∪ δ_{a₂}β`.
#[allow(clippy::too_many_arguments)]
fn leibniz(
    x: &SimplicialComplex,
    z: &IntegralOneCocycle,
    a1: &Rat,
    a2: &Rat,
    p: usize,
    q: usize,
    alpha: &[Rat],
    beta: &[Rat],
) -> Result<bool> {
    let f = RationalField;
    let cup = twisted_cup(&f, x, z, p, q, a2, alpha, beta)?;
    let lhs = twisted_coboundary(&f, x, z, p + q, &f.mul(a1, a2), &cup)?;
    let left = twisted_cup(&f, x, z, p + 1, q, a2, &twisted_coboundary(&f, x, z, p, a1, alpha)?, beta)?;
    let right = twisted_cup(&f, x, z, p, q + 1, a2, alpha, &twisted_coboundary(&f, x, z, q, a2, beta)?)?;
    Ok(lhs.iter().zip(&left).zip(&right).all(|((l, u), v)| *l == if p.is_multiple_of(2) { f.add(u, v) } else { f.sub(u, v) }))
}

/// Matrices of the induced fiber action, one per degree.
type Actions = Vec<Vec<Vec<Rat>>>;

/// Mapping tori with the induced fiber actions used by the oracle.
fn mapping_tori() -> Result<Vec<(GeneratedSpace, Actions)>> {
    let actions = |h: &SimplicialSelfMap| -> Result<Actions> {
        (0..=h.source.dim()).map(|q| corpus::induced_action(h, q)).collect()
    };
    let point = SimplicialSelfMap::identity(SimplicialComplex::build(&[[0u32]])?);
    let c3 = corpus::circle(3)?.complex;
    let mut out = Vec::new();
    for k in [3usize, 5] {
        out.push((corpus::circle(k)?, actions(&point)?));
    }
    for map in [vec![0, 1, 2], vec![1, 2, 0], vec![0, 2, 1]] {
        let h = SimplicialSelfMap::new(c3.clone(), map)?;
        out.push((corpus::mapping_torus(&h)?, actions(&h)?));
    }
    let h = SimplicialSelfMap::identity(corpus::sphere(2)?);
    out.push((corpus::sphere_product_s1xsn(2)?, actions(&h)?));
    let (anosov, m) = corpus::anosov_torus_bundle()?;
    let transpose = vec![vec![rat_int(m[0][0]), rat_int(m[1][0])], vec![rat_int(m[0][1]), rat_int(m[1][1])]];
    out.push((anosov, vec![vec![vec![rat_int(1)]], transpose, vec![vec![rat_int(1)]]]));
    Ok(out)
}

/// Runs every group; the result lists per-group counts and the failing cases.
pub fn run(seed: u64, samples: usize) -> Result<Value> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let spaces = corpus::standard_corpus()?;
    let tori = mapping_tori()?;

    let mut poly = Group::new("deformation differentials square to zero");
    for s in spaces.iter().chain(tori.iter().map(|(s, _)| s)) {
        if let Some(cut) = &s.cut {
            let d = deformation_complex(cut)?;
            let bad = square_zero(&d.complex.differentials);
            poly.record(bad.is_none(), || format!("{}: δ^{} δ^{} ≠ 0", s.label, bad.unwrap_or(0) + 1, bad.unwrap_or(0)));
        }
    }

    let mut square = Group::new("twisted coboundary squares to zero");
    let mut cup = Group::new("Leibniz rule for the twisted cup product");
    for s in &spaces {
        let (x, z) = (&s.complex, &s.cocycle);
        for _ in 0..samples {
            let a = random_rat(&mut rng);
            for q in 0..x.dim().saturating_sub(1) {
                let alpha = random_cochain(&mut rng, x.count(q));
                let ok = twisted_square_zero(x, z, &a, q, &alpha)?;
                square.record(ok, || format!("{}: δ² ≠ 0 in degree {} at a = {}", s.label, q, a));
            }
            if x.dim() >= 1 {
                let p = rng.random_range(0..x.dim());
                let q = rng.random_range(0..x.dim() - p);
                let (a1, a2) = (random_rat(&mut rng), random_rat(&mut rng));
                let alpha = random_cochain(&mut rng, x.count(p));
                let beta = random_cochain(&mut rng, x.count(q));
                let ok = leibniz(x, z, &a1, &a2, p, q, &alpha, &beta)?;
                cup.record(ok, || format!("{}: Leibniz fails for p = {}, q = {}, a = {}, {}", s.label, p, q, a1, a2));
            }
        }
    }

    let mut oracle = Group::new("deformation at a = twisted at 1/a = mapping-torus oracle at 1/a");
    for (s, actions) in &tori {
        let d = deformation_complex(s.cut.as_ref().expect("mapping tori carry a cut"))?;
        for _ in 0..samples {
            let a = Scalar::rational(random_rat(&mut rng));
            let inv = a.inverse()?;
            let deformation = d.complex.evaluate_all(&a)?[..=s.dimension].to_vec();
            let twisted = twisted_dims(&s.complex, &s.cocycle, &inv)?;
            let wang = corpus::mv_oracle_dims_from_action(actions, &inv)?;
            oracle.record(deformation == twisted && twisted == wang, || {
                format!("{} at a = {}: {:?}, {:?}, {:?}", s.label, a, deformation, twisted, wang)
            });
        }
    }

    let groups = [poly, square, cup, oracle];
    let passed: usize = groups.iter().map(|g| g.passed).sum();
    let failed: usize = groups.iter().map(|g| g.failures.len()).sum();
    Ok(json!({
        "seed": seed,
        "passed": passed,
        "failed": failed,
        "groups": groups
            .iter()
            .map(|g| json!({ "name": g.name, "passed": g.passed, "failed": g.failures.len(), "failures": g.failures }))
            .collect::<Vec<_>>(),
    }))
}
