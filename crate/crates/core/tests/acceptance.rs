//! Acceptance criteria 1–9. Each criterion is one test and prints a one-line verdict;
//! run with `cargo test -p novikov-core --test acceptance -- --nocapture` to see them.

mod common;

use std::sync::Arc;
use std::time::{Duration, Instant};

use novikov_core::algebra::{rat, rat_int, NumberField, QPoly, Rat, Scalar};
use novikov_core::complex::Subcomplex;
use novikov_core::corpus::{self, GeneratedSpace, SimplicialSelfMap};
use novikov_core::invariants::{
    crit_bound, cup_length, factor_root, jump_locus, novikov_numbers, twisted_dims, verify_certificate, CupOptions,
    DEFAULT_SEED,
};
use novikov_core::novikov::{deformation_complex, restriction_epi, twisted_complex};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn verdict(n: usize, title: &str, failures: &[String], elapsed: Duration) {
    let tag = if failures.is_empty() { "PASS" } else { "FAIL" };
    println!("criterion {} [{}] {} ({:.2?})", n, tag, title, elapsed);
    for f in failures {
        println!("    {}", f);
    }
    assert!(failures.is_empty(), "criterion {} failed: {:?}", n, failures);
}

fn random_rats(seed: u64, count: usize, avoid: &[Rat]) -> Vec<Rat> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n: i64 = rng.random_range(-60..=60);
        let d: i64 = rng.random_range(1..=25);
        if n == 0 {
            continue;
        }
        let r = rat(n, d);
        if !avoid.contains(&r) && !out.contains(&r) {
            out.push(r);
        }
    }
    out
}

fn check(failures: &mut Vec<String>, ok: bool, msg: impl FnOnce() -> String) {
    if !ok {
        failures.push(msg());
    }
}

#[test]
fn criterion_1_surface_twisted_dimensions() {
    let start = Instant::now();
    let mut failures = Vec::new();
    for g in [2usize, 3] {
        let t0 = Instant::now();
        let s = corpus::surface(g).unwrap();
        for a in random_rats(100 + g as u64, 10, &[rat_int(1)]) {
            let dims = twisted_dims(&s.complex, &s.cocycle, &Scalar::rational(a.clone())).unwrap();
            check(&mut failures, dims == vec![0, 2 * g - 2, 0], || format!("surface({}) at {}: {:?}", g, a, dims));
        }
        let at_one = twisted_dims(&s.complex, &s.cocycle, &Scalar::int(1)).unwrap();
        check(&mut failures, at_one == vec![1, 2 * g, 1], || format!("surface({}) at 1: {:?}", g, at_one));
        let dt = t0.elapsed();
        check(&mut failures, dt < Duration::from_secs(10), || format!("surface({}) took {:.2?}", g, dt));
    }
    verdict(1, "surface(g), g = 2, 3: dims (0, 2g-2, 0) at 10 random a, (1, 2g, 1) at a = 1", &failures, start.elapsed());
}

#[test]
fn criterion_2_surface_cup_length() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let s = corpus::surface(2).unwrap();
    let r = crit_bound(&s.complex, &s.cocycle, DEFAULT_SEED, &CupOptions::default()).unwrap();
    check(&mut failures, r.cl_lower_bound == 2 && r.crit_point_bound == 1, || {
        format!("cl {} crit {}", r.cl_lower_bound, r.crit_point_bound)
    });
    match &r.certificate {
        Some(c) => {
            let v = verify_certificate(&s.complex, &s.cocycle, c);
            check(&mut failures, v.is_ok(), || format!("certificate rejected: {:?}", v));
        }
        None => failures.push("no certificate".into()),
    }
    let dt = start.elapsed();
    check(&mut failures, dt < Duration::from_secs(30), || format!("took {:.2?}", dt));
    verdict(2, "crit bound of surface(2): cl = 2, crit = 1, certificate verified", &failures, dt);
}

fn shared_candidates(spaces: &[&GeneratedSpace]) -> Vec<Scalar> {
    let mut out = vec![Scalar::int(2), Scalar::ratio(1, 2), Scalar::int(1)];
    for s in spaces {
        for f in jump_locus(&s.complex, &s.cocycle).unwrap().factors {
            let root = factor_root(&f).unwrap();
            for c in [root.inverse().unwrap(), root] {
                if !out.contains(&c) {
                    out.push(c);
                }
            }
        }
    }
    out
}

#[test]
fn criterion_3_connected_sums() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let t = corpus::torus().unwrap();
    let zero = t.with_cocycle(novikov_core::cocycle::IntegralOneCocycle::zero(&t.complex), "torus");
    let sum = corpus::connected_sum(&zero, &t).unwrap();
    let r = crit_bound(&sum.complex, &sum.cocycle, DEFAULT_SEED, &CupOptions::default()).unwrap();
    check(&mut failures, r.cl_lower_bound == 2, || format!("0 # generator on T^2 # T^2: cl {}", r.cl_lower_bound));

    let manifolds: Vec<GeneratedSpace> = corpus::standard_corpus().unwrap().into_iter().filter(|s| s.manifold).collect();
    let mut pairs = 0;
    for i in 0..manifolds.len() {
        for j in i..manifolds.len() {
            let (a, b) = (&manifolds[i], &manifolds[j]);
            if a.dimension != b.dimension {
                continue;
            }
            let Ok(x) = corpus::connected_sum(a, b) else { continue };
            pairs += 1;
            let cands = shared_candidates(&[a, b, &x]);
            let opts = CupOptions { manifold: true };
            let cl = |s: &GeneratedSpace| cup_length(&s.complex, &s.cocycle, &cands, &opts).unwrap().cl_lower_bound;
            let (ca, cb, cx) = (cl(a), cl(b), cl(&x));
            check(&mut failures, cx >= ca.max(cb), || format!("{}: {} < max({}, {})", x.label, cx, ca, cb));
        }
    }
    check(&mut failures, pairs >= 10, || format!("only {} corpus pairs", pairs));
    verdict(3, &format!("T^2 # T^2 with 0 # generator has cl = 2; cl(X1 # X2) >= max on {} pairs", pairs), &failures, start.elapsed());

    // Logged, not asserted: the inequality needs orientability. The Klein bottle is excluded
    // from connected sums by its flag; forcing it shows the product class dying in H^2.
    let c3 = corpus::circle(3).unwrap();
    let refl = SimplicialSelfMap::new(c3.complex, vec![0, 2, 1]).unwrap();
    let klein = GeneratedSpace { manifold: true, ..corpus::mapping_torus(&refl).unwrap() };
    let s2 = corpus::surface(2).unwrap();
    let x = corpus::connected_sum(&klein, &s2).unwrap();
    let cands = shared_candidates(&[&klein, &s2, &x]);
    let cl = |s: &GeneratedSpace| cup_length(&s.complex, &s.cocycle, &cands, &CupOptions::default()).unwrap().cl_lower_bound;
    println!("    note: Klein bottle # surface(2): cl {} vs summands {} and {}", cl(&x), cl(&klein), cl(&s2));
}

#[test]
fn criterion_4_jump_locus_properties() {
    let start = Instant::now();
    let mut failures = Vec::new();
    for (k, s) in corpus::standard_corpus().unwrap().iter().enumerate() {
        let t = twisted_complex(&s.complex, &s.cocycle).unwrap();
        let smith = t.complex.smith_all();
        let r = jump_locus(&s.complex, &s.cocycle).unwrap();
        let novikov = novikov_numbers(&s.complex, &s.cocycle).unwrap();
        for f in &r.factors {
            let divides_some = smith.iter().any(|sf| sf.divisors.iter().any(|d| f.divides(d)));
            check(&mut failures, divides_some, || format!("{}: {} divides no elementary divisor", s.label, f));
            check(&mut failures, !f.is_constant() && *f != QPoly::x() && f.leading() == Some(&rat_int(1)), || {
                format!("{}: malformed factor {}", s.label, f)
            });
            let root = factor_root(f).unwrap();
            let direct = twisted_dims(&s.complex, &s.cocycle, &root).unwrap();
            check(&mut failures, direct == r.predicted_dims(&root), || {
                format!("{}: at a root of {} dims {:?} vs predicted {:?}", s.label, f, direct, r.predicted_dims(&root))
            });
        }
        for d in &r.degrees {
            for j in &d.jumps {
                check(&mut failures, j.jumped_dim > d.generic_dim, || format!("{}: jump not above generic in degree {}", s.label, d.q));
            }
        }
        let mut sampled = 0;
        for a in random_rats(400 + k as u64, 40, &[]) {
            let a = Scalar::rational(a);
            if r.factors.iter().any(|f| a.eval_poly(f).is_zero()) {
                continue;
            }
            let dims = twisted_dims(&s.complex, &s.cocycle, &a).unwrap();
            check(&mut failures, dims == novikov, || format!("{} at {}: {:?} vs {:?}", s.label, a, dims, novikov));
            sampled += 1;
            if sampled == 20 {
                break;
            }
        }
        check(&mut failures, sampled == 20, || format!("{}: only {} samples", s.label, sampled));
    }
    let dt = start.elapsed();
    check(&mut failures, dt < Duration::from_secs(60), || format!("took {:.2?}", dt));
    verdict(4, "jump loci on the corpus: finite factor set, generic = Novikov at 20 points, jumps exceed generic", &failures, dt);
}

#[test]
fn criterion_5_alexander_instance() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let x = corpus::alexander_style_instance().unwrap();
    let b = novikov_numbers(&x.complex, &x.cocycle).unwrap();
    check(&mut failures, b[1] == 0, || format!("Novikov numbers {:?}", b));
    let delta = QPoly::from_ints(&[2, -3, 2]).monic();
    let r = jump_locus(&x.complex, &x.cocycle).unwrap();
    let jumps_at_delta = r.degrees[1].jumps.iter().any(|j| j.factor == delta);
    check(&mut failures, jumps_at_delta, || format!("no H^1 jump at {}: {:?}", delta, r.degrees[1].jumps));
    let root = factor_root(&delta).unwrap();
    check(&mut failures, !root.is_dirichlet_unit().unwrap(), || "root of the Alexander polynomial is a unit".into());
    let c = crit_bound(&x.complex, &x.cocycle, DEFAULT_SEED, &CupOptions::default()).unwrap();
    check(&mut failures, c.crit_point_bound >= 1, || format!("crit bound {}", c.crit_point_bound));
    if let Some(cert) = &c.certificate {
        let v = verify_certificate(&x.complex, &x.cocycle, cert);
        check(&mut failures, v.is_ok(), || format!("certificate rejected: {:?}", v));
    }
    verdict(
        5,
        &format!("Alexander instance: b_1 = 0, H^1 jump at {} with non-unit roots, crit bound {}", delta, c.crit_point_bound),
        &failures,
        start.elapsed(),
    );
}

/// Corpus mapping tori with the action of the monodromy on the cohomology of the fiber.
fn mapping_tori() -> Vec<(GeneratedSpace, Vec<Vec<Vec<Rat>>>, usize)> {
    let actions = |h: &SimplicialSelfMap| (0..=h.source.dim()).map(|q| corpus::induced_action(h, q).unwrap()).collect::<Vec<_>>();
    let point = SimplicialSelfMap::identity(novikov_core::complex::SimplicialComplex::build(&[[0u32]]).unwrap());
    let c3 = corpus::circle(3).unwrap().complex;
    let mut out = Vec::new();
    for k in [3usize, 5] {
        out.push((corpus::circle(k).unwrap(), actions(&point), 1));
    }
    for map in [vec![0, 1, 2], vec![1, 2, 0], vec![0, 2, 1]] {
        let h = SimplicialSelfMap::new(c3.clone(), map).unwrap();
        out.push((corpus::mapping_torus(&h).unwrap(), actions(&h), 3));
    }
    for n in [2usize, 3] {
        let h = SimplicialSelfMap::identity(corpus::sphere(n).unwrap());
        out.push((corpus::sphere_product_s1xsn(n).unwrap(), actions(&h), n + 2));
    }
    let (anosov, m) = corpus::anosov_torus_bundle().unwrap();
    let transpose = vec![vec![rat_int(m[0][0]), rat_int(m[1][0])], vec![rat_int(m[0][1]), rat_int(m[1][1])]];
    out.push((anosov, vec![vec![vec![rat_int(1)]], transpose, vec![vec![rat_int(1)]]], 9));
    out
}

#[test]
fn criterion_6_convention_lock() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let golden = Scalar::root_of(Arc::new(NumberField::from_ints(&[1, -3, 1]).unwrap()));
    for (k, (x, actions, _)) in mapping_tori().iter().enumerate() {
        let d = deformation_complex(x.cut.as_ref().unwrap()).unwrap();
        let mut points: Vec<Scalar> = random_rats(600 + k as u64, 10, &[]).into_iter().map(Scalar::rational).collect();
        points.extend([Scalar::int(1), Scalar::int(-1), golden.clone()]);
        for a in points {
            let inv = a.inverse().unwrap();
            let deformation = d.complex.evaluate_all(&a).unwrap()[..=x.dimension].to_vec();
            let twisted = twisted_dims(&x.complex, &x.cocycle, &inv).unwrap();
            let oracle = corpus::mv_oracle_dims_from_action(actions, &inv).unwrap();
            check(&mut failures, deformation == twisted && twisted == oracle, || {
                format!("{} at a = {}: deformation {:?}, twisted {:?}, oracle {:?}", x.label, a, deformation, twisted, oracle)
            });
        }
    }
    verdict(6, "deformation at a = twisted at 1/a = Wang oracle at 1/a on every corpus mapping torus", &failures, start.elapsed());
}

#[test]
fn criterion_7_restriction_epimorphism() {
    let start = Instant::now();
    let mut failures = Vec::new();
    // The hypothesis is on the deformation parameter a; by the relative evaluation
    // isomorphism the twisted monodromy is 1/a, so a⁻¹ ∈ {1/2, 1/3, 2/5} is passed directly.
    let monodromies = [rat(1, 2), rat(1, 3), rat(2, 5)];
    let mut instances: Vec<(GeneratedSpace, Subcomplex)> =
        mapping_tori().into_iter().map(|(x, _, m)| {
            let collar = corpus::fiber_collar(&x, m);
            (x, collar)
        }).collect();
    instances.push(corpus::baumslag_solitar_instance(1, 2).unwrap());
    let mut checked = 0;
    for (x, collar) in &instances {
        for m in &monodromies {
            let a = Scalar::rational(m.clone());
            for q in 0..=x.dimension {
                let epi = restriction_epi(&x.complex, collar, &x.cocycle, &a, q).unwrap();
                check(&mut failures, epi, || format!("{}: H^{} restriction not onto at monodromy {}", x.label, q, m));
                checked += 1;
            }
        }
    }
    verdict(7, &format!("restriction H^q(X, A) -> H^q(X) onto for corpus collars ({} checks)", checked), &failures, start.elapsed());

    // Logged, not asserted: collars next to i₊ in BS(p, q)-type complexes whose jump point is
    // one of the monodromies above.
    for (p, q) in [(2usize, 1usize), (3, 1), (5, 2)] {
        let (x, collar) = corpus::baumslag_solitar_instance(p, q).unwrap();
        let m = rat(q as i64, p as i64);
        let epi: Vec<bool> = (0..=2)
            .map(|k| restriction_epi(&x.complex, &collar, &x.cocycle, &Scalar::rational(m.clone()), k).unwrap())
            .collect();
        println!("    note: {} collar at monodromy {}: onto {:?}", x.label, m, epi);
    }
}

#[test]
fn criterion_8_dirichlet_unit_table() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let root = |c: &[i64]| Scalar::root_of(Arc::new(NumberField::from_ints(c).unwrap()));
    let table: Vec<(&str, Scalar, bool)> = vec![
        ("1", Scalar::int(1), true),
        ("-1", Scalar::int(-1), true),
        ("2", Scalar::int(2), false),
        ("1/2", Scalar::ratio(1, 2), false),
        ("root of x^2 - x - 1", root(&[-1, -1, 1]), true),
        ("root of 2x^2 - 3x + 2", root(&[2, -3, 2]), false),
        ("root of x^2 - 3x + 1", root(&[1, -3, 1]), true),
    ];
    for (name, s, expected) in &table {
        let got = s.is_dirichlet_unit().unwrap();
        check(&mut failures, got == *expected, || format!("{}: got {}, expected {}", name, got, expected));
    }
    verdict(8, "Dirichlet-unit table", &failures, start.elapsed());
}

#[test]
fn criterion_9_algebraic_suite() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(9_000);
    for i in 0..200 {
        let m = common::random_poly_matrix(&mut rng);
        let points = common::probe_points(&m, &mut rng);
        if let Err(e) = common::check_smith(&m, &points) {
            failures.push(format!("matrix {}: {}", i, e));
        }
    }
    let c3 = corpus::circle(3).unwrap();
    let rot = SimplicialSelfMap::new(c3.complex.clone(), vec![1, 2, 0]).unwrap();
    let spaces = [
        c3,
        corpus::torus().unwrap(),
        corpus::mapping_torus(&rot).unwrap(),
        corpus::surface(2).unwrap(),
        corpus::baumslag_solitar_instance(1, 2).unwrap().0,
        corpus::sphere_product_s1xsn(2).unwrap(),
    ];
    for i in 0..100 {
        let s = &spaces[i % spaces.len()];
        let z = common::perturb(&mut rng, &s.complex, &s.cocycle);
        let (a1, a2) = (common::random_rat(&mut rng), common::random_rat(&mut rng));
        let n = s.complex.dim();
        for q in 0..n.saturating_sub(1) {
            let alpha = common::random_cochain(&mut rng, s.complex.count(q));
            if let Err(e) = common::check_square_zero(&s.complex, &z, &a1, q, &alpha) {
                failures.push(format!("instance {} ({}): {}", i, s.label, e));
            }
        }
        for p in 0..n {
            for q in 0..n - p {
                let alpha = common::random_cochain(&mut rng, s.complex.count(p));
                let beta = common::random_cochain(&mut rng, s.complex.count(q));
                if let Err(e) = common::check_leibniz(&s.complex, &z, &a1, &a2, p, q, &alpha, &beta) {
                    failures.push(format!("instance {} ({}): {}", i, s.label, e));
                }
            }
        }
    }
    verdict(9, "SNF vs minors, divisibility and pointwise rank on 200 matrices; δ² = 0 and Leibniz on 100 instances", &failures, start.elapsed());
}
