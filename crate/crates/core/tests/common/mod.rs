//! Oracles shared by the property and acceptance suites.

#![allow(dead_code)]

use novikov_core::algebra::{rat_int, snf, Field, PolyMatrix, QPoly, Rat, RationalField, Scalar};
use novikov_core::cochain::{twisted_coboundary, twisted_cup};
use novikov_core::cocycle::IntegralOneCocycle;
use novikov_core::complex::SimplicialComplex;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Determinant by cofactor expansion along the first row.
pub fn det(m: &[Vec<QPoly>]) -> QPoly {
    let n = m.len();
    if n == 0 {
        return QPoly::one();
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = QPoly::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<QPoly>> =
            m[1..].iter().map(|row| row.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, p)| p.clone()).collect()).collect();
        let term = &m[0][j] * &det(&minor);
        acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if n < k {
        return Vec::new();
    }
    let mut with: Vec<Vec<usize>> = subsets(n - 1, k - 1);
    for s in &mut with {
        s.push(n - 1);
    }
    with.extend(subsets(n - 1, k));
    with
}

/// Monic gcd of all `k × k` minors (zero when they all vanish).
pub fn determinantal_divisor(m: &PolyMatrix, k: usize) -> QPoly {
    let mut g = QPoly::zero();
    for rows in subsets(m.rows(), k) {
        for cols in subsets(m.cols(), k) {
            let sub: Vec<Vec<QPoly>> = rows.iter().map(|&i| cols.iter().map(|&j| m.get(i, j).clone()).collect()).collect();
            g = g.gcd(&det(&sub));
            if g.is_one() {
                return g;
            }
        }
    }
    if g.is_zero() {
        g
    } else {
        g.monic()
    }
}

fn random_poly(rng: &mut ChaCha8Rng, max_degree: usize) -> QPoly {
    let d = rng.random_range(0..=max_degree);
    QPoly::from_ints(&(0..=d).map(|_| rng.random_range(-3..=3)).collect::<Vec<i64>>())
}

fn random_sparse(rng: &mut ChaCha8Rng, rows: usize, cols: usize, max_degree: usize) -> PolyMatrix {
    let entries = (0..rows * cols)
        .map(|_| if rng.random_bool(0.35) { QPoly::zero() } else { random_poly(rng, max_degree) })
        .collect();
    PolyMatrix::from_entries(rows, cols, entries)
}

/// A random matrix of size at most `6 × 6` with entries of degree at most 4; half are
/// products through a narrower middle dimension so that ranks drop and divisors repeat.
pub fn random_poly_matrix(rng: &mut ChaCha8Rng) -> PolyMatrix {
    let rows = rng.random_range(1..=6);
    let cols = rng.random_range(1..=6);
    if rng.random_bool(0.5) {
        let mid = rng.random_range(1..=rows.min(cols));
        random_sparse(rng, rows, mid, 2).mul(&random_sparse(rng, mid, cols, 2))
    } else {
        random_sparse(rng, rows, cols, 4)
    }
}

/// Checks the Smith form of `m` against its determinantal divisors, the divisibility chain,
/// and pointwise ranks at the given rationals.
pub fn check_smith(m: &PolyMatrix, points: &[Rat]) -> Result<(), String> {
    let s = snf(m);
    for w in s.divisors.windows(2) {
        if !w[0].divides(&w[1]) {
            return Err(format!("{} does not divide {}", w[0], w[1]));
        }
    }
    if s.divisors.iter().any(|d| d.is_zero() || d.leading() != Some(&rat_int(1))) {
        return Err("divisors must be nonzero and monic".into());
    }
    let mut prod = QPoly::one();
    for k in 1..=s.rank {
        prod = &prod * &s.divisors[k - 1];
        let dk = determinantal_divisor(m, k);
        if dk != prod {
            return Err(format!("D_{} = {} but the product of divisors is {}", k, dk, prod));
        }
    }
    if s.rank < m.rows().min(m.cols()) && !determinantal_divisor(m, s.rank + 1).is_zero() {
        return Err(format!("a nonzero minor of size {} exceeds the rank", s.rank + 1));
    }
    for a in points {
        let direct = m.rank_at(&Scalar::rational(a.clone())).map_err(|e| e.to_string())?;
        if direct != s.rank_at_rat(a) {
            return Err(format!("rank at {} is {} but the divisors give {}", a, direct, s.rank_at_rat(a)));
        }
    }
    Ok(())
}

/// Rational points including the roots of the divisors, so that drops are exercised.
pub fn probe_points(m: &PolyMatrix, rng: &mut ChaCha8Rng) -> Vec<Rat> {
    let mut pts: Vec<Rat> = (0..3).map(|_| Rat::new(rng.random_range(-9..=9).into(), rng.random_range(1..=5).into())).collect();
    for d in snf(m).divisors {
        pts.extend(novikov_core::algebra::rational_roots(&d.primitive_part()));
    }
    pts
}

pub fn random_rat(rng: &mut ChaCha8Rng) -> Rat {
    loop {
        let n: i64 = rng.random_range(-20..=20);
        if n != 0 {
            return Rat::new(n.into(), rng.random_range(1..=7).into());
        }
    }
}

pub fn random_cochain(rng: &mut ChaCha8Rng, len: usize) -> Vec<Rat> {
    (0..len).map(|_| if rng.random_bool(0.5) { rat_int(0) } else { rat_int(rng.random_range(-4..=4)) }).collect()
}

/// `z + δf` for a random integer potential `f`.
pub fn perturb(rng: &mut ChaCha8Rng, x: &SimplicialComplex, z: &IntegralOneCocycle) -> IntegralOneCocycle {
    let f: Vec<i64> = (0..x.vertex_count()).map(|_| rng.random_range(-3..=3)).collect();
    z.add(&IntegralOneCocycle::coboundary_of(x, &f))
}

/// `δ_{a₁a₂}(α ∪ β) = δ_{a₁}α ∪ β + (−1)^p α ∪ δ_{a₂}β` for `α ∈ C^p(E_{a₁})`, `β ∈ C^q(E_{a₂})`.
#[allow(clippy::too_many_arguments)]
pub fn check_leibniz(
    x: &SimplicialComplex,
    z: &IntegralOneCocycle,
    a1: &Rat,
    a2: &Rat,
    p: usize,
    q: usize,
    alpha: &[Rat],
    beta: &[Rat],
) -> Result<(), String> {
    let f = RationalField;
    let err = |e: novikov_core::AlgebraError| e.to_string();
    let a12 = f.mul(a1, a2);
    let cup = twisted_cup(&f, x, z, p, q, a2, alpha, beta).map_err(err)?;
    let lhs = twisted_coboundary(&f, x, z, p + q, &a12, &cup).map_err(err)?;
    let da = twisted_coboundary(&f, x, z, p, a1, alpha).map_err(err)?;
    let db = twisted_coboundary(&f, x, z, q, a2, beta).map_err(err)?;
    let left = twisted_cup(&f, x, z, p + 1, q, a2, &da, beta).map_err(err)?;
    let right = twisted_cup(&f, x, z, p, q + 1, a2, alpha, &db).map_err(err)?;
    for (k, ((l, u), v)) in lhs.iter().zip(&left).zip(&right).enumerate() {
        let r = if p.is_multiple_of(2) { f.add(u, v) } else { f.sub(u, v) };
        if *l != r {
            return Err(format!("Leibniz fails on simplex {:?}", x.simplices(p + q + 1)[k]));
        }
    }
    Ok(())
}

/// `δ_a δ_a α = 0` on a dense `q`-cochain.
pub fn check_square_zero(x: &SimplicialComplex, z: &IntegralOneCocycle, a: &Rat, q: usize, alpha: &[Rat]) -> Result<(), String> {
    let f = RationalField;
    let d1 = twisted_coboundary(&f, x, z, q, a, alpha).map_err(|e| e.to_string())?;
    let d2 = twisted_coboundary(&f, x, z, q + 1, a, &d1).map_err(|e| e.to_string())?;
    if d2.iter().any(|c| !f.is_zero(c)) {
        return Err(format!("δ² ≠ 0 in degree {}", q));
    }
    Ok(())
}

/// Product of consecutive polynomial differentials, which must vanish.
pub fn check_poly_square_zero(differentials: &[PolyMatrix]) -> Result<(), String> {
    for (q, w) in differentials.windows(2).enumerate() {
        if w[0].rows() == 0 || w[1].rows() == 0 {
            continue;
        }
        if !w[1].mul(&w[0]).is_zero() {
            return Err(format!("δ^{} δ^{} ≠ 0", q + 1, q));
        }
    }
    Ok(())
}
