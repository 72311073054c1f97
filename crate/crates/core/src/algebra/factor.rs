//! Partial factorization over `Q`: squarefree decomposition, rational roots and
//! coprime refinement of polynomial families.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::poly::{IPoly, QPoly};
use super::rat::Rat;
use crate::error::AlgebraError;

/// Trial division limit when enumerating divisors of coefficients.
const TRIAL_LIMIT: u64 = 1_000_000;

/// Positive divisors of `n`. Cofactors left after trial division up to the limit are
/// treated as prime, so enormous coefficients can hide rational roots.
fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut n = n.abs();
    let mut primes: Vec<(BigInt, u32)> = Vec::new();
    let mut p = 2u64;
    while p <= TRIAL_LIMIT {
        let bp = BigInt::from(p);
        if &bp * &bp > n {
            break;
        }
        let mut e = 0;
        while (&n % &bp).is_zero() {
            n /= &bp;
            e += 1;
        }
        if e > 0 {
            primes.push((bp, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > BigInt::one() {
        primes.push((n, 1));
    }
    let mut out = alloc::vec![BigInt::one()];
    for (p, e) in primes {
        let len = out.len();
        let mut pk = BigInt::one();
        for _ in 0..e {
            pk *= &p;
            for i in 0..len {
                out.push(&out[i] * &pk);
            }
        }
    }
    out
}

/// Distinct rational roots of `p`, in increasing order.
pub fn rational_roots(p: &IPoly) -> Vec<Rat> {
    let mut roots = Vec::new();
    let Some(_) = p.degree() else { return roots };
    let mut coeffs: Vec<BigInt> = p.coeffs().to_vec();
    if coeffs[0].is_zero() {
        roots.push(Rat::zero());
        let k = coeffs.iter().position(|c| !c.is_zero()).unwrap();
        coeffs.drain(..k);
    }
    let q = IPoly::new(coeffs);
    if q.degree().unwrap_or(0) == 0 {
        return roots;
    }
    let c0 = q.constant_term();
    let cn = q.leading().unwrap().clone();
    for num in divisors(&c0) {
        for den in divisors(&cn) {
            if num.gcd(&den) != BigInt::one() {
                continue;
            }
            for s in [num.clone(), -num.clone()] {
                if homogeneous_eval(&q, &s, &den).is_zero() {
                    roots.push(Rat::new(s, den.clone()));
                }
            }
        }
    }
    roots.sort();
    roots.dedup();
    roots
}

fn homogeneous_eval(p: &IPoly, num: &BigInt, den: &BigInt) -> BigInt {
    // Σ c_i num^i den^(n-i) via Horner: h_{k} = h_{k+1}·num + c_k·den^(n-k)
    let n = p.coeffs().len() - 1;
    let mut h = BigInt::zero();
    let mut den_pows = Vec::with_capacity(n + 1);
    let mut d = BigInt::one();
    for _ in 0..=n {
        den_pows.push(d.clone());
        d *= den;
    }
    for (k, c) in p.coeffs().iter().enumerate().rev() {
        h = h * num + c * &den_pows[n - k];
    }
    h
}

/// Squarefree decomposition `p = c · Π f_i^{m_i}` with monic, pairwise coprime, squarefree
/// `f_i`; rational roots are split off as linear factors. Constants give an empty list.
pub fn squarefree_factors(p: &QPoly) -> Result<Vec<(QPoly, u32)>, AlgebraError> {
    if p.is_zero() {
        return Err(AlgebraError::ZeroPolynomial);
    }
    let mut out = Vec::new();
    for (f, m) in yun(&p.monic()) {
        for g in split_rational_roots(&f) {
            out.push((g, m));
        }
    }
    Ok(out)
}

/// Yun's algorithm over `Q`; the input must be monic and nonzero.
fn yun(p: &QPoly) -> Vec<(QPoly, u32)> {
    let mut out = Vec::new();
    if p.is_constant() {
        return out;
    }
    let dp = p.derivative();
    let a0 = p.gcd(&dp);
    let mut b = p.exact_div(&a0).unwrap();
    let mut c = dp.exact_div(&a0).unwrap();
    let mut d = &c - &b.derivative();
    let mut i = 1;
    while !b.is_constant() {
        let a = b.gcd(&d);
        if !a.is_constant() {
            out.push((a.monic(), i));
        }
        b = b.exact_div(&a).unwrap();
        c = d.exact_div(&a).unwrap();
        d = &c - &b.derivative();
        i += 1;
    }
    out
}

/// Splits a squarefree polynomial into its rational linear factors and the remaining cofactor.
pub fn split_rational_roots(f: &QPoly) -> Vec<QPoly> {
    let mut out = Vec::new();
    if f.is_constant() {
        return out;
    }
    let mut rest = f.monic();
    if rest.degree() == Some(1) {
        out.push(rest);
        return out;
    }
    for r in rational_roots(&f.primitive_part()) {
        let lin = QPoly::linear_root(&r);
        rest = rest.exact_div(&lin).expect("root divides");
        out.push(lin);
    }
    if !rest.is_constant() {
        out.push(rest.monic());
    }
    out
}

/// Monic, squarefree, pairwise coprime polynomials such that every input is a constant
/// times a product of powers of them. Rational roots are split off as linear factors.
pub fn gcd_free_basis<'a>(polys: impl IntoIterator<Item = &'a QPoly>) -> Vec<QPoly> {
    let mut basis: Vec<QPoly> = Vec::new();
    for p in polys {
        if p.is_zero() {
            continue;
        }
        let sq = p.monic();
        let sq = sq.exact_div(&sq.gcd(&sq.derivative())).unwrap();
        let mut rest = sq;
        let mut next = Vec::with_capacity(basis.len() + 1);
        for b in basis.drain(..) {
            if rest.is_constant() {
                next.push(b);
                continue;
            }
            let g = b.gcd(&rest);
            if g.is_constant() {
                next.push(b);
            } else {
                let bq = b.exact_div(&g).unwrap();
                if !bq.is_constant() {
                    next.push(bq.monic());
                }
                rest = rest.exact_div(&g).unwrap();
                next.push(g);
            }
        }
        if !rest.is_constant() {
            next.push(rest.monic());
        }
        basis = next;
    }
    let mut out: Vec<QPoly> = basis.iter().flat_map(split_rational_roots).collect();
    out.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat::rat;

    fn has(fs: &[(QPoly, u32)], f: &QPoly, m: u32) -> bool {
        fs.iter().any(|(g, k)| g == f && *k == m)
    }

    #[test]
    fn squarefree_examples() {
        // τ²(τ−1)
        let p = QPoly::from_ints(&[0, 0, -1, 1]);
        let fs = squarefree_factors(&p).unwrap();
        assert_eq!(fs.len(), 2);
        assert!(has(&fs, &QPoly::x(), 2));
        assert!(has(&fs, &QPoly::from_ints(&[-1, 1]), 1));

        let alex = QPoly::from_ints(&[2, -3, 2]);
        let fs = squarefree_factors(&alex).unwrap();
        assert_eq!(fs, alloc::vec![(QPoly::new(alloc::vec![rat(1, 1), rat(-3, 2), rat(1, 1)]), 1)]);

        assert!(squarefree_factors(&QPoly::from_ints(&[5])).unwrap().is_empty());
        assert_eq!(squarefree_factors(&QPoly::zero()), Err(AlgebraError::ZeroPolynomial));
    }

    #[test]
    fn rational_roots_found() {
        // (2x - 1)(x + 3)(x^2 + 1)
        let p = IPoly::from_ints(&[-3, 5, -1, 5, 2]);
        assert_eq!(rational_roots(&p), alloc::vec![rat(-3, 1), rat(1, 2)]);
        assert!(rational_roots(&IPoly::from_ints(&[2, -3, 2])).is_empty());
    }

    #[test]
    fn gcd_free_basis_refines() {
        let a = QPoly::from_ints(&[-1, 0, 1]); // (x-1)(x+1)
        let b = QPoly::from_ints(&[-1, 1]).pow(2); // (x-1)^2
        let c = QPoly::from_ints(&[1, -3, 1]);
        let basis = gcd_free_basis([&a, &b, &c]);
        assert_eq!(
            basis,
            alloc::vec![QPoly::from_ints(&[-1, 1]), QPoly::from_ints(&[1, 1]), QPoly::from_ints(&[1, -3, 1])]
        );
    }
}
