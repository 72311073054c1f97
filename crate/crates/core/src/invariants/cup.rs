//! Search for nontrivial twisted cup products with at least two non-unit monodromies.
//!
//! States of the search are keyed by accumulated monodromy, the number of non-unit factors
//! (capped at two) and total degree. Each state keeps actual product cocycles that are
//! linearly independent in `H^deg(X; E_acc)`; by bilinearity they span every product
//! realizable from the candidates with that key, so extending them by the basis
//! representatives of each candidate is exhaustive.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use super::bounds::{CritBoundReport, Mode};
use crate::algebra::field::{Field, NumberField, RationalField, Scalar};
use crate::algebra::linalg::{rank, transpose, Echelon, SparseVec};
use crate::algebra::poly::QPoly;
use crate::algebra::rat::Rat;
use crate::cochain::{to_dense, to_sparse, twisted_coboundary, twisted_coboundary_rows, twisted_cup, CochainBasis};
use crate::cocycle::IntegralOneCocycle;
use crate::cohomology::CohomologyCache;
use crate::complex::SimplicialComplex;
use crate::error::{AlgebraError, Error, Result};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CupOptions {
    /// The complex is a closed orientable manifold: products are also extended by a
    /// Poincaré-dual class at the inverse monodromy.
    pub manifold: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertificateFactor {
    pub monodromy: Scalar,
    pub degree: usize,
    /// Cocycle values on the `degree`-simplices, by simplex index.
    pub representative: Vec<(usize, Scalar)>,
    pub is_unit: bool,
}

/// A witnessed nonzero `k`-fold product `v_1 ∪ … ∪ v_k`, multiplied left to right.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CupLengthCertificate {
    pub k: usize,
    pub factors: Vec<CertificateFactor>,
    pub product_monodromy: Scalar,
    pub product_degree: usize,
    /// Coordinates of the product class in the search's basis of `H^deg(X; E_acc)`; nonzero.
    pub product_coordinates: Vec<Scalar>,
}

#[derive(Clone)]
struct Cand<E> {
    elem: E,
    unit: bool,
}

#[derive(Clone)]
struct Step<E> {
    elem: E,
    unit: bool,
    degree: usize,
    rep: usize,
}

struct State<E> {
    acc: E,
    nu: u8,
    deg: usize,
    span: Echelon<E>,
    products: Vec<(SparseVec<E>, Vec<Step<E>>)>,
}

type Key = (Vec<Rat>, u8, usize);

struct Found<E> {
    trail: Vec<Step<E>>,
    product: SparseVec<E>,
    acc: E,
    deg: usize,
}

fn inconsistent(msg: &str) -> Error {
    Error::Inconsistency(String::from(msg))
}

fn search<F: Field>(
    f: &F,
    x: &SimplicialComplex,
    z: &IntegralOneCocycle,
    cands: &[Cand<F::Elem>],
    opts: &CupOptions,
    to_scalar: &dyn Fn(&F::Elem) -> Scalar,
) -> Result<Option<Found<F::Elem>>>
where
    F::Elem: PartialEq + core::fmt::Debug,
{
    let n = x.dim();
    let mut cache = CohomologyCache::new(f, x, z);
    let mut levels: Vec<BTreeMap<Key, State<F::Elem>>> = Vec::new();

    let mut first: BTreeMap<Key, State<F::Elem>> = BTreeMap::new();
    for c in cands {
        for d in 1..=n {
            let b = cache.get(&c.elem, d)?;
            for i in 0..b.dim() {
                let st = first.entry((f.key(&c.elem), u8::from(!c.unit), d)).or_insert_with(|| State {
                    acc: c.elem.clone(),
                    nu: u8::from(!c.unit),
                    deg: d,
                    span: Echelon::new(b.dim()),
                    products: Vec::new(),
                });
                let mut e = vec![f.zero(); b.dim()];
                e[i] = f.one();
                if st.span.insert(f, &to_sparse(f, &e))?.is_some() {
                    let step = Step { elem: c.elem.clone(), unit: c.unit, degree: d, rep: i };
                    st.products.push((b.rep(i).clone(), vec![step]));
                }
            }
        }
    }
    levels.push(first);

    let mut best: Option<Found<F::Elem>> = None;
    for _ in 2..=n.max(1) {
        let prev = levels.last().unwrap();
        let mut next: BTreeMap<Key, State<F::Elem>> = BTreeMap::new();
        for st in prev.values() {
            for c in cands {
                for d in 1..=n.saturating_sub(st.deg) {
                    let b = cache.get(&c.elem, d)?;
                    if b.dim() == 0 {
                        continue;
                    }
                    let acc = f.mul(&st.acc, &c.elem);
                    let deg = st.deg + d;
                    let target = cache.get(&acc, deg)?;
                    if target.dim() == 0 {
                        continue;
                    }
                    let nu = (st.nu + u8::from(!c.unit)).min(2);
                    let entry = next.entry((f.key(&acc), nu, deg)).or_insert_with(|| State {
                        acc: acc.clone(),
                        nu,
                        deg,
                        span: Echelon::new(target.dim()),
                        products: Vec::new(),
                    });
                    'products: for (w, trail) in &st.products {
                        let wd = to_dense(f, w, x.count(st.deg));
                        for i in 0..b.dim() {
                            if entry.span.dim() == target.dim() {
                                break 'products;
                            }
                            let rd = to_dense(f, b.rep(i), x.count(d));
                            let p = to_sparse(f, &twisted_cup(f, x, z, st.deg, d, &c.elem, &wd, &rd)?);
                            if p.is_empty() {
                                continue;
                            }
                            let coords = target
                                .coordinates(f, &p)
                                .ok_or_else(|| inconsistent("a product of cocycles is not a cocycle"))?;
                            if entry.span.insert(f, &to_sparse(f, &coords))?.is_some() {
                                let mut t = trail.clone();
                                t.push(Step { elem: c.elem.clone(), unit: c.unit, degree: d, rep: i });
                                entry.products.push((p, t));
                            }
                        }
                    }
                }
            }
        }
        next.retain(|_, s| !s.products.is_empty());
        if next.is_empty() {
            break;
        }
        if let Some(s) = next.values().find(|s| s.nu == 2) {
            let (p, t) = &s.products[0];
            best = Some(Found { trail: t.clone(), product: p.clone(), acc: s.acc.clone(), deg: s.deg });
        }
        levels.push(next);
    }

    if opts.manifold {
        let best_k = best.as_ref().map_or(0, |b| b.trail.len());
        let top = cache.get(&f.one(), n)?;
        'levels: for (j, level) in levels.iter().enumerate().rev() {
            if j + 2 <= best_k {
                break;
            }
            for st in level.values() {
                if st.deg >= n {
                    continue;
                }
                let inv = f.inv(&st.acc)?;
                let unit = to_scalar(&inv).is_dirichlet_unit()?;
                if (st.nu + u8::from(!unit)).min(2) < 2 {
                    continue;
                }
                let d = n - st.deg;
                let b = cache.get(&inv, d)?;
                for (w, trail) in &st.products {
                    let wd = to_dense(f, w, x.count(st.deg));
                    for i in 0..b.dim() {
                        let rd = to_dense(f, b.rep(i), x.count(d));
                        let p = to_sparse(f, &twisted_cup(f, x, z, st.deg, d, &inv, &wd, &rd)?);
                        let nonzero = top
                            .coordinates(f, &p)
                            .ok_or_else(|| inconsistent("a product of cocycles is not a cocycle"))?
                            .iter()
                            .any(|c| !f.is_zero(c));
                        if nonzero {
                            let mut t = trail.clone();
                            t.push(Step { elem: inv.clone(), unit, degree: d, rep: i });
                            best = Some(Found { trail: t, product: p, acc: f.one(), deg: n });
                            break 'levels;
                        }
                    }
                }
            }
        }
    }
    let _ = cache.len();
    Ok(best)
}

fn certificate<F: Field>(
    f: &F,
    x: &SimplicialComplex,
    z: &IntegralOneCocycle,
    found: &Found<F::Elem>,
    to_scalar: &dyn Fn(&F::Elem) -> Scalar,
) -> Result<CupLengthCertificate>
where
    F::Elem: PartialEq + core::fmt::Debug,
{
    let mut cache = CohomologyCache::new(f, x, z);
    let mut factors = Vec::with_capacity(found.trail.len());
    for s in &found.trail {
        let b = cache.get(&s.elem, s.degree)?;
        factors.push(CertificateFactor {
            monodromy: to_scalar(&s.elem),
            degree: s.degree,
            representative: b.rep(s.rep).iter().map(|(k, v)| (*k, to_scalar(v))).collect(),
            is_unit: s.unit,
        });
    }
    let target = cache.get(&found.acc, found.deg)?;
    let coords = target
        .coordinates(f, &found.product)
        .ok_or_else(|| inconsistent("certified product is not a cocycle"))?;
    Ok(CupLengthCertificate {
        k: factors.len(),
        factors,
        product_monodromy: to_scalar(&found.acc),
        product_degree: found.deg,
        product_coordinates: coords.iter().map(to_scalar).collect(),
    })
}

fn run_rational(
    x: &SimplicialComplex,
    z: &IntegralOneCocycle,
    rats: &[Rat],
    opts: &CupOptions,
) -> Result<Option<CupLengthCertificate>> {
    let f = RationalField;
    let cands = rats
        .iter()
        .map(|r| Ok(Cand { elem: r.clone(), unit: Scalar::rational(r.clone()).is_dirichlet_unit()? }))
        .collect::<Result<Vec<_>, AlgebraError>>()?;
    let conv = |r: &Rat| Scalar::rational(r.clone());
    match search(&f, x, z, &cands, opts, &conv)? {
        Some(found) => Ok(Some(certificate(&f, x, z, &found, &conv)?)),
        None => Ok(None),
    }
}

fn run_field(
    x: &SimplicialComplex,
    z: &IntegralOneCocycle,
    field: &Arc<NumberField>,
    residues: &[QPoly],
    rats: &[Rat],
    opts: &CupOptions,
) -> Result<Option<CupLengthCertificate>> {
    let f: &NumberField = field;
    let mut elems: Vec<QPoly> = residues.to_vec();
    elems.extend(rats.iter().map(|r| f.from_rat(r)));
    let cands = elems
        .into_iter()
        .map(|e| {
            let unit = Scalar::algebraic(field.clone(), e.clone()).is_dirichlet_unit()?;
            Ok(Cand { elem: e, unit })
        })
        .collect::<Result<Vec<_>, AlgebraError>>()?;
    let conv = |e: &QPoly| -> Scalar {
        if e.is_constant() {
            Scalar::rational(e.coeff(0))
        } else {
            Scalar::algebraic(field.clone(), e.clone())
        }
    };
    match search(f, x, z, &cands, opts, &conv)? {
        Some(found) => Ok(Some(certificate(f, x, z, &found, &conv)?)),
        None => Ok(None),
    }
}

/// Splits `Q[x]/(m)` along a zero divisor `g`: linear parts become rational candidates.
fn split_field(
    field: &NumberField,
    residues: &[QPoly],
    g: &QPoly,
    rats: &mut Vec<Rat>,
    work: &mut Vec<(Arc<NumberField>, Vec<QPoly>)>,
) -> Result<()> {
    let m = field.modulus();
    let h = m.exact_div(g).ok_or_else(|| inconsistent("zero divisor does not divide the modulus"))?;
    for part in [g.monic(), h.monic()] {
        if part.degree() == Some(1) {
            let c = part.coeffs();
            let root = -&c[0] / &c[1];
            rats.extend(residues.iter().map(|r| r.eval(&root)));
        } else if !part.is_constant() {
            let k = Arc::new(NumberField::new(part.primitive_part())?);
            let rs = residues.iter().map(|r| k.reduce(r)).collect();
            work.push((k, rs));
        }
    }
    Ok(())
}

/// Largest `k` witnessed by a nontrivial `k`-fold product from the candidate multiset with
/// at least two non-unit monodromies, with its certificate.
///
/// Candidates from two different number fields are never combined; such pairs are listed
/// in the report's `skipped` field.
pub fn cup_length(
    x: &SimplicialComplex,
    z: &IntegralOneCocycle,
    candidates: &[Scalar],
    opts: &CupOptions,
) -> Result<CritBoundReport> {
    let mut rats: Vec<Rat> = Vec::new();
    let mut work: Vec<(Arc<NumberField>, Vec<QPoly>)> = Vec::new();
    for c in candidates {
        if c.is_zero() {
            return Err(AlgebraError::ZeroMonodromy.into());
        }
        match c {
            Scalar::Rational(r) => rats.push(r.clone()),
            Scalar::Algebraic { field, residue } => match work.iter_mut().find(|(k, _)| **k == **field) {
                Some((_, rs)) => rs.push(residue.clone()),
                None => work.push((field.clone(), vec![residue.clone()])),
            },
        }
    }
    let mut skipped = Vec::new();
    for i in 0..work.len() {
        for j in i + 1..work.len() {
            skipped.push(format!("{:?} with {:?}", work[i].0, work[j].0));
        }
    }
    let mut best: Option<CupLengthCertificate> = None;
    let mut consider = |c: Option<CupLengthCertificate>| {
        if let Some(c) = c {
            if best.as_ref().is_none_or(|b| c.k > b.k) {
                best = Some(c);
            }
        }
    };
    while let Some((field, mut residues)) = work.pop() {
        residues.dedup();
        let mut rs = rats.clone();
        rs.sort();
        rs.dedup();
        match run_field(x, z, &field, &residues, &rs, opts) {
            Ok(c) => consider(c),
            Err(Error::Algebra(AlgebraError::ZeroDivisorEncountered(g))) => {
                split_field(&field, &residues, &g, &mut rats, &mut work)?;
            }
            Err(e) => return Err(e),
        }
    }
    rats.sort();
    rats.dedup();
    consider(run_rational(x, z, &rats, opts)?);
    let cl = best.as_ref().map_or(0, |c| c.k);
    Ok(CritBoundReport::new(cl, best, Mode::ExhaustiveOverCandidates, candidates.to_vec(), skipped))
}

fn reject(msg: impl Into<String>) -> Error {
    Error::CertificateRejected(msg.into())
}

/// Re-multiplies the stored representatives and checks that the product is a cocycle
/// outside the image of `δ`, using fresh linear algebra only.
pub fn verify_certificate(x: &SimplicialComplex, z: &IntegralOneCocycle, cert: &CupLengthCertificate) -> Result<()> {
    if cert.k != cert.factors.len() || cert.k < 2 {
        return Err(reject("a certificate needs at least two factors"));
    }
    let total: usize = cert.factors.iter().map(|f| f.degree).sum();
    if total > x.dim() || cert.factors.iter().any(|f| f.degree == 0) {
        return Err(reject("factor degrees must be positive with sum at most dim X"));
    }
    let mut non_units = 0;
    for fac in &cert.factors {
        let unit = fac.monodromy.is_dirichlet_unit()?;
        if unit != fac.is_unit {
            return Err(reject(format!("unit flag of {} is wrong", fac.monodromy)));
        }
        non_units += usize::from(!unit);
    }
    if non_units < 2 {
        return Err(reject("fewer than two non-unit monodromies"));
    }
    let fields: Vec<&Arc<NumberField>> = cert.factors.iter().filter_map(|f| f.monodromy.field()).collect();
    match fields.first() {
        None => verify_in(&RationalField, x, z, cert, &|s: &Scalar| {
            s.as_rational().cloned().ok_or(AlgebraError::FieldMismatch)
        }),
        Some(k) => {
            let k: &NumberField = k;
            verify_in(k, x, z, cert, &|s: &Scalar| s.in_field(k))
        }
    }
}

fn verify_in<F: Field>(
    f: &F,
    x: &SimplicialComplex,
    z: &IntegralOneCocycle,
    cert: &CupLengthCertificate,
    conv: &dyn Fn(&Scalar) -> Result<F::Elem, AlgebraError>,
) -> Result<()> {
    let mut acc = f.one();
    let mut deg = 0;
    let mut product: Vec<F::Elem> = Vec::new();
    for (i, fac) in cert.factors.iter().enumerate() {
        let a = conv(&fac.monodromy)?;
        let rep: Vec<(usize, F::Elem)> =
            fac.representative.iter().map(|(k, v)| Ok((*k, conv(v)?))).collect::<Result<_, AlgebraError>>()?;
        if rep.iter().any(|(k, _)| *k >= x.count(fac.degree)) {
            return Err(reject("representative indexes a missing simplex"));
        }
        let dense = to_dense(f, &rep, x.count(fac.degree));
        if twisted_coboundary(f, x, z, fac.degree, &a, &dense)?.iter().any(|v| !f.is_zero(v)) {
            return Err(reject(format!("factor {} is not a cocycle", i + 1)));
        }
        if i == 0 {
            product = dense;
        } else {
            product = twisted_cup(f, x, z, deg, fac.degree, &a, &product, &dense)?;
        }
        acc = f.mul(&acc, &a);
        deg += fac.degree;
    }
    if conv(&cert.product_monodromy)? != acc || cert.product_degree != deg {
        return Err(reject("recorded product monodromy or degree is wrong"));
    }
    if twisted_coboundary(f, x, z, deg, &acc, &product)?.iter().any(|v| !f.is_zero(v)) {
        return Err(reject("product is not a cocycle"));
    }
    let p = to_sparse(f, &product);
    if p.is_empty() {
        return Err(reject("product cochain vanishes"));
    }
    let basis = CochainBasis::absolute(x);
    let mut cols: Vec<SparseVec<F::Elem>> = if deg > 0 {
        transpose(&twisted_coboundary_rows(f, x, z, &basis, deg - 1, &acc)?, x.count(deg - 1))
    } else {
        Vec::new()
    };
    let without = rank(f, cols.clone(), x.count(deg))?;
    cols.push(p);
    if rank(f, cols, x.count(deg))? == without {
        return Err(reject("product is a coboundary"));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn surface_pairing() {
        let s = corpus::surface(2).unwrap();
        let r = cup_length(&s.complex, &s.cocycle, &[Scalar::int(2), Scalar::ratio(1, 2)], &CupOptions::default()).unwrap();
        assert_eq!(r.cl_lower_bound, 2);
        assert_eq!(r.crit_point_bound, 1);
        verify_certificate(&s.complex, &s.cocycle, r.certificate.as_ref().unwrap()).unwrap();
    }

    #[test]
    fn torus_has_no_bound() {
        let t = corpus::torus().unwrap();
        let r = cup_length(&t.complex, &t.cocycle, &[Scalar::int(2), Scalar::ratio(1, 2), Scalar::int(1)], &CupOptions::default())
            .unwrap();
        assert_eq!(r.cl_lower_bound, 0);
        assert!(r.certificate.is_none());
    }

    #[test]
    fn poincare_extension() {
        let s = corpus::surface(2).unwrap();
        let plain = cup_length(&s.complex, &s.cocycle, &[Scalar::int(2)], &CupOptions::default()).unwrap();
        assert_eq!(plain.cl_lower_bound, 0);
        let ext = cup_length(&s.complex, &s.cocycle, &[Scalar::int(2)], &CupOptions { manifold: true }).unwrap();
        assert_eq!(ext.cl_lower_bound, 2);
        verify_certificate(&s.complex, &s.cocycle, ext.certificate.as_ref().unwrap()).unwrap();
    }

    #[test]
    fn tampered_certificate_is_rejected() {
        let s = corpus::surface(2).unwrap();
        let r = cup_length(&s.complex, &s.cocycle, &[Scalar::int(2), Scalar::ratio(1, 2)], &CupOptions::default()).unwrap();
        let mut c = r.certificate.unwrap();
        c.factors[1].representative.clear();
        assert!(matches!(verify_certificate(&s.complex, &s.cocycle, &c), Err(Error::CertificateRejected(_))));
        let mut c2 = cup_length(&s.complex, &s.cocycle, &[Scalar::int(2), Scalar::ratio(1, 2)], &CupOptions::default())
            .unwrap()
            .certificate
            .unwrap();
        c2.factors[0].is_unit = true;
        assert!(verify_certificate(&s.complex, &s.cocycle, &c2).is_err());
    }
}
