//! Generators for test spaces with canonical integral classes, and the Mayer–Vietoris
//! oracle for mapping tori.

mod anosov;
mod oracle;
mod presentation;

pub use anosov::{anosov_torus_bundle, CAT_MAP};
pub use oracle::{induced_action, mv_oracle_dims, mv_oracle_dims_from_action};
pub use presentation::{alexander_style_instance, presentation_complex, Letter};

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::cocycle::IntegralOneCocycle;
use crate::complex::{Simplex, SimplicialComplex, Subcomplex};
use crate::cut::{sort_with_sign, CutPresentation};
use crate::error::{Error, Result};

/// A test space with its class, optional cut presentation and provenance label.
#[derive(Clone, Debug)]
pub struct GeneratedSpace {
    pub complex: SimplicialComplex,
    pub cocycle: IntegralOneCocycle,
    pub cut: Option<CutPresentation>,
    pub label: String,
    /// Closed orientable manifold; enables Poincaré extension and connected sums.
    pub manifold: bool,
    pub dimension: usize,
}

impl GeneratedSpace {
    /// Reglues a cut presentation and records the resulting space.
    pub fn from_cut(cut: CutPresentation, label: impl Into<String>, manifold: bool) -> Result<Self> {
        let (complex, cocycle) = cut.reglue()?;
        Ok(GeneratedSpace { dimension: complex.dim(), complex, cocycle, cut: Some(cut), label: label.into(), manifold })
    }

    pub fn with_cocycle(&self, cocycle: IntegralOneCocycle, label: impl Into<String>) -> Self {
        let cut = if cocycle == self.cocycle { self.cut.clone() } else { None };
        GeneratedSpace { cocycle, cut, label: label.into(), ..self.clone() }
    }
}

/// A vertex map of `F` inducing a simplicial automorphism.
///
/// `map[k]` is the image of the `k`-th vertex of `F` in sorted order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialSelfMap {
    pub source: SimplicialComplex,
    pub map: Vec<u32>,
}

impl SimplicialSelfMap {
    pub fn new(source: SimplicialComplex, map: Vec<u32>) -> Result<Self> {
        if map.len() != source.vertex_count() {
            return Err(Error::NotAnIsomorphism(format!("{} images for {} vertices", map.len(), source.vertex_count())));
        }
        let image: BTreeSet<u32> = map.iter().copied().collect();
        let verts: BTreeSet<u32> = source.vertices().collect();
        if image != verts {
            return Err(Error::NotAnIsomorphism("vertex map is not a bijection".into()));
        }
        let h = SimplicialSelfMap { source, map };
        for d in 1..=h.source.dim() {
            for s in h.source.simplices(d) {
                let (t, _) = h.apply(s);
                if !h.source.contains(&t) {
                    return Err(Error::NotAnIsomorphism(format!("{:?} maps to the non-simplex {:?}", s, t)));
                }
            }
        }
        Ok(h)
    }

    pub fn identity(source: SimplicialComplex) -> Self {
        let map = source.vertices().collect();
        SimplicialSelfMap { source, map }
    }

    pub fn image_of(&self, v: u32) -> u32 {
        self.map[self.source.index_of(&[v]).expect("vertex of the source")]
    }

    /// Image of a simplex, sorted, with the sign of the sorting permutation.
    pub fn apply(&self, s: &[u32]) -> (Simplex, i64) {
        sort_with_sign(s.iter().map(|&v| self.image_of(v)).collect())
    }
}

/// The staircase triangulation of `σ × [t, t+1]` on layer labels `layer(t, x)`.
pub(crate) fn prism(s: &[usize], lower: impl Fn(usize) -> u32, upper: impl Fn(usize) -> u32) -> Vec<Simplex> {
    (0..s.len())
        .map(|i| {
            let mut t: Simplex = s[..=i].iter().map(|&x| lower(x)).collect();
            t.extend(s[i..].iter().map(|&x| upper(x)));
            t
        })
        .collect()
}

/// Cycle on `k ≥ 3` vertices with the class dual to a point.
pub fn circle(k: usize) -> Result<GeneratedSpace> {
    if k < 3 {
        return Err(Error::ParameterOutOfRange(format!("circle needs at least 3 vertices, got {}", k)));
    }
    let path: Vec<[u32; 2]> = (0..k as u32).map(|i| [i, i + 1]).collect();
    let n = SimplicialComplex::build(&path)?;
    let v = SimplicialComplex::build(&[[0u32]])?;
    let cut = CutPresentation::new(n, Some(v), vec![0], vec![k as u32])?;
    GeneratedSpace::from_cut(cut, format!("circle({})", k), true)
}

/// Mapping torus of `h` built from three staircase prism layers; the cocycle is `+1` on the
/// edges entering the last layer, which is glued to the first by `h`.
pub fn mapping_torus(h: &SimplicialSelfMap) -> Result<GeneratedSpace> {
    let f = &h.source;
    let m = f.vertex_count() as u32;
    let pos = |v: u32| f.index_of(&[v]).unwrap();
    let layer = move |t: u32| move |x: usize| t * m + x as u32;
    let mut top: Vec<Simplex> = Vec::new();
    for s in f.maximal_simplices() {
        let p: Vec<usize> = s.iter().map(|&v| pos(v)).collect();
        for t in 0..3 {
            top.extend(prism(&p, layer(t), layer(t + 1)));
        }
    }
    let n = SimplicialComplex::build(&top)?;
    let v = relabel_by_position(f)?;
    let i_plus: Vec<u32> = (0..m).collect();
    let i_minus: Vec<u32> = (0..m as usize).map(|k| 3 * m + pos(h.map[k]) as u32).collect();
    let cut = CutPresentation::new(n, Some(v), i_plus, i_minus)?;
    let mut x = GeneratedSpace::from_cut(cut, "mapping torus", false)?;
    x.manifold = is_closed_orientable(&x.complex);
    Ok(x)
}

/// Copy of a complex with vertices renamed to their positions `0..m`.
pub(crate) fn relabel_by_position(f: &SimplicialComplex) -> Result<SimplicialComplex> {
    let top: Vec<Simplex> = f
        .maximal_simplices()
        .iter()
        .map(|s| s.iter().map(|&v| f.index_of(&[v]).unwrap() as u32).collect())
        .collect();
    SimplicialComplex::build(&top)
}

/// A closed pseudomanifold with one top-degree rational class per component.
pub fn is_closed_orientable(x: &SimplicialComplex) -> bool {
    is_closed_pseudomanifold(x) && x.betti_numbers()[x.dim()] == x.component_count()
}

/// Every codimension-one face lies in exactly two top simplices and all maximal simplices are top-dimensional.
pub fn is_closed_pseudomanifold(x: &SimplicialComplex) -> bool {
    let n = x.dim();
    if n == 0 {
        return false;
    }
    let mut count = vec![0usize; x.count(n - 1)];
    for s in x.simplices(n) {
        for i in 0..s.len() {
            count[x.index_of(&crate::complex::face(s, i)).unwrap()] += 1;
        }
    }
    count.iter().all(|&c| c == 2) && x.maximal_simplices().iter().all(|s| s.len() == n + 1)
}

/// The 9-vertex torus `mapping_torus(circle(3), id)`.
pub fn torus() -> Result<GeneratedSpace> {
    let c = circle(3)?;
    let mut t = mapping_torus(&SimplicialSelfMap::identity(c.complex))?;
    t.label = "torus".into();
    Ok(t)
}

/// Boundary of the `(n+1)`-simplex.
pub fn sphere(n: usize) -> Result<SimplicialComplex> {
    let verts: Vec<u32> = (0..=n as u32 + 1).collect();
    let facets: Vec<Simplex> = (0..verts.len()).map(|i| crate::complex::face(&verts, i)).collect();
    SimplicialComplex::build(&facets)
}

/// `S¹ × S^n` for `n ∈ {2, 3}` as the mapping torus of the identity of a sphere.
pub fn sphere_product_s1xsn(n: usize) -> Result<GeneratedSpace> {
    if !(2..=3).contains(&n) {
        return Err(Error::ParameterOutOfRange(format!("S^1 x S^n needs n in {{2, 3}}, got {}", n)));
    }
    let mut x = mapping_torus(&SimplicialSelfMap::identity(sphere(n)?))?;
    x.label = format!("S^1 x S^{}", n);
    Ok(x)
}

/// `T³` as the mapping torus of the identity of the 9-vertex torus.
pub fn three_torus() -> Result<GeneratedSpace> {
    let t = torus()?;
    let mut x = mapping_torus(&SimplicialSelfMap::identity(t.complex))?;
    x.label = "T^3".into();
    Ok(x)
}

/// Pullback of a class on the fiber of `mapping_torus(id_F)` along the projection to `F`.
pub fn fiber_class(f: &SimplicialComplex, zf: &IntegralOneCocycle, torus: &GeneratedSpace) -> Result<IntegralOneCocycle> {
    let m = f.vertex_count() as u32;
    let base = |label: u32| f.vertices().nth((label % m) as usize).unwrap();
    let values = torus
        .complex
        .edges()
        .iter()
        .map(|e| {
            let (a, b) = (base(e[0]), base(e[1]));
            if a == b {
                0
            } else {
                zf.get(f, a, b)
            }
        })
        .collect();
    IntegralOneCocycle::from_values(&torus.complex, values)
}

/// Closed orientable surface of genus `g` as a connected sum of `g` tori; the class comes
/// from the first summand.
pub fn surface(g: usize) -> Result<GeneratedSpace> {
    if g == 0 {
        return Err(Error::ParameterOutOfRange("genus must be at least 1".into()));
    }
    let t = torus()?;
    let zero = t.with_cocycle(IntegralOneCocycle::zero(&t.complex), "torus");
    let mut x = t.clone();
    for _ in 1..g {
        x = connected_sum(&x, &zero)?;
    }
    x.label = format!("surface({})", g);
    Ok(x)
}

fn edge_values_vanish(x: &GeneratedSpace, s: &[u32]) -> bool {
    (0..s.len()).all(|i| (i + 1..s.len()).all(|j| x.cocycle.get(&x.complex, s[i], s[j]) == 0))
}

/// A top simplex whose edges carry zero and which avoids the glued boundary of a cut.
fn removable_simplex(x: &GeneratedSpace) -> Option<Simplex> {
    let avoid: BTreeSet<u32> = x.cut.as_ref().map_or_else(BTreeSet::new, |c| c.i_plus.iter().copied().collect());
    x.complex
        .simplices(x.dimension)
        .iter()
        .find(|s| edge_values_vanish(x, s) && s.iter().all(|v| !avoid.contains(v)))
        .cloned()
}

/// Connected sum: one top simplex is removed from each summand and the boundaries are
/// identified by the vertex matching `w_i ↦ u_{π(i)}`, `π` the transposition of the first two.
pub fn connected_sum(a: &GeneratedSpace, b: &GeneratedSpace) -> Result<GeneratedSpace> {
    if a.dimension != b.dimension {
        return Err(Error::DimensionMismatch(a.dimension, b.dimension));
    }
    if !a.manifold || !b.manifold || a.dimension == 0 {
        return Err(Error::NotAManifoldInput);
    }
    let s1 = removable_simplex(a).ok_or(Error::NotAManifoldInput)?;
    let s2 = removable_simplex(&GeneratedSpace { cut: None, ..b.clone() }).ok_or(Error::NotAManifoldInput)?;
    let offset = a.cut.as_ref().map_or(a.complex.max_vertex(), |c| c.n.max_vertex().max(a.complex.max_vertex())) + 1;

    let mut relabel: BTreeMap<u32, u32> = BTreeMap::new();
    for (i, &w) in s2.iter().enumerate() {
        let j = match i {
            0 => 1,
            1 => 0,
            k => k,
        };
        relabel.insert(w, s1[j]);
    }
    let mut next = offset;
    for v in b.complex.vertices() {
        relabel.entry(v).or_insert_with(|| {
            next += 1;
            next - 1
        });
    }
    let back: BTreeMap<u32, u32> = relabel.iter().map(|(k, v)| (*v, *k)).collect();
    let b_top: Vec<Simplex> = b
        .complex
        .maximal_simplices()
        .into_iter()
        .filter(|s| *s != s2)
        .map(|s| s.iter().map(|v| relabel[v]).collect())
        .collect();
    let a_top: Vec<Simplex> = a.complex.maximal_simplices().into_iter().filter(|s| *s != s1).collect();
    let mut all = a_top.clone();
    all.extend(b_top.iter().cloned());
    let x = SimplicialComplex::build(&all)?;

    let glued: BTreeSet<u32> = s1.iter().copied().collect();
    let values: Vec<i64> = x
        .edges()
        .iter()
        .map(|e| {
            if e.iter().all(|v| glued.contains(v)) {
                0
            } else if a.complex.contains(e) {
                a.cocycle.get(&a.complex, e[0], e[1])
            } else {
                b.cocycle.get(&b.complex, back[&e[0]], back[&e[1]])
            }
        })
        .collect();
    let cocycle = IntegralOneCocycle::from_values(&x, values)?;

    let cut = match &a.cut {
        Some(c) if b.cocycle.is_zero() => {
            let mut n_top: Vec<Simplex> = c.n.maximal_simplices().into_iter().filter(|s| *s != s1).collect();
            n_top.extend(b_top);
            let n = SimplicialComplex::build(&n_top)?;
            let cut = CutPresentation::new(n, c.v.clone(), c.i_plus.clone(), c.i_minus.clone())?;
            let (rx, rz) = cut.reglue()?;
            (rx == x && rz == cocycle).then_some(cut)
        }
        _ => None,
    };
    Ok(GeneratedSpace {
        dimension: x.dim(),
        complex: x,
        cocycle,
        cut,
        label: format!("{} # {}", a.label, b.label),
        manifold: true,
    })
}

/// The class of `sum = connected_sum(a, _)` split as `(ξ₁ # 0, 0 # ξ₂)`.
pub fn summand_classes(a: &GeneratedSpace, sum: &GeneratedSpace) -> Result<(IntegralOneCocycle, IntegralOneCocycle)> {
    let first: Vec<i64> = sum
        .complex
        .edges()
        .iter()
        .enumerate()
        .map(|(k, e)| if a.complex.contains(e) { sum.cocycle.edge_value(k) } else { 0 })
        .collect();
    let second: Vec<i64> = sum.cocycle.values().iter().zip(&first).map(|(s, f)| s - f).collect();
    Ok((IntegralOneCocycle::from_values(&sum.complex, first)?, IntegralOneCocycle::from_values(&sum.complex, second)?))
}

/// Mapping cylinder of the simplicial map from the cycle `outer` onto the cycle `core`
/// sending `outer[i] ↦ core[f(i)]`, where consecutive images are equal or adjacent.
fn cycle_map_cylinder(outer: &[u32], core: &[u32], f: impl Fn(usize) -> usize) -> Vec<Simplex> {
    let n = outer.len();
    let mut out = Vec::new();
    for i in 0..n {
        let j = (i + 1) % n;
        let (a, b) = (core[f(i)], core[f(j)]);
        if a == b {
            out.push(vec![outer[i], outer[j], a]);
        } else {
            out.push(vec![outer[i], a, b]);
            out.push(vec![outer[i], outer[j], b]);
        }
    }
    out
}

/// An HNN-type 2-complex with fundamental group `⟨s, t | t s^p t⁻¹ = s^q⟩`, cut along the
/// circle `V`: the two boundary copies wrap `p` and `q` times around a core circle.
///
/// Returns the space and the collar circle (layer 1 of the prism next to `i₊(V)`).
pub fn baumslag_solitar_instance(p: usize, q: usize) -> Result<(GeneratedSpace, Subcomplex)> {
    if p == 0 || q == 0 {
        return Err(Error::ParameterOutOfRange("wrapping degrees must be positive".into()));
    }
    let l = 3 * p * q;
    let l32 = l as u32;
    // labels: layer 0 (i₊) 0..l, layer 1 l..2l, core 2l..2l+3, minus copy 2l+3..3l+3
    let layer0: Vec<u32> = (0..l32).collect();
    let layer1: Vec<u32> = (l32..2 * l32).collect();
    let core: Vec<u32> = (2 * l32..2 * l32 + 3).collect();
    let minus: Vec<u32> = (2 * l32 + 3..3 * l32 + 3).collect();
    let mut top: Vec<Simplex> = Vec::new();
    for i in 0..l {
        let j = (i + 1) % l;
        let mut e = [i, j];
        e.sort_unstable();
        top.extend(prism(&e, |x| layer0[x], |x| layer1[x]));
    }
    top.extend(cycle_map_cylinder(&layer1, &core, |i| (i / q) % 3));
    top.extend(cycle_map_cylinder(&minus, &core, |i| (i / p) % 3));
    let n = SimplicialComplex::build(&top)?;
    let cyc: Vec<[u32; 2]> = (0..l32).map(|i| [i, (i + 1) % l32]).collect();
    let v = SimplicialComplex::build(&cyc)?;
    let cut = CutPresentation::new(n, Some(v), layer0, minus)?;
    let x = GeneratedSpace::from_cut(cut, format!("BS({}, {}) complex", p, q), false)?;
    let collar = Subcomplex::induced(&x.complex, &layer1.iter().copied().collect());
    Ok((x, collar))
}

/// The layer-1 copy of the fiber in a mapping torus built by [`mapping_torus`].
pub fn fiber_collar(x: &GeneratedSpace, fiber_vertices: usize) -> Subcomplex {
    let m = fiber_vertices as u32;
    Subcomplex::induced(&x.complex, &(m..2 * m).collect())
}

/// Standard corpus used by the property suites.
pub fn standard_corpus() -> Result<Vec<GeneratedSpace>> {
    let c3 = circle(3)?;
    let rot = SimplicialSelfMap::new(c3.complex.clone(), vec![1, 2, 0])?;
    let refl = SimplicialSelfMap::new(c3.complex.clone(), vec![0, 2, 1])?;
    let mut rot_torus = mapping_torus(&rot)?;
    rot_torus.label = "mapping torus of a rotation of circle(3)".into();
    let mut refl_torus = mapping_torus(&refl)?;
    refl_torus.label = "mapping torus of a reflection of circle(3)".into();
    let t = torus()?;
    let zero_t = t.with_cocycle(IntegralOneCocycle::zero(&t.complex), "torus");
    let mut list = vec![
        c3,
        circle(5)?,
        t.clone(),
        rot_torus,
        refl_torus,
        surface(2)?,
        connected_sum(&zero_t, &t)?,
        sphere_product_s1xsn(2)?,
        anosov_torus_bundle()?.0,
        baumslag_solitar_instance(1, 2)?.0,
        alexander_style_instance()?,
    ];
    list.push(sphere_product_s1xsn(3)?);
    Ok(list)
}
