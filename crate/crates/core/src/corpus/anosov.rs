//! The torus bundle with monodromy `[[2,1],[1,1]]`, realized by two layers of diagonal flips
//! on the 9-vertex grid torus.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::{prism, GeneratedSpace};
use crate::complex::{Simplex, SimplicialComplex};
use crate::cut::CutPresentation;
use crate::error::{Error, Result};

/// Monodromy of the bundle.
pub const CAT_MAP: [[i64; 2]; 2] = [[2, 1], [1, 1]];

const N: i64 = 3;

type Point = (i64, i64);
type Triangle = [Point; 3];

fn wrap(p: Point) -> Point {
    (p.0.rem_euclid(N), p.1.rem_euclid(N))
}

fn add(p: Point, q: Point) -> Point {
    wrap((p.0 + q.0, p.1 + q.1))
}

fn index(p: Point) -> u32 {
    let p = wrap(p);
    (p.0 + N * p.1) as u32
}

fn apply(m: [[i64; 2]; 2], p: Point) -> Point {
    wrap((m[0][0] * p.0 + m[0][1] * p.1, m[1][0] * p.0 + m[1][1] * p.1))
}

fn key(t: &Triangle) -> [u32; 3] {
    let mut k = [index(t[0]), index(t[1]), index(t[2])];
    k.sort_unstable();
    k
}

/// Triangles of the grid torus spanned by `u`, `v` with diagonal `u + v`.
fn grid(u: Point, v: Point) -> BTreeSet<[u32; 3]> {
    let mut out = BTreeSet::new();
    for i in 0..N {
        for j in 0..N {
            let p = (i, j);
            out.insert(key(&[p, add(p, u), add(add(p, u), v)]));
            out.insert(key(&[p, add(p, v), add(add(p, u), v)]));
        }
    }
    out
}

fn point(i: u32) -> Point {
    (i as i64 % N, i as i64 / N)
}

/// Flips every edge of direction `d`; returns the new triangles and the flip tetrahedra.
fn flip(tris: &BTreeSet<[u32; 3]>, d: Point) -> Result<(BTreeSet<[u32; 3]>, Vec<Simplex>)> {
    let mut out = tris.clone();
    let mut tets = Vec::new();
    for i in 0..N {
        for j in 0..N {
            let p = (i, j);
            let (a, b) = (index(p), index(add(p, d)));
            let opposite: Vec<u32> = tris
                .iter()
                .filter(|t| t.contains(&a) && t.contains(&b))
                .map(|t| *t.iter().find(|&&w| w != a && w != b).unwrap())
                .collect();
            let [c, e] = opposite[..] else {
                return Err(Error::InvalidCut("flip edge is not in exactly two triangles".into()));
            };
            for t in [[a, b, c], [a, b, e]] {
                let mut t = t;
                t.sort_unstable();
                if !out.remove(&t) {
                    return Err(Error::InvalidCut("overlapping flips".into()));
                }
            }
            for t in [[c, e, a], [c, e, b]] {
                let mut t = t;
                t.sort_unstable();
                out.insert(t);
            }
            let mut tet = alloc::vec![a, b, c, e];
            tet.sort_unstable();
            tets.push(tet);
        }
    }
    Ok((out, tets))
}

fn layer_prism(tris: &BTreeSet<[u32; 3]>, t: u32) -> Vec<Simplex> {
    let m = (N * N) as u32;
    tris.iter()
        .flat_map(|s| {
            let p: Vec<usize> = s.iter().map(|&v| v as usize).collect();
            prism(&p, move |x| t * m + x as u32, move |x| (t + 1) * m + x as u32)
        })
        .collect()
}

/// Mapping torus of the cat map on the 9-vertex torus, with its action on `H¹` of the fiber.
///
/// Between layers 1 and 2 the vertical edges are flipped (realizing the shear
/// `[[1,1],[0,1]]`), between layers 2 and 3 the images of the horizontal edges
/// (realizing the second shear), so that layer 3 carries the image triangulation.
pub fn anosov_torus_bundle() -> Result<(GeneratedSpace, [[i64; 2]; 2])> {
    let m = (N * N) as u32;
    let t0 = grid((1, 0), (0, 1));
    let (t1, flips1) = flip(&t0, (0, 1))?;
    let (t2, flips2) = flip(&t1, (1, 0))?;
    let target: BTreeSet<[u32; 3]> = t0
        .iter()
        .map(|t| key(&[apply(CAT_MAP, point(t[0])), apply(CAT_MAP, point(t[1])), apply(CAT_MAP, point(t[2]))]))
        .collect();
    if t2 != target || t1 != grid((1, 0), (1, 1)) {
        return Err(Error::InvalidCut("flip layers do not realize the monodromy".into()));
    }
    let mut top = layer_prism(&t0, 0);
    top.extend(flips1.into_iter().map(|s| s.into_iter().map(|v| m + v).collect::<Simplex>()));
    top.extend(layer_prism(&t1, 1));
    top.extend(flips2.into_iter().map(|s| s.into_iter().map(|v| 2 * m + v).collect::<Simplex>()));
    top.extend(layer_prism(&t2, 2));
    let n = SimplicialComplex::build(&top)?;
    let fiber: Vec<[u32; 3]> = t0.iter().copied().collect();
    let v = SimplicialComplex::build(&fiber)?;
    let i_plus: Vec<u32> = (0..m).collect();
    let i_minus: Vec<u32> = (0..m).map(|k| 3 * m + index(apply(CAT_MAP, point(k)))).collect();
    let cut = CutPresentation::new(n, Some(v), i_plus, i_minus)?;
    let x = GeneratedSpace::from_cut(cut, "torus bundle with monodromy [[2,1],[1,1]]", true)?;
    Ok((x, CAT_MAP))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundle_is_a_closed_three_manifold() {
        let (x, _) = anosov_torus_bundle().unwrap();
        assert_eq!(x.complex.dim(), 3);
        assert_eq!(x.complex.euler_characteristic(), 0);
        assert!(super::super::is_closed_pseudomanifold(&x.complex));
        // b1 = 1 + dim ker(A - 1) = 1
        assert_eq!(x.complex.betti_numbers(), alloc::vec![1, 1, 1, 1]);
    }
}
