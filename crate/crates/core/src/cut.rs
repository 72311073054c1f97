//! A space cut open along a two-sided hypersurface: `X = N / (i₋(v) ~ i₊(v))`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec::Vec;

use crate::cocycle::IntegralOneCocycle;
use crate::complex::{IntMatrix, Simplex, SimplicialComplex};
use crate::error::{Error, Result};

/// Cut presentation `(N, V, i₊, i₋)`.
///
/// The vertex maps are indexed by the position of a vertex in `V`'s sorted vertex list.
/// `V` may be empty (`None`), in which case `X = N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutPresentation {
    pub n: SimplicialComplex,
    pub v: Option<SimplicialComplex>,
    pub i_plus: Vec<u32>,
    pub i_minus: Vec<u32>,
}

/// Sorts a vertex tuple, returning the sign of the sorting permutation.
pub fn sort_with_sign(mut t: Vec<u32>) -> (Vec<u32>, i64) {
    let mut sign = 1;
    for i in 1..t.len() {
        let mut j = i;
        while j > 0 && t[j - 1] > t[j] {
            t.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    (t, sign)
}

impl CutPresentation {
    pub fn new(n: SimplicialComplex, v: Option<SimplicialComplex>, i_plus: Vec<u32>, i_minus: Vec<u32>) -> Result<Self> {
        let cut = CutPresentation { n, v, i_plus, i_minus };
        cut.check()?;
        Ok(cut)
    }

    fn check(&self) -> Result<()> {
        let Some(v) = &self.v else {
            if self.i_plus.is_empty() && self.i_minus.is_empty() {
                return Ok(());
            }
            return Err(Error::InvalidCut("vertex maps given for an empty V".into()));
        };
        for (name, map) in [("i_plus", &self.i_plus), ("i_minus", &self.i_minus)] {
            if map.len() != v.vertex_count() {
                return Err(Error::InvalidCut(format!(
                    "{} has {} entries for {} vertices of V",
                    name,
                    map.len(),
                    v.vertex_count()
                )));
            }
            let distinct: BTreeSet<u32> = map.iter().copied().collect();
            if distinct.len() != map.len() {
                return Err(Error::InvalidCut(format!("{} is not injective", name)));
            }
            for d in 0..=v.dim() {
                for s in v.simplices(d) {
                    let img = self.image(map, s).0;
                    if !self.n.contains(&img) {
                        return Err(Error::InvalidCut(format!("{} sends {:?} to a non-simplex {:?}", name, s, img)));
                    }
                }
            }
        }
        let plus: BTreeSet<u32> = self.i_plus.iter().copied().collect();
        if self.i_minus.iter().any(|u| plus.contains(u)) {
            return Err(Error::InvalidCut("images of i_plus and i_minus meet".into()));
        }
        Ok(())
    }

    fn vertex_position(&self, u: u32) -> usize {
        self.v.as_ref().unwrap().index_of(&[u]).expect("vertex of V")
    }

    /// Image of a simplex of `V` under a vertex map, sorted, with the sorting sign.
    pub fn image(&self, map: &[u32], s: &[u32]) -> (Simplex, i64) {
        sort_with_sign(s.iter().map(|&u| map[self.vertex_position(u)]).collect())
    }

    pub fn v_dim(&self) -> Option<usize> {
        self.v.as_ref().map(SimplicialComplex::dim)
    }

    /// Matrix of the pullback `i*: C^q(N) → C^q(V)`; rows are `q`-simplices of `V`.
    pub fn pullback(&self, map: &[u32], q: usize) -> IntMatrix {
        let Some(v) = &self.v else {
            return IntMatrix { rows: Vec::new(), ncols: self.n.count(q) };
        };
        let rows = v
            .simplices(q)
            .iter()
            .map(|s| {
                let (img, sign) = self.image(map, s);
                alloc::vec![(self.n.index_of(&img).unwrap(), sign)]
            })
            .collect();
        IntMatrix { rows, ncols: self.n.count(q) }
    }

    pub fn plus_image(&self) -> Vec<Simplex> {
        self.images(&self.i_plus)
    }

    pub fn minus_image(&self) -> Vec<Simplex> {
        self.images(&self.i_minus)
    }

    fn images(&self, map: &[u32]) -> Vec<Simplex> {
        let Some(v) = &self.v else { return Vec::new() };
        (0..=v.dim()).flat_map(|d| v.simplices(d).iter().map(|s| self.image(map, s).0)).collect()
    }

    /// Glues `i₋(v)` to `i₊(v)` and returns `X` with the cocycle dual to the cut:
    /// `+1` on every edge entering `i₋(V)` from the rest of `N`, `0` elsewhere.
    pub fn reglue(&self) -> Result<(SimplicialComplex, IntegralOneCocycle)> {
        let mut glue: BTreeMap<u32, u32> = BTreeMap::new();
        if let Some(v) = &self.v {
            for k in 0..v.vertex_count() {
                glue.insert(self.i_minus[k], self.i_plus[k]);
            }
        }
        let plus: BTreeSet<u32> = self.i_plus.iter().copied().collect();
        let mut images: BTreeMap<Simplex, Simplex> = BTreeMap::new();
        let minus_simplices: BTreeSet<Simplex> = self.minus_image().into_iter().collect();
        for d in 0..=self.n.dim() {
            for s in self.n.simplices(d) {
                let meets_minus = s.iter().any(|u| glue.contains_key(u));
                let meets_plus = s.iter().any(|u| plus.contains(u));
                if meets_minus && meets_plus {
                    return Err(Error::InvalidCut(format!("simplex {:?} meets both boundary copies", s)));
                }
                let mut t: Simplex = s.iter().map(|u| *glue.get(u).unwrap_or(u)).collect();
                t.sort_unstable();
                if minus_simplices.contains(s) {
                    continue;
                }
                if let Some(prev) = images.insert(t.clone(), s.clone()) {
                    return Err(Error::InvalidCut(format!("simplices {:?} and {:?} collide after gluing", prev, s)));
                }
            }
        }
        let top: Vec<&Simplex> = images.keys().collect();
        let x = SimplicialComplex::build(&top)?;
        let expected: usize = (0..=self.n.dim()).map(|d| self.n.count(d)).sum::<usize>()
            - self.v.as_ref().map_or(0, |v| (0..=v.dim()).map(|d| v.count(d)).sum());
        let got: usize = x.f_vector().iter().sum();
        if got != expected {
            return Err(Error::InvalidCut(format!("glued complex has {} simplices, expected {}", got, expected)));
        }
        let values = x
            .edges()
            .iter()
            .map(|e| {
                let orig = &images[e];
                let into = |p: u32, m: u32| !glue.contains_key(&p) && glue.contains_key(&m);
                if into(orig[0], orig[1]) {
                    // orig[1] glues to an i₊ vertex: which end of e does it land on?
                    if glue[&orig[1]] == e[1] {
                        1
                    } else {
                        -1
                    }
                } else if into(orig[1], orig[0]) {
                    if glue[&orig[0]] == e[1] {
                        1
                    } else {
                        -1
                    }
                } else {
                    0
                }
            })
            .collect();
        let z = IntegralOneCocycle::from_values(&x, values)?;
        Ok((x, z))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Interval 0–1–2–3 cut from a circle; V is a point.
    fn cut_circle() -> CutPresentation {
        let n = SimplicialComplex::build(&[[0, 1], [1, 2], [2, 3]]).unwrap();
        let v = SimplicialComplex::build(&[[0]]).unwrap();
        CutPresentation::new(n, Some(v), alloc::vec![0], alloc::vec![3]).unwrap()
    }

    #[test]
    fn reglue_circle() {
        let (x, z) = cut_circle().reglue().unwrap();
        assert_eq!(x.f_vector(), alloc::vec![3, 3]);
        // edge {2,3} becomes {0,2}; it enters i₋ from vertex 2, so z(2 → 0) = 1, z(0,2) = -1
        assert_eq!(z.get(&x, 2, 0), 1);
        assert_eq!(z.get(&x, 0, 1), 0);
    }

    #[test]
    fn invalid_cuts() {
        let n = SimplicialComplex::build(&[[0, 1], [1, 2]]).unwrap();
        let v = SimplicialComplex::build(&[[0]]).unwrap();
        let c = CutPresentation::new(n.clone(), Some(v.clone()), alloc::vec![0], alloc::vec![1]).unwrap();
        assert!(matches!(c.reglue(), Err(Error::InvalidCut(_))));
        assert!(CutPresentation::new(n, Some(v), alloc::vec![0], alloc::vec![0]).is_err());
    }

    #[test]
    fn permutation_sign() {
        assert_eq!(sort_with_sign(alloc::vec![2, 0, 1]), (alloc::vec![0, 1, 2], 1));
        assert_eq!(sort_with_sign(alloc::vec![1, 0]), (alloc::vec![0, 1], -1));
    }
}
