//! Finite ordered simplicial complexes and their integer coboundary matrices.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::field::RationalField;
use crate::algebra::linalg::{rank, SparseVec};
use crate::algebra::rat::rat_int;
use crate::error::{Error, Result};

/// A simplex as a strictly increasing vertex tuple.
pub type Simplex = Vec<u32>;

/// Sparse integer matrix given by rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    pub rows: Vec<SparseVec<i64>>,
    pub ncols: usize,
}

impl IntMatrix {
    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn rational_rank(&self) -> usize {
        let rows = self
            .rows
            .iter()
            .map(|r| r.iter().map(|(j, x)| (*j, rat_int(*x))).collect())
            .collect();
        rank(&RationalField, rows, self.ncols).expect("rational elimination never fails")
    }

    /// Product `self · other` as dense-free sparse rows.
    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        let rows = self
            .rows
            .iter()
            .map(|r| {
                let mut acc: alloc::collections::BTreeMap<usize, i64> = Default::default();
                for (k, x) in r {
                    for (j, y) in &other.rows[*k] {
                        *acc.entry(*j).or_default() += x * y;
                    }
                }
                acc.into_iter().filter(|(_, v)| *v != 0).collect()
            })
            .collect();
        IntMatrix { rows, ncols: other.ncols }
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|r| r.is_empty())
    }
}

/// A face-closed family of simplices over the vertex labels appearing in it.
///
/// Simplices of each dimension are stored in lexicographic order, so the position of a
/// simplex is its basis index in every cochain group.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    simplices: Vec<Vec<Simplex>>,
}

impl SimplicialComplex {
    /// Face closure of the given tuples. Vertex order inside a tuple is irrelevant.
    pub fn build<S: AsRef<[u32]>>(maximal: &[S]) -> Result<Self> {
        let mut per_dim: Vec<BTreeSet<Simplex>> = Vec::new();
        for s in maximal {
            let mut t: Simplex = s.as_ref().to_vec();
            if t.is_empty() {
                continue;
            }
            t.sort_unstable();
            if t.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::MalformedSimplex(s.as_ref().to_vec()));
            }
            let d = t.len() - 1;
            if per_dim.len() <= d {
                per_dim.resize_with(d + 1, BTreeSet::new);
            }
            if per_dim[d].contains(&t) {
                continue;
            }
            // every nonempty subset
            let n = t.len();
            for mask in 1u64..(1u64 << n) {
                let face: Simplex = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| t[i]).collect();
                per_dim[face.len() - 1].insert(face);
            }
        }
        if per_dim.is_empty() {
            return Err(Error::EmptyComplex);
        }
        Ok(SimplicialComplex { simplices: per_dim.into_iter().map(|s| s.into_iter().collect()).collect() })
    }

    pub fn dim(&self) -> usize {
        self.simplices.len() - 1
    }

    pub fn vertex_count(&self) -> usize {
        self.simplices[0].len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = u32> + '_ {
        self.simplices[0].iter().map(|v| v[0])
    }

    pub fn max_vertex(&self) -> u32 {
        self.simplices[0].last().map_or(0, |v| v[0])
    }

    pub fn f_vector(&self) -> Vec<usize> {
        self.simplices.iter().map(Vec::len).collect()
    }

    /// Number of `d`-simplices (zero above the dimension).
    pub fn count(&self, d: usize) -> usize {
        self.simplices.get(d).map_or(0, Vec::len)
    }

    pub fn simplices(&self, d: usize) -> &[Simplex] {
        self.simplices.get(d).map_or(&[], |v| v.as_slice())
    }

    pub fn edges(&self) -> &[Simplex] {
        self.simplices(1)
    }

    /// All simplices that are not a proper face of another simplex.
    pub fn maximal_simplices(&self) -> Vec<Simplex> {
        let mut faces: BTreeSet<Simplex> = BTreeSet::new();
        for d in 1..=self.dim() {
            for s in self.simplices(d) {
                for i in 0..s.len() {
                    faces.insert(face(s, i));
                }
            }
        }
        self.simplices.iter().flatten().filter(|s| !faces.contains(*s)).cloned().collect()
    }

    pub fn index_of(&self, s: &[u32]) -> Option<usize> {
        let d = s.len().checked_sub(1)?;
        self.simplices.get(d)?.binary_search_by(|t| t.as_slice().cmp(s)).ok()
    }

    pub fn contains(&self, s: &[u32]) -> bool {
        self.index_of(s).is_some()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.simplices
            .iter()
            .enumerate()
            .map(|(d, s)| if d % 2 == 0 { s.len() as i64 } else { -(s.len() as i64) })
            .sum()
    }

    /// Matrix of `δ: C^q → C^{q+1}`; rows are `(q+1)`-simplices, the entry at `(σ, d_i σ)` is `(-1)^i`.
    pub fn coboundary_matrix(&self, q: usize) -> Result<IntMatrix> {
        if q > self.dim() {
            return Err(Error::DegreeOutOfRange { degree: q, dim: self.dim() });
        }
        let rows = self
            .simplices(q + 1)
            .iter()
            .map(|s| {
                let mut r: SparseVec<i64> = (0..s.len())
                    .map(|i| (self.index_of(&face(s, i)).unwrap(), if i % 2 == 0 { 1 } else { -1 }))
                    .collect();
                r.sort_unstable_by_key(|e| e.0);
                r
            })
            .collect();
        Ok(IntMatrix { rows, ncols: self.count(q) })
    }

    /// Rational Betti numbers `b_0, …, b_dim`.
    pub fn betti_numbers(&self) -> Vec<usize> {
        let ranks: Vec<usize> = (0..=self.dim())
            .map(|q| self.coboundary_matrix(q).unwrap().rational_rank())
            .collect();
        (0..=self.dim())
            .map(|q| self.count(q) - ranks[q] - if q > 0 { ranks[q - 1] } else { 0 })
            .collect()
    }

    pub fn component_count(&self) -> usize {
        let n = self.vertex_count();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for e in self.edges() {
            let a = find(&mut parent, self.index_of(&e[..1]).unwrap());
            let b = find(&mut parent, self.index_of(&e[1..]).unwrap());
            parent[a] = b;
        }
        (0..n).filter(|&i| find(&mut parent, i) == i).count()
    }
}

/// The simplex with its `i`-th vertex removed.
pub fn face(s: &[u32], i: usize) -> Simplex {
    let mut f = Vec::with_capacity(s.len() - 1);
    f.extend_from_slice(&s[..i]);
    f.extend_from_slice(&s[i + 1..]);
    f
}

/// A face-closed set of simplices of a parent complex, stored as membership flags.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subcomplex {
    marked: Vec<Vec<bool>>,
}

impl Subcomplex {
    pub fn empty(parent: &SimplicialComplex) -> Self {
        Subcomplex { marked: (0..=parent.dim()).map(|d| vec![false; parent.count(d)]).collect() }
    }

    pub fn full(parent: &SimplicialComplex) -> Self {
        Subcomplex { marked: (0..=parent.dim()).map(|d| vec![true; parent.count(d)]).collect() }
    }

    /// Face closure of the given simplices; each must belong to the parent.
    pub fn generated_by<S: AsRef<[u32]>>(parent: &SimplicialComplex, gens: &[S]) -> Result<Self> {
        let mut sub = Self::empty(parent);
        for g in gens {
            let mut t = g.as_ref().to_vec();
            t.sort_unstable();
            if parent.index_of(&t).is_none() {
                return Err(Error::UnknownSimplex(t));
            }
            let n = t.len();
            for mask in 1u64..(1u64 << n) {
                let f: Simplex = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| t[i]).collect();
                let idx = parent.index_of(&f).unwrap();
                sub.marked[f.len() - 1][idx] = true;
            }
        }
        Ok(sub)
    }

    /// All simplices of the parent whose vertices lie in `vertices`.
    pub fn induced(parent: &SimplicialComplex, vertices: &BTreeSet<u32>) -> Self {
        let marked = (0..=parent.dim())
            .map(|d| parent.simplices(d).iter().map(|s| s.iter().all(|v| vertices.contains(v))).collect())
            .collect();
        Subcomplex { marked }
    }

    /// Validates explicit membership flags.
    pub fn from_marked(parent: &SimplicialComplex, marked: Vec<Vec<bool>>) -> Result<Self> {
        if marked.len() != parent.dim() + 1
            || marked.iter().enumerate().any(|(d, m)| m.len() != parent.count(d))
        {
            return Err(Error::DimensionMismatch(marked.len(), parent.dim() + 1));
        }
        for d in 1..=parent.dim() {
            for (k, s) in parent.simplices(d).iter().enumerate() {
                if !marked[d][k] {
                    continue;
                }
                for i in 0..s.len() {
                    let f = face(s, i);
                    if !marked[d - 1][parent.index_of(&f).unwrap()] {
                        return Err(Error::NotFaceClosed(f));
                    }
                }
            }
        }
        Ok(Subcomplex { marked })
    }

    pub fn contains(&self, d: usize, index: usize) -> bool {
        self.marked.get(d).is_some_and(|m| m[index])
    }

    pub fn count(&self, d: usize) -> usize {
        self.marked.get(d).map_or(0, |m| m.iter().filter(|&&b| b).count())
    }

    pub fn is_empty(&self) -> bool {
        self.marked.iter().all(|m| m.iter().all(|b| !b))
    }

    /// Indices of the `d`-simplices outside the subcomplex, in parent order.
    pub fn complement(&self, d: usize) -> Vec<usize> {
        self.marked.get(d).map_or_else(Vec::new, |m| (0..m.len()).filter(|&i| !m[i]).collect())
    }

    /// The marked simplices as a standalone complex, or `None` if nothing is marked.
    pub fn to_complex(&self, parent: &SimplicialComplex) -> Option<SimplicialComplex> {
        let gens: Vec<&Simplex> = (0..self.marked.len())
            .flat_map(|d| parent.simplices(d).iter().enumerate().filter(move |(i, _)| self.marked[d][*i]).map(|(_, s)| s))
            .collect();
        SimplicialComplex::build(&gens).ok()
    }
}
