//! Integral 1-cocycles on the edges of a complex.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use num_integer::Integer;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};

/// Integer values on the edges of a complex, aligned with [`SimplicialComplex::edges`],
/// satisfying `z(u,v) + z(v,w) = z(u,w)` on every triangle `u < v < w`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntegralOneCocycle {
    values: Vec<i64>,
}

impl IntegralOneCocycle {
    /// Validates a raw edge list. Edges may be given in either orientation; a reversed edge
    /// contributes the negated value.
    pub fn validate(x: &SimplicialComplex, raw: &[(u32, u32, i64)], default_zero_edges: bool) -> Result<Self> {
        let mut values: Vec<Option<i64>> = vec![None; x.count(1)];
        for &(u, v, z) in raw {
            let (a, b, z) = if u < v { (u, v, z) } else { (v, u, -z) };
            let idx = x.index_of(&[a, b]).ok_or(Error::UnknownEdge(u, v))?;
            values[idx] = Some(z);
        }
        let values = values
            .into_iter()
            .enumerate()
            .map(|(i, v)| match v {
                Some(z) => Ok(z),
                None if default_zero_edges => Ok(0),
                None => Err(Error::MissingEdge(x.edges()[i][0], x.edges()[i][1])),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_values(x, values)
    }

    /// Checks the cocycle condition on values indexed like the edge list.
    pub fn from_values(x: &SimplicialComplex, values: Vec<i64>) -> Result<Self> {
        if values.len() != x.count(1) {
            return Err(Error::DimensionMismatch(values.len(), x.count(1)));
        }
        let z = IntegralOneCocycle { values };
        for t in x.simplices(2) {
            if z.get(x, t[0], t[1]) + z.get(x, t[1], t[2]) != z.get(x, t[0], t[2]) {
                return Err(Error::NotACocycle([t[0], t[1], t[2]]));
            }
        }
        Ok(z)
    }

    pub fn zero(x: &SimplicialComplex) -> Self {
        IntegralOneCocycle { values: vec![0; x.count(1)] }
    }

    /// `δf` for a function on vertices given in vertex-index order.
    pub fn coboundary_of(x: &SimplicialComplex, f: &[i64]) -> Self {
        let values = x
            .edges()
            .iter()
            .map(|e| f[x.index_of(&e[1..]).unwrap()] - f[x.index_of(&e[..1]).unwrap()])
            .collect();
        IntegralOneCocycle { values }
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn edge_value(&self, edge_index: usize) -> i64 {
        self.values[edge_index]
    }

    /// `z(u → v)` for an edge of `x` in either orientation; panics if `{u, v}` is not an edge.
    pub fn get(&self, x: &SimplicialComplex, u: u32, v: u32) -> i64 {
        if u < v {
            self.values[x.index_of(&[u, v]).expect("edge of the complex")]
        } else {
            -self.values[x.index_of(&[v, u]).expect("edge of the complex")]
        }
    }

    /// `z(v_0 → v_p) = Σ_{j<p} z(v_j, v_{j+1})` along the ordered vertices of a simplex.
    pub fn transport(&self, x: &SimplicialComplex, s: &[u32], p: usize) -> i64 {
        if p == 0 {
            0
        } else {
            self.get(x, s[0], s[p])
        }
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }

    pub fn add(&self, other: &Self) -> Self {
        IntegralOneCocycle { values: self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect() }
    }

    pub fn scale(&self, k: i64) -> Self {
        IntegralOneCocycle { values: self.values.iter().map(|a| a * k).collect() }
    }

    /// Integer combination `Σ n_i z_i`; panics on an empty list.
    pub fn combination(terms: &[(i64, &IntegralOneCocycle)]) -> Self {
        let mut acc = terms[0].1.scale(terms[0].0);
        for (n, z) in &terms[1..] {
            acc = acc.add(&z.scale(*n));
        }
        acc
    }

    /// Edge list `(u, v, z(u, v))` with `u < v`.
    pub fn to_edge_list(&self, x: &SimplicialComplex) -> Vec<(u32, u32, i64)> {
        x.edges().iter().zip(&self.values).map(|(e, &z)| (e[0], e[1], z)).collect()
    }
}

/// Rank (0 or 1) of the period group of `[z]` and its divisibility (gcd of the periods).
///
/// Periods are read off the fundamental cycles of a spanning forest, which generate
/// `H_1` of the one-skeleton and therefore surject onto `H_1(X)`.
pub fn class_rank_and_divisibility(x: &SimplicialComplex, z: &IntegralOneCocycle) -> (u32, u64) {
    let n = x.vertex_count();
    let mut adj: Vec<Vec<(usize, i64)>> = vec![Vec::new(); n];
    for (e, &val) in x.edges().iter().zip(z.values()) {
        let a = x.index_of(&e[..1]).unwrap();
        let b = x.index_of(&e[1..]).unwrap();
        adj[a].push((b, val));
        adj[b].push((a, -val));
    }
    // potential φ along a BFS forest
    let mut phi: Vec<Option<i64>> = vec![None; n];
    for root in 0..n {
        if phi[root].is_some() {
            continue;
        }
        phi[root] = Some(0);
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            let pu = phi[u].unwrap();
            for &(w, val) in &adj[u] {
                if phi[w].is_none() {
                    phi[w] = Some(pu + val);
                    queue.push_back(w);
                }
            }
        }
    }
    let mut g: i64 = 0;
    for (e, &val) in x.edges().iter().zip(z.values()) {
        let a = phi[x.index_of(&e[..1]).unwrap()].unwrap();
        let b = phi[x.index_of(&e[1..]).unwrap()].unwrap();
        g = g.gcd(&(val - (b - a)));
    }
    let g = g.unsigned_abs();
    (u32::from(g != 0), g)
}
