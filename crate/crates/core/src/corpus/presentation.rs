//! Presentation 2-complexes with a class given by its values on the generators.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::GeneratedSpace;
use crate::cocycle::IntegralOneCocycle;
use crate::complex::{Simplex, SimplicialComplex};
use crate::error::{Error, Result};

/// A generator index with exponent `±1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Letter {
    pub generator: usize,
    pub inverse: bool,
}

impl Letter {
    /// Parses a word over `names`: a lowercase letter is the generator, uppercase its inverse.
    pub fn parse_word(names: &str, word: &str) -> Result<Vec<Letter>> {
        word.chars()
            .map(|c| {
                let lower = c.to_ascii_lowercase();
                let generator = names
                    .chars()
                    .position(|n| n == lower)
                    .ok_or_else(|| Error::ParameterOutOfRange(format!("unknown generator {:?}", c)))?;
                Ok(Letter { generator, inverse: c.is_ascii_uppercase() })
            })
            .collect()
    }
}

/// The presentation complex: each generator is a loop subdivided into three edges at a base
/// vertex, and each relator bounds a disk made of a collar annulus and a cone.
///
/// `xi[k]` is the value of the class on generator `k`; it must vanish on every relator.
pub fn presentation_complex(generators: usize, relators: &[Vec<Letter>], xi: &[i64]) -> Result<GeneratedSpace> {
    if xi.len() != generators {
        return Err(Error::DimensionMismatch(xi.len(), generators));
    }
    let gen_vertices = |k: usize| (1 + 2 * k as u32, 2 + 2 * k as u32);
    let mut next = 1 + 2 * generators as u32;
    let mut top: Vec<Simplex> = Vec::new();
    let mut values: Vec<(u32, u32, i64)> = Vec::new();
    for k in 0..generators {
        let (p, q) = gen_vertices(k);
        top.extend([vec![0, p], vec![p, q], vec![0, q]]);
        values.extend([(0, p, xi[k]), (p, q, 0), (q, 0, 0)]);
    }
    for r in relators {
        if r.is_empty() {
            return Err(Error::ParameterOutOfRange("empty relator".into()));
        }
        if r.iter().any(|l| l.generator >= generators) {
            return Err(Error::ParameterOutOfRange("relator uses an unknown generator".into()));
        }
        let mut path: Vec<u32> = Vec::new();
        let mut steps: Vec<i64> = Vec::new();
        for l in r {
            let (p, q) = gen_vertices(l.generator);
            if l.inverse {
                path.extend([0, q, p]);
                steps.extend([0, 0, -xi[l.generator]]);
            } else {
                path.extend([0, p, q]);
                steps.extend([xi[l.generator], 0, 0]);
            }
        }
        if steps.iter().sum::<i64>() != 0 {
            return Err(Error::ParameterOutOfRange("the class does not vanish on a relator".into()));
        }
        let len = path.len();
        let w: Vec<u32> = (0..len as u32).map(|i| next + i).collect();
        let c = next + len as u32;
        next = c + 1;
        let mut potential = 0i64;
        for i in 0..len {
            let j = (i + 1) % len;
            top.push(vec![w[i], path[i], path[j]]);
            top.push(vec![w[i], w[j], path[j]]);
            top.push(vec![c, w[i], w[j]]);
            values.extend([(path[i], w[i], 0), (w[i], path[j], steps[i]), (w[i], w[j], steps[i]), (c, w[i], potential)]);
            potential += steps[i];
        }
    }
    let x = SimplicialComplex::build(&top)?;
    let z = IntegralOneCocycle::validate(&x, &values, false)?;
    Ok(GeneratedSpace { dimension: x.dim(), complex: x, cocycle: z, cut: None, label: "presentation complex".into(), manifold: false })
}

/// Relator of the Alexander-polynomial instance over generators `t, x`.
pub const ALEXANDER_RELATOR: &str = "XXtxxxxxtXXXXXtxxTTT";

/// One-relator complex whose Fox derivative in `x` maps to `(τ − 1)(2τ² − 3τ + 2)`, with the
/// class sending `t ↦ 1`, `x ↦ 0`.
pub fn alexander_style_instance() -> Result<GeneratedSpace> {
    let r = Letter::parse_word("tx", ALEXANDER_RELATOR)?;
    let mut g = presentation_complex(2, &[r], &[1, 0])?;
    g.label = format!("presentation complex <t, x | {}>", ALEXANDER_RELATOR);
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn torus_presentation() {
        let r = Letter::parse_word("ab", "abAB").unwrap();
        let g = presentation_complex(2, &[r], &[1, 0]).unwrap();
        assert_eq!(g.complex.euler_characteristic(), 0);
        assert_eq!(g.complex.betti_numbers(), alloc::vec![1, 2, 1]);
    }

    #[test]
    fn class_must_vanish_on_relators() {
        let r = Letter::parse_word("t", "tt").unwrap();
        assert!(presentation_complex(1, &[r], &[1]).is_err());
        assert!(Letter::parse_word("tx", "ty").is_err());
    }
}
