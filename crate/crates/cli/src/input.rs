//! JSON documents read and written by the tool.

use serde::{Deserialize, Serialize};

use novikov_core::complex::SimplicialComplex;
use novikov_core::cocycle::IntegralOneCocycle;
use novikov_core::corpus::GeneratedSpace;
use novikov_core::cut::CutPresentation;
use novikov_core::Error;

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct CocycleDoc {
    /// `[u, v, value]` with `u < v`.
    pub edges: Vec<(u32, u32, i64)>,
}

/// A complex with a class; `maximal_simplices` may be omitted when a cut is given.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct ComplexDoc {
    #[serde(default)]
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub maximal_simplices: Option<Vec<Vec<u32>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cocycle: Option<CocycleDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cut: Option<Box<CutDoc>>,
    /// Extra classes spanning a higher-rank class, for `thm3-bound`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub base_classes: Option<Vec<CocycleDoc>>,
    #[serde(default)]
    pub manifold: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CutDoc {
    #[serde(rename = "N")]
    pub n: ComplexDoc,
    #[serde(rename = "V", default, skip_serializing_if = "Option::is_none")]
    pub v: Option<ComplexDoc>,
    #[serde(default)]
    pub i_plus: Vec<u32>,
    #[serde(default)]
    pub i_minus: Vec<u32>,
}

/// An ingested document.
pub struct Loaded {
    pub name: String,
    pub complex: SimplicialComplex,
    pub cocycle: IntegralOneCocycle,
    pub cut: Option<CutPresentation>,
    pub base_classes: Vec<IntegralOneCocycle>,
    pub manifold: bool,
}

fn bare_complex(doc: &ComplexDoc, what: &str) -> Result<SimplicialComplex, Error> {
    match &doc.maximal_simplices {
        Some(m) => SimplicialComplex::build(m),
        None => Err(Error::InvalidCut(format!("{} has no maximal_simplices", what))),
    }
}

fn cut_of(doc: &CutDoc) -> Result<CutPresentation, Error> {
    let n = bare_complex(&doc.n, "N")?;
    let v = doc.v.as_ref().map(|v| bare_complex(v, "V")).transpose()?;
    CutPresentation::new(n, v, doc.i_plus.clone(), doc.i_minus.clone())
}

impl ComplexDoc {
    pub fn load(&self, default_zero_edges: bool) -> Result<Loaded, Error> {
        let cut = self.cut.as_deref().map(cut_of).transpose()?;
        let reglued = cut.as_ref().map(|c| c.reglue()).transpose()?;
        let (complex, cocycle) = match (&self.maximal_simplices, reglued) {
            (Some(m), reglued) => {
                let x = SimplicialComplex::build(m)?;
                let raw = self.cocycle.as_ref().map_or(&[][..], |c| &c.edges[..]);
                let z = IntegralOneCocycle::validate(&x, raw, default_zero_edges)?;
                if let Some((rx, rz)) = reglued {
                    if rx != x || rz != z {
                        return Err(Error::InvalidCut("the cut does not reglue to the given complex and class".into()));
                    }
                }
                (x, z)
            }
            (None, Some(pair)) => pair,
            (None, None) => return Err(Error::EmptyComplex),
        };
        let base_classes = match &self.base_classes {
            Some(list) => list
                .iter()
                .map(|c| IntegralOneCocycle::validate(&complex, &c.edges, default_zero_edges))
                .collect::<Result<Vec<_>, _>>()?,
            None => vec![cocycle.clone()],
        };
        Ok(Loaded { name: self.name.clone(), complex, cocycle, cut, base_classes, manifold: self.manifold })
    }
}

fn complex_doc(name: &str, x: &SimplicialComplex, z: Option<&IntegralOneCocycle>) -> ComplexDoc {
    ComplexDoc {
        name: name.into(),
        maximal_simplices: Some(x.maximal_simplices()),
        cocycle: z.map(|z| CocycleDoc { edges: z.to_edge_list(x) }),
        ..ComplexDoc::default()
    }
}

/// Document for a generated space, with its cut block when it has one.
pub fn space_doc(s: &GeneratedSpace, base_classes: Option<&[IntegralOneCocycle]>) -> ComplexDoc {
    let mut doc = complex_doc(&s.label, &s.complex, Some(&s.cocycle));
    doc.manifold = s.manifold;
    doc.cut = s.cut.as_ref().map(|c| {
        Box::new(CutDoc {
            n: complex_doc("N", &c.n, None),
            v: c.v.as_ref().map(|v| complex_doc("V", v, None)),
            i_plus: c.i_plus.clone(),
            i_minus: c.i_minus.clone(),
        })
    });
    doc.base_classes =
        base_classes.map(|b| b.iter().map(|z| CocycleDoc { edges: z.to_edge_list(&s.complex) }).collect());
    doc
}

#[cfg(test)]
mod tests {
    use super::*;
    use novikov_core::corpus;

    #[test]
    fn generated_documents_reload() {
        for s in [corpus::circle(4).unwrap(), corpus::torus().unwrap(), corpus::surface(2).unwrap()] {
            let text = serde_json::to_string(&space_doc(&s, None)).unwrap();
            let doc: ComplexDoc = serde_json::from_str(&text).unwrap();
            let l = doc.load(false).unwrap();
            assert_eq!(l.complex, s.complex);
            assert_eq!(l.cocycle, s.cocycle);
            assert_eq!(l.manifold, s.manifold);
            assert_eq!(l.cut.is_some(), s.cut.is_some());
        }
    }

    #[test]
    fn cut_alone_is_reglued() {
        let s = corpus::torus().unwrap();
        let mut doc = space_doc(&s, None);
        doc.maximal_simplices = None;
        doc.cocycle = None;
        let l = doc.load(false).unwrap();
        assert_eq!((l.complex, l.cocycle), (s.complex, s.cocycle));
    }

    #[test]
    fn missing_edges_follow_the_flag() {
        let doc: ComplexDoc = serde_json::from_str(r#"{"name":"c","maximal_simplices":[[0,1],[1,2],[0,2]],"cocycle":{"edges":[[0,1,1]]}}"#).unwrap();
        assert!(matches!(doc.load(false), Err(Error::MissingEdge(..))));
        assert!(doc.load(true).is_ok());
    }
}
