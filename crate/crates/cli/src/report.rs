//! JSON report fragments and the text rendering shared by every command.

use serde_json::{json, Map, Value};

use novikov_core::algebra::{QPoly, Scalar};
use novikov_core::invariants::{CritBoundReport, CupLengthCertificate, JumpReport};

/// Rationals as `p/q` (or an integer), algebraic root classes as `@minpoly:c0,c1,...`.
pub fn scalar(s: &Scalar) -> Value {
    match s {
        Scalar::Algebraic { field, residue } if *residue == field.generator() => {
            let c: Vec<String> = field.min_poly().coeffs().iter().map(|c| c.to_string()).collect();
            Value::String(format!("@minpoly:{}", c.join(",")))
        }
        Scalar::Rational(r) => Value::String(r.to_string()),
        other => Value::String(other.to_string()),
    }
}

/// Coefficients from the constant term up, as exact rational strings.
pub fn poly(p: &QPoly) -> Value {
    Value::Array(p.coeffs().iter().map(|c| Value::String(c.to_string())).collect())
}

pub fn jumps(r: &JumpReport) -> Value {
    let mut out = Vec::new();
    for d in &r.degrees {
        for j in &d.jumps {
            out.push(json!({ "q": d.q, "factor": poly(&j.factor), "dim": j.jumped_dim }));
        }
    }
    Value::Array(out)
}

pub fn certificate(c: &CupLengthCertificate) -> Value {
    let factors: Vec<Value> = c
        .factors
        .iter()
        .map(|f| {
            let rep: Vec<Value> = f.representative.iter().map(|(i, v)| json!([i, scalar(v)])).collect();
            json!({ "monodromy": scalar(&f.monodromy), "degree": f.degree, "is_unit": f.is_unit, "representative": rep })
        })
        .collect();
    json!({
        "k": c.k,
        "product_monodromy": scalar(&c.product_monodromy),
        "product_degree": c.product_degree,
        "product_coordinates": c.product_coordinates.iter().map(scalar).collect::<Vec<_>>(),
        "factors": factors,
    })
}

/// Bound fields of a cup-length or critical-point report.
pub fn bound(r: &CritBoundReport, seed: u64) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("cl_lower_bound".into(), json!(r.cl_lower_bound));
    m.insert("crit_bound".into(), json!(r.crit_point_bound));
    m.insert("mode".into(), json!(r.mode.as_str()));
    m.insert("seed".into(), json!(r.seed.unwrap_or(seed)));
    m.insert("surrogates".into(), Value::Array(r.surrogates.iter().map(|g| json!(g.to_string())).collect()));
    m.insert("candidates".into(), Value::Array(r.candidates.iter().map(scalar).collect()));
    m.insert("skipped".into(), json!(r.skipped));
    m.insert("certificate".into(), r.certificate.as_ref().map_or(Value::Null, certificate));
    m
}

fn is_flat(v: &Value) -> bool {
    match v {
        Value::Object(_) => false,
        Value::Array(items) => items.iter().all(is_flat),
        _ => true,
    }
}

fn flat(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn render_into(out: &mut String, v: &Value, indent: usize) {
    let pad = " ".repeat(indent);
    match v {
        Value::Object(m) => {
            for (k, item) in m {
                if is_flat(item) {
                    out.push_str(&format!("{}{}: {}\n", pad, k, flat(item)));
                } else {
                    out.push_str(&format!("{}{}:\n", pad, k));
                    render_into(out, item, indent + 2);
                }
            }
        }
        Value::Array(items) => {
            for item in items {
                if is_flat(item) {
                    out.push_str(&format!("{}- {}\n", pad, flat(item)));
                } else {
                    out.push_str(&format!("{}-\n", pad));
                    render_into(out, item, indent + 2);
                }
            }
        }
        other => out.push_str(&format!("{}{}\n", pad, flat(other))),
    }
}

/// Indented `key: value` lines carrying exactly the values of the JSON report.
pub fn render_text(v: &Value) -> String {
    let mut out = String::new();
    render_into(&mut out, v, 0);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::Arc;

    use novikov_core::algebra::NumberField;

    #[test]
    fn scalars_use_the_input_syntax() {
        assert_eq!(scalar(&Scalar::ratio(-3, 6)), json!("-1/2"));
        assert_eq!(scalar(&Scalar::int(4)), json!("4"));
        let golden = Scalar::root_of(Arc::new(NumberField::from_ints(&[1, -3, 1]).unwrap()));
        assert_eq!(scalar(&golden), json!("@minpoly:1,-3,1"));
        assert_eq!(novikov_core::algebra::parse_scalar("@minpoly:1,-3,1").unwrap(), golden);
    }

    #[test]
    fn text_lists_every_leaf() {
        let v = json!({ "novikov": [0, 1], "jumps": [{ "q": 1, "factor": ["-1", "1"], "dim": 2 }], "mode": "probabilistic" });
        let t = render_text(&v);
        assert!(t.contains("novikov: [0,1]"));
        assert!(t.contains("  q: 1"));
        assert!(t.contains("  factor: [\"-1\",\"1\"]"));
        assert!(t.contains("mode: probabilistic"));
    }
}
