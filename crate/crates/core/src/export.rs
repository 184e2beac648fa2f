//! Deterministic JSON, text and dot renderings.
//!
//! Rationals are strings `"p/q"` in lowest terms with `q > 0`; integers are
//! JSON numbers when they fit in `i64` and decimal strings otherwise.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::graph::{Cycle, PlumbingGraph, Vertex};
use crate::lattice::{IntVec3, Rational};
use crate::newton::SpectrumPart;
use crate::puiseux::PuiseuxPoly;

pub fn int_json(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) => json!(v),
        None => json!(x.to_string()),
    }
}

pub fn parse_int(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(BigInt::from)
            .ok_or_else(|| Error::InvalidGraph(format!("not an integer: {n}"))),
        Value::String(s) => s
            .parse()
            .map_err(|_| Error::InvalidGraph(format!("not an integer: {s}"))),
        other => Err(Error::InvalidGraph(format!("not an integer: {other}"))),
    }
}

pub fn rational_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::OutOfRange(format!("not a rational: {s}"));
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s.trim(), "1"),
    };
    let p: BigInt = p.parse().map_err(|_| bad())?;
    let q: BigInt = q.parse().map_err(|_| bad())?;
    if !q.is_positive() {
        return Err(bad());
    }
    Ok(Rational::new(p, q))
}

pub fn vec3_json(v: &IntVec3) -> Value {
    Value::Array(v.coords().iter().map(int_json).collect())
}

pub fn cycle_json(z: &Cycle) -> Value {
    Value::Array(z.coeffs().iter().map(int_json).collect())
}

/// Sorted `[exponent, coefficient]` pairs.
pub fn poly_json(p: &PuiseuxPoly) -> Value {
    Value::Array(
        p.terms()
            .map(|(e, c)| json!([rational_string(e), int_json(c)]))
            .collect(),
    )
}

/// Sorted `[value, multiplicity]` pairs.
pub fn spectrum_json(s: &SpectrumPart) -> Value {
    Value::Array(
        s.multiplicities()
            .into_iter()
            .map(|(e, m)| json!([rational_string(&e), m]))
            .collect(),
    )
}

/// `{"vertices": [{"id", "b", "g", "ell"?}], "edges": [[u, v], ...]}`.
pub fn graph_json(g: &PlumbingGraph, ell: Option<&[IntVec3]>) -> Value {
    let vertices: Vec<Value> = g
        .vertices()
        .iter()
        .enumerate()
        .map(|(id, v)| {
            let mut m = Map::new();
            m.insert("id".into(), json!(id));
            m.insert("b".into(), int_json(&v.b));
            m.insert("g".into(), int_json(&v.g));
            if let Some(l) = ell.and_then(|e| e.get(id)) {
                m.insert("ell".into(), vec3_json(l));
            }
            Value::Object(m)
        })
        .collect();
    let edges: Vec<Value> = g.edges().iter().map(|(u, v)| json!([u, v])).collect();
    json!({ "vertices": vertices, "edges": edges })
}

/// Inverse of [`graph_json`]; vertex ids must be `0..n` in order.
pub fn graph_from_json(v: &Value) -> Result<(PlumbingGraph, Option<Vec<IntVec3>>)> {
    let bad = |what: &str| Error::InvalidGraph(what.to_string());
    let verts = v.get("vertices").and_then(Value::as_array).ok_or_else(|| bad("missing vertices"))?;
    let mut vertices = Vec::with_capacity(verts.len());
    let mut ells = Vec::new();
    for (i, x) in verts.iter().enumerate() {
        let id = x.get("id").and_then(Value::as_u64).ok_or_else(|| bad("missing id"))?;
        if id != i as u64 {
            return Err(bad("vertex ids must be 0..n in order"));
        }
        let b = parse_int(x.get("b").ok_or_else(|| bad("missing b"))?)?;
        let g = parse_int(x.get("g").ok_or_else(|| bad("missing g"))?)?;
        vertices.push(Vertex { b, g });
        if let Some(l) = x.get("ell") {
            let c = l.as_array().filter(|c| c.len() == 3).ok_or_else(|| bad("ell needs 3 entries"))?;
            ells.push(IntVec3::from_big(parse_int(&c[0])?, parse_int(&c[1])?, parse_int(&c[2])?));
        }
    }
    let mut edges = Vec::new();
    for e in v.get("edges").and_then(Value::as_array).ok_or_else(|| bad("missing edges"))? {
        let pair = e.as_array().filter(|p| p.len() == 2).ok_or_else(|| bad("edge needs 2 ids"))?;
        let u = pair[0].as_u64().ok_or_else(|| bad("edge id"))? as usize;
        let w = pair[1].as_u64().ok_or_else(|| bad("edge id"))? as usize;
        edges.push((u, w));
    }
    let ell = match ells.len() {
        0 => None,
        n if n == vertices.len() => Some(ells),
        _ => return Err(bad("ell given for some vertices only")),
    };
    Ok((PlumbingGraph::new(vertices, edges)?, ell))
}

pub fn graph_text(g: &PlumbingGraph, ell: Option<&[IntVec3]>) -> String {
    let mut out = String::new();
    for (id, v) in g.vertices().iter().enumerate() {
        let _ = write!(out, "v{id}: b={} g={}", v.b, v.g);
        if let Some(l) = ell.and_then(|e| e.get(id)) {
            let _ = write!(out, " ell={l}");
        }
        let nb: Vec<String> = g.neighbors(id).iter().map(|w| format!("v{w}")).collect();
        let _ = writeln!(out, " -- {}", nb.join(" "));
    }
    out
}

pub fn graph_dot(g: &PlumbingGraph) -> String {
    let mut out = String::from("graph plumbing {\n");
    for (id, v) in g.vertices().iter().enumerate() {
        let _ = writeln!(out, "  v{id} [label=\"v{id} [b={}, g={}]\"];", v.b, v.g);
    }
    for (u, w) in g.edges() {
        let _ = writeln!(out, "  v{u} -- v{w};");
    }
    out.push_str("}\n");
    out
}
