//! JSON file formats. All coordinates are exact rational strings of the
//! form `"p/q"` (with `/q` omitted when the denominator is 1).

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::complexes::{FVector, HVector, SimplicialComplex};
use crate::error::Error;
use crate::linalg::{parse_rational, Rational};
use crate::polytope::cayley::CayleyPolytope;
use crate::polytope::{Point, Polytope, PureCollection};
use crate::Result;

#[derive(Serialize, Deserialize)]
struct PolytopeWire {
    ambient_dim: usize,
    vertices: Vec<Vec<String>>,
}

#[derive(Serialize, Deserialize)]
struct CollectionWire {
    d: usize,
    polytopes: Vec<PolytopeWire>,
}

#[derive(Serialize, Deserialize)]
struct CayleyWire {
    d: usize,
    m: usize,
    vertices: Vec<Vec<String>>,
    provenance: Vec<(usize, usize)>,
}

#[derive(Serialize, Deserialize)]
struct ComplexWire {
    vertex_count: usize,
    facets: Vec<Vec<usize>>,
}

fn point_to_strings(p: &Point) -> Vec<String> {
    p.iter().map(Rational::to_string).collect()
}

fn point_from_strings(s: &[String]) -> Result<Point> {
    s.iter().map(|x| parse_rational(x)).collect()
}

fn polytope_wire(p: &Polytope) -> PolytopeWire {
    PolytopeWire {
        ambient_dim: p.ambient_dim(),
        vertices: p.vertices().iter().map(point_to_strings).collect(),
    }
}

fn polytope_from_wire(w: &PolytopeWire) -> Result<Polytope> {
    let vertices = w
        .vertices
        .iter()
        .map(|v| point_from_strings(v))
        .collect::<Result<Vec<_>>>()?;
    Polytope::from_vertices(w.ambient_dim, vertices)
}

pub fn polytope_to_json(p: &Polytope) -> String {
    serde_json::to_string_pretty(&polytope_wire(p)).expect("polytope serializes")
}

pub fn polytope_from_json(s: &str) -> Result<Polytope> {
    polytope_from_wire(&serde_json::from_str(s)?)
}

pub fn collection_to_json(c: &PureCollection) -> String {
    let wire = CollectionWire {
        d: c.d(),
        polytopes: c.polytopes().iter().map(polytope_wire).collect(),
    };
    serde_json::to_string_pretty(&wire).expect("collection serializes")
}

pub fn collection_from_json(s: &str) -> Result<PureCollection> {
    let wire: CollectionWire = serde_json::from_str(s)?;
    let polytopes = wire
        .polytopes
        .iter()
        .map(polytope_from_wire)
        .collect::<Result<Vec<_>>>()?;
    PureCollection::new(wire.d, polytopes)
}

pub fn cayley_to_json(k: &CayleyPolytope) -> String {
    let wire = CayleyWire {
        d: k.d(),
        m: k.m(),
        vertices: k.vertices().iter().map(point_to_strings).collect(),
        provenance: k.provenance().to_vec(),
    };
    serde_json::to_string_pretty(&wire).expect("cayley polytope serializes")
}

pub fn complex_to_json(c: &SimplicialComplex) -> String {
    let wire = ComplexWire {
        vertex_count: c.vertex_count(),
        facets: c.facets().to_vec(),
    };
    serde_json::to_string_pretty(&wire).expect("complex serializes")
}

pub fn complex_from_json(s: &str) -> Result<SimplicialComplex> {
    let wire: ComplexWire = serde_json::from_str(s)?;
    SimplicialComplex::new(wire.vertex_count, wire.facets)
}

/// f-vector as a JSON integer array with its explicit starting index.
pub fn fvector_to_json(f: &FVector) -> serde_json::Value {
    let (start, entries) = match (f.iter().next(), f.max_dim()) {
        (Some((start, _)), Some(top)) => (start, f.slice(start, top)),
        _ => (0, Vec::new()),
    };
    serde_json::json!({ "start": start, "entries": entries })
}

/// h-vector as a JSON integer array with its dimension parameter.
pub fn hvector_to_json(h: &HVector) -> serde_json::Value {
    serde_json::json!({ "D": h.d(), "entries": h.entries() })
}

pub fn load_polytope(path: &Path) -> Result<Polytope> {
    polytope_from_json(&std::fs::read_to_string(path)?)
}

pub fn load_collection(path: &Path) -> Result<PureCollection> {
    let text = std::fs::read_to_string(path)?;
    collection_from_json(&text).map_err(|e| match e {
        Error::Json(err) => Error::Malformed(format!(
            "{}: not a collection file: {err}",
            path.display()
        )),
        other => other,
    })
}
