//! Browser bindings. Every entry point takes plain strings and numbers and
//! returns a JSON string: the result on success, `{"error": ...}` otherwise.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use fracramsey::clique;
use fracramsey::cyclicity::{is_minimal_cyclicity, Certificate};
use fracramsey::generators::gen_planar_family;
use fracramsey::graph::Graph;
use fracramsey::graph6::{decode_graph, encode_graph6};

fn respond(result: Result<Value, String>) -> String {
    match result {
        Ok(v) => v.to_string(),
        Err(e) => json!({ "error": e }).to_string(),
    }
}

fn graph_json(g: &Graph) -> Value {
    json!({
        "graph6": encode_graph6(g),
        "vertices": g.vertices().collect::<Vec<_>>(),
        "edges": g.edges().map(|e| [e.0, e.1]).collect::<Vec<_>>(),
    })
}

/// Membership and minimality of a graph given as graph6 or an edge list.
#[wasm_bindgen]
pub fn check_graph(text: &str, r: usize) -> String {
    respond((|| {
        let g = decode_graph(text).map_err(|e| e.to_string())?;
        let v = is_minimal_cyclicity(&g, r).map_err(|e| e.to_string())?;
        if !v.verify(&g) {
            return Err("certificate failed re-verification".into());
        }
        let certificate = match &v.certificate {
            Certificate::ViolatingSubgraph { subgraph } => json!({
                "kind": "violating_subgraph",
                "subgraph": graph_json(subgraph),
            }),
            Certificate::GoodColouring { colouring } => json!({
                "kind": "good_colouring",
                "colours": colouring.colours.iter().map(|(e, c)| [e.0 as usize, e.1 as usize, *c]).collect::<Vec<_>>(),
            }),
        };
        Ok(json!({
            "r": r,
            "graph": graph_json(&g),
            "member": v.member,
            "minimal": v.minimal,
            "certificate": certificate,
        }))
    })())
}

/// Planar minimal graph on `n` vertices with its rotation system.
#[wasm_bindgen]
pub fn planar_family(r: usize, n: usize) -> String {
    respond((|| {
        let m = gen_planar_family(r, n).map_err(|e| e.to_string())?;
        Ok(json!({
            "r": r,
            "graph": graph_json(&m.graph),
            "rotation": m.embedding.rotation,
            "faces": m.embedding.face_count(),
        }))
    })())
}

/// Lower and upper bounds for the diagonal clique number.
#[wasm_bindgen]
pub fn clique_bounds(r: usize, n: usize) -> String {
    respond((|| {
        let lower = clique::lower_bound_probabilistic(r, n).map_err(|e| e.to_string())?;
        let upper = clique::upper_bound_diagonal(r, n).map_err(|e| e.to_string())?;
        let closed = clique::upper_bound_closed_form(r, n).map_err(|e| e.to_string())?;
        Ok(json!({
            "r": r,
            "n": n,
            "lower": lower.threshold,
            "upper_recursive": upper,
            "upper_closed": closed.approx,
            "upper_closed_exact": closed.exact.to_string(),
        }))
    })())
}
