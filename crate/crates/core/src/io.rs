//! Canonical JSON for graphs, rotations, witnesses and certificates.
//!
//! Object keys are sorted and there is no whitespace, so equal values
//! serialise to equal bytes.

use std::collections::BTreeMap;

use serde_json::{json, Map, Value};

use crate::embedding::RotationSystem;
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::hom::{Homomorphism, SHomWitness};
use crate::reductions::ReductionCertificate;

fn bad(msg: impl Into<String>) -> Error {
    Error::Format(msg.into())
}

pub fn rotation_to_value(g: &Graph, r: &RotationSystem) -> Value {
    let map: Map<String, Value> = (0..g.vertex_count())
        .map(|v| (g.vertex_name(v).to_string(), json!(r.at(v))))
        .collect();
    Value::Object(map)
}

pub fn rotation_from_value(g: &Graph, v: &Value) -> Result<RotationSystem> {
    let obj = v.as_object().ok_or_else(|| bad("\"rotation\" must be an object"))?;
    let mut order = vec![Vec::new(); g.vertex_count()];
    for (name, list) in obj {
        let x = g
            .index_of(name)
            .ok_or_else(|| bad(format!("rotation names unknown vertex `{name}`")))?;
        let list = list
            .as_array()
            .ok_or_else(|| bad(format!("rotation at `{name}` must be a list")))?;
        order[x] = list
            .iter()
            .map(|e| {
                e.as_u64()
                    .map(|e| e as usize)
                    .ok_or_else(|| bad(format!("rotation at `{name}` holds a non-index")))
            })
            .collect::<Result<_>>()?;
    }
    Ok(RotationSystem::new(order))
}

pub fn graph_to_value(g: &Graph) -> Value {
    let mut obj = Map::new();
    if let Some(n) = g.name() {
        obj.insert("name".into(), json!(n));
    }
    obj.insert("vertices".into(), json!(g.vertices()));
    let edges: Vec<Value> = g
        .edges()
        .iter()
        .map(|e| json!([g.vertex_name(e.u), g.vertex_name(e.v), e.colour]))
        .collect();
    obj.insert("edges".into(), Value::Array(edges));
    if let Some(r) = g.rotation() {
        obj.insert("rotation".into(), rotation_to_value(g, r));
    }
    Value::Object(obj)
}

pub fn graph_from_value(v: &Value) -> Result<Graph> {
    let obj = v.as_object().ok_or_else(|| bad("graph must be a JSON object"))?;
    if let Some(k) = obj
        .keys()
        .find(|k| !["name", "vertices", "edges", "rotation"].contains(&k.as_str()))
    {
        return Err(bad(format!("unknown graph field `{k}`")));
    }
    let vertices: Vec<String> = obj
        .get("vertices")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("missing \"vertices\" list"))?
        .iter()
        .map(|x| x.as_str().map(str::to_string).ok_or_else(|| bad("vertex ids must be strings")))
        .collect::<Result<_>>()?;
    let mut index = BTreeMap::new();
    for (i, v) in vertices.iter().enumerate() {
        if index.insert(v.as_str(), i).is_some() {
            return Err(Error::DuplicateVertex(v.clone()));
        }
    }
    let raw = obj
        .get("edges")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("missing \"edges\" list"))?;
    let mut edges = Vec::with_capacity(raw.len());
    for (k, e) in raw.iter().enumerate() {
        let triple = e
            .as_array()
            .filter(|t| t.len() == 3)
            .ok_or_else(|| bad("each edge must be [u, v, colour]"))?;
        let end = |x: &Value| -> Result<usize> {
            let name = x.as_str().ok_or_else(|| bad("edge endpoints must be vertex ids"))?;
            index
                .get(name)
                .copied()
                .ok_or_else(|| Error::UnknownEndpoint {
                    edge: k,
                    vertex: name.to_string(),
                })
        };
        let colour = triple[2]
            .as_i64()
            .and_then(|c| i32::try_from(c).ok())
            .ok_or_else(|| bad("edge colour must be an integer"))?;
        edges.push(Edge {
            u: end(&triple[0])?,
            v: end(&triple[1])?,
            colour,
        });
    }
    let mut g = Graph::from_indexed(vertices, edges)?;
    if let Some(n) = obj.get("name") {
        g = g.with_name(n.as_str().ok_or_else(|| bad("\"name\" must be a string"))?);
    }
    if let Some(r) = obj.get("rotation") {
        let r = rotation_from_value(&g, r)?;
        g = g.with_rotation(r)?;
    }
    Ok(g)
}

pub fn graph_to_json(g: &Graph) -> String {
    graph_to_value(g).to_string()
}

pub fn graph_from_json(s: &str) -> Result<Graph> {
    let v: Value = serde_json::from_str(s).map_err(|e| bad(e.to_string()))?;
    graph_from_value(&v)
}

/// `{"assignment": {...}, "switch_set": []}`.
pub fn hom_witness(g: &Graph, h: &Graph, f: &Homomorphism) -> Value {
    json!({ "assignment": f.to_names(g, h), "switch_set": [] })
}

/// `{"assignment": {...}, "switch_set": [...]}`.
pub fn shom_witness(g: &Graph, h: &Graph, w: &SHomWitness) -> Value {
    json!({ "assignment": w.hom.to_names(g, h), "switch_set": w.switch_set.members() })
}

/// `{"ports": {...}, "rotation": {...}}`; the rotation is `null` when absent.
pub fn certificate_to_value(out: &Graph, cert: &ReductionCertificate) -> Value {
    json!({
        "ports": cert.ports,
        "rotation": cert.rotation.as_ref().map(|r| rotation_to_value(out, r)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{gen_complete, gen_uc};

    #[test]
    fn canonical_bytes() {
        let g = Graph::new(vec!["b", "a"], vec![("b", "a", -1)]).unwrap().with_name("t");
        assert_eq!(
            graph_to_json(&g),
            r#"{"edges":[["b","a",-1]],"name":"t","vertices":["b","a"]}"#
        );
    }

    #[test]
    fn round_trip() {
        for g in [gen_uc(6).unwrap(), gen_complete(4).unwrap(), gen_complete(5).unwrap()] {
            let s = graph_to_json(&g);
            let back = graph_from_json(&s).unwrap();
            assert_eq!(back, g);
            assert_eq!(graph_to_json(&back), s);
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(graph_from_json("[1]"), Err(Error::Format(_))));
        assert!(matches!(graph_from_json("{"), Err(Error::Format(_))));
        assert!(matches!(
            graph_from_json(r#"{"vertices":["a"],"edges":[["a","b",1]]}"#),
            Err(Error::UnknownEndpoint { .. })
        ));
        assert!(matches!(
            graph_from_json(r#"{"vertices":["a","a"],"edges":[]}"#),
            Err(Error::DuplicateVertex(_))
        ));
        assert!(matches!(
            graph_from_json(r#"{"vertices":["a"],"edges":[["a","a",1]]}"#),
            Err(Error::LoopEdge { .. })
        ));
        assert!(matches!(
            graph_from_json(r#"{"vertices":[],"edges":[],"extra":1}"#),
            Err(Error::Format(_))
        ));
    }
}
