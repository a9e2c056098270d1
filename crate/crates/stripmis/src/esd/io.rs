//! JSON file format for extended strip decompositions.
//!
//! Top-level keys: `pattern` (`vertices`: int list, `edges`: `[u, v, id]`
//! triples), `eta` (`edge`, `edge_end`, `vertex`, `triangle` maps), and an
//! optional `terminals` list. Map keys are stringified ids: `"3"` for edges
//! and vertices, `"3/1"` for (edge, endpoint) pairs, `"0,2,5"` for sorted
//! triangles. All vertex lists must be sorted and duplicate-free; unknown
//! keys are rejected.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::esd::{Esd, EsdError, EtaMap, PatternGraph};
use crate::graph::{Graph, VertexSet};

#[derive(Debug, Error)]
pub enum EsdIoError {
    #[error("decomposition file is not valid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("decomposition file schema error: {0}")]
    Schema(String),
    #[error(transparent)]
    Esd(#[from] EsdError),
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct EsdFile {
    pattern: PatternDto,
    eta: EtaDto,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    terminals: Option<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PatternDto {
    vertices: Vec<usize>,
    edges: Vec<[usize; 3]>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct EtaDto {
    edge: BTreeMap<String, Vec<usize>>,
    edge_end: BTreeMap<String, Vec<usize>>,
    #[serde(default)]
    vertex: BTreeMap<String, Vec<usize>>,
    #[serde(default)]
    triangle: BTreeMap<String, Vec<usize>>,
}

fn schema(msg: impl Into<String>) -> EsdIoError {
    EsdIoError::Schema(msg.into())
}

fn sorted_set(list: Vec<usize>, what: &str) -> Result<VertexSet, EsdIoError> {
    VertexSet::from_sorted(list).map_err(|_| schema(format!("{what}: list not sorted strictly")))
}

/// Parses a decomposition file against a host graph. The host is only used
/// for id range checks; definitional validity is a separate concern (see
/// [`Esd::validate`]).
pub fn read_esd(text: &str, host: &Graph) -> Result<Esd, EsdIoError> {
    let file: EsdFile = serde_json::from_str(text)?;

    let p = file.pattern.vertices.len();
    if file.pattern.vertices != (0..p).collect::<Vec<_>>() {
        return Err(schema("pattern.vertices must be exactly 0..p in order"));
    }
    let m = file.pattern.edges.len();
    let mut endpoints = vec![None; m];
    for &[u, v, id] in &file.pattern.edges {
        if id >= m {
            return Err(schema(format!("edge id {id} out of range (m = {m})")));
        }
        if endpoints[id].is_some() {
            return Err(schema(format!("duplicate edge id {id}")));
        }
        endpoints[id] = Some((u, v));
    }
    let edges: Vec<(usize, usize)> = endpoints
        .into_iter()
        .map(|e| e.expect("all ids distinct and in range, so all slots filled"))
        .collect();
    let pattern = PatternGraph::new(p, edges)?;
    let mut eta = EtaMap::empty(&pattern);

    for (key, list) in file.eta.edge {
        let e: usize = key
            .parse()
            .map_err(|_| schema(format!("bad edge key {key:?}")))?;
        if e >= m {
            return Err(schema(format!("edge key {e} out of range")));
        }
        eta.set_edge(e, sorted_set(list, &format!("eta.edge[{e}]"))?);
    }
    for (key, list) in file.eta.edge_end {
        let (e_str, v_str) = key
            .split_once('/')
            .ok_or_else(|| schema(format!("bad edge_end key {key:?}, expected \"e/v\"")))?;
        let e: usize = e_str
            .parse()
            .map_err(|_| schema(format!("bad edge id in edge_end key {key:?}")))?;
        let v: usize = v_str
            .parse()
            .map_err(|_| schema(format!("bad endpoint in edge_end key {key:?}")))?;
        if e >= m {
            return Err(schema(format!("edge_end key {key:?} out of range")));
        }
        eta.set_edge_end(e, v, sorted_set(list, &format!("eta.edge_end[{key}]"))?)?;
    }
    for (key, list) in file.eta.vertex {
        let v: usize = key
            .parse()
            .map_err(|_| schema(format!("bad vertex key {key:?}")))?;
        if v >= p {
            return Err(schema(format!("vertex key {v} out of range")));
        }
        eta.set_vertex(v, sorted_set(list, &format!("eta.vertex[{v}]"))?);
    }
    for (key, list) in file.eta.triangle {
        let parts: Vec<usize> = key
            .split(',')
            .map(|s| {
                s.parse()
                    .map_err(|_| schema(format!("bad triangle key {key:?}")))
            })
            .collect::<Result<_, _>>()?;
        if parts.len() != 3 || parts[0] >= parts[1] || parts[1] >= parts[2] {
            return Err(schema(format!(
                "triangle key {key:?} must be three sorted vertices"
            )));
        }
        let t = [parts[0], parts[1], parts[2]];
        eta.set_triangle(
            &pattern,
            t,
            sorted_set(list, &format!("eta.triangle[{key}]"))?,
        )?;
    }
    let terminals = match file.terminals {
        Some(list) => Some(sorted_set(list, "terminals")?),
        None => None,
    };
    Ok(Esd::new(host.clone(), pattern, eta, terminals)?)
}

/// Serializes a decomposition in the file format, deterministically (sorted
/// maps, two-space indentation).
pub fn write_esd(esd: &Esd) -> String {
    let pattern = PatternDto {
        vertices: (0..esd.pattern.n()).collect(),
        edges: (0..esd.pattern.edge_count())
            .map(|e| {
                let (u, v) = esd.pattern.endpoints(e);
                [u, v, e]
            })
            .collect(),
    };
    let mut eta = EtaDto {
        edge: BTreeMap::new(),
        edge_end: BTreeMap::new(),
        vertex: BTreeMap::new(),
        triangle: BTreeMap::new(),
    };
    for e in 0..esd.pattern.edge_count() {
        eta.edge
            .insert(e.to_string(), esd.eta.edge(e).iter().collect());
        for (end, set) in esd.eta.ends_of(e) {
            eta.edge_end
                .insert(format!("{e}/{end}"), set.iter().collect());
        }
    }
    for v in 0..esd.pattern.n() {
        eta.vertex
            .insert(v.to_string(), esd.eta.vertex(v).iter().collect());
    }
    for (t, set) in esd.eta.triangle_entries() {
        eta.triangle
            .insert(format!("{},{},{}", t[0], t[1], t[2]), set.iter().collect());
    }
    let file = EsdFile {
        pattern,
        eta,
        terminals: esd.terminals.as_ref().map(|z| z.iter().collect()),
    };
    serde_json::to_string_pretty(&file).expect("serialization cannot fail")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::esd::fixtures::p4_with_terminals;
    use crate::esd::StripMode;

    #[test]
    fn round_trip() {
        let esd = p4_with_terminals();
        let text = write_esd(&esd);
        let back = read_esd(&text, &esd.host).unwrap();
        assert_eq!(back, esd);
        assert!(back.validate(StripMode::Strict).is_ok());
    }

    #[test]
    fn unknown_keys_rejected() {
        let esd = p4_with_terminals();
        let mut value: serde_json::Value = serde_json::from_str(&write_esd(&esd)).unwrap();
        value
            .as_object_mut()
            .unwrap()
            .insert("extra".into(), serde_json::json!(1));
        let text = serde_json::to_string(&value).unwrap();
        assert!(matches!(
            read_esd(&text, &esd.host),
            Err(EsdIoError::Json(_))
        ));
    }

    #[test]
    fn unsorted_lists_rejected() {
        let esd = p4_with_terminals();
        let mut value: serde_json::Value = serde_json::from_str(&write_esd(&esd)).unwrap();
        value["eta"]["edge"]["0"] = serde_json::json!([1, 0]);
        let text = serde_json::to_string(&value).unwrap();
        assert!(matches!(
            read_esd(&text, &esd.host),
            Err(EsdIoError::Schema(_))
        ));
    }

    #[test]
    fn triangle_keys_must_name_pattern_triangles() {
        let esd = p4_with_terminals();
        let mut value: serde_json::Value = serde_json::from_str(&write_esd(&esd)).unwrap();
        value["eta"]["triangle"]
            .as_object_mut()
            .unwrap()
            .insert("0,1,2".into(), serde_json::json!([]));
        let text = serde_json::to_string(&value).unwrap();
        assert!(matches!(
            read_esd(&text, &esd.host),
            Err(EsdIoError::Esd(EsdError::NotATriangle(_)))
        ));
    }

    #[test]
    fn out_of_range_host_vertex_rejected() {
        let esd = p4_with_terminals();
        let text = write_esd(&esd);
        let small_host = Graph::from_edges(2, &[(0, 1)]).unwrap();
        assert!(matches!(
            read_esd(&text, &small_host),
            Err(EsdIoError::Esd(EsdError::HostVertexOutOfRange { .. }))
        ));
    }
}
