//! JSON graph interchange.
//!
//! ```json
//! {"X": ["x1", "x2"], "Y": ["y1"], "arcs": [["x1", "y1"], ["y1", "x2"]]}
//! ```
//!
//! Vertex ids may be strings or non-negative integers; integers are read as
//! their decimal spelling. Every arc joins an `X` vertex and a `Y` vertex, in
//! either direction.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use oddeven_core::{EmbeddingCheck, EmbeddingResult, Sdbg};
use serde::{Deserialize, Serialize};

use crate::Error;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum VertexId {
    Number(u64),
    Name(String),
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexId::Number(n) => write!(f, "{n}"),
            VertexId::Name(s) => f.write_str(s),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDocument {
    #[serde(rename = "X")]
    pub x: Vec<VertexId>,
    #[serde(rename = "Y")]
    pub y: Vec<VertexId>,
    #[serde(default)]
    pub arcs: Vec<[VertexId; 2]>,
}

impl GraphDocument {
    pub fn from_graph(graph: &Sdbg) -> Self {
        let name = |v: usize| VertexId::Name(graph.name(v).to_string());
        GraphDocument {
            x: graph.x_names().iter().cloned().map(VertexId::Name).collect(),
            y: graph.y_names().iter().cloned().map(VertexId::Name).collect(),
            arcs: graph.arcs().into_iter().map(|(u, v)| [name(u), name(v)]).collect(),
        }
    }

    pub fn to_graph(&self) -> Result<Sdbg, Error> {
        let names = |ids: &[VertexId]| ids.iter().map(ToString::to_string).collect::<Vec<_>>();
        let arcs: Vec<(String, String)> = self
            .arcs
            .iter()
            .map(|[u, v]| (u.to_string(), v.to_string()))
            .collect();
        Ok(Sdbg::new(&names(&self.x), &names(&self.y), &arcs)?)
    }
}

pub fn parse_graph(text: &str) -> Result<Sdbg, Error> {
    let doc: GraphDocument =
        serde_json::from_str(text).map_err(|e| Error::Input(format!("graph document: {e}")))?;
    doc.to_graph()
}

pub fn graph_to_json(graph: &Sdbg) -> String {
    serde_json::to_string_pretty(&GraphDocument::from_graph(graph)).expect("plain data serializes")
}

#[derive(Debug, Clone, Serialize)]
pub struct MapEntry {
    pub vertex: String,
    pub b: u32,
    /// `f(vertex)` in decimal.
    pub value: String,
}

/// Source graph, vertex map and odd set of an embedding, big integers as
/// decimal strings.
#[derive(Debug, Clone, Serialize)]
pub struct EmbeddingDocument {
    #[serde(flatten)]
    pub graph: GraphDocument,
    pub map: Vec<MapEntry>,
    pub odd_set: Vec<String>,
    pub orientation_preserved: bool,
    pub check: EmbeddingCheck,
}

impl EmbeddingDocument {
    pub fn new(graph: &Sdbg, result: &EmbeddingResult, check: EmbeddingCheck) -> Self {
        let map = (0..graph.vertex_count())
            .map(|v| MapEntry {
                vertex: graph.name(v).to_string(),
                b: result.b_index[v],
                value: result.images[v].to_string(),
            })
            .collect();
        EmbeddingDocument {
            graph: GraphDocument::from_graph(graph),
            map,
            odd_set: result.odd_set.iter().map(BigUint::to_string).collect(),
            orientation_preserved: result.orientation_preserved,
            check,
        }
    }

    /// `f` as a name-to-value lookup.
    pub fn lookup(&self) -> BTreeMap<&str, &str> {
        self.map.iter().map(|e| (e.vertex.as_str(), e.value.as_str())).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let text = r#"{"X": ["x1", 2], "Y": ["y1"], "arcs": [["x1", "y1"], ["y1", 2]]}"#;
        let g = parse_graph(text).unwrap();
        assert_eq!(g.x_names(), &["x1".to_string(), "2".to_string()]);
        assert_eq!(g.arc_count(), 2);
        let again = parse_graph(&graph_to_json(&g)).unwrap();
        assert_eq!(again, g);
    }

    #[test]
    fn rejects_bad_documents() {
        assert!(matches!(parse_graph("{"), Err(Error::Input(_))));
        assert!(parse_graph(r#"{"X": ["a"], "Y": ["b"], "arcs": [["a", "a"]]}"#).is_err());
        assert!(parse_graph(r#"{"X": ["a"], "Y": ["b"], "edges": []}"#).is_err());
    }
}
