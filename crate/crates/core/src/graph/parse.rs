use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{Edge, LatticeVector, PeriodicGraphSpec};
use crate::error::{Error, Result};

/// On-disk JSON layout of a graph file. Vertex ids are 1-based.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDocument {
    pub dimension: usize,
    pub vertices: Vec<VertexDocument>,
    pub edges: Vec<EdgeDocument>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VertexDocument {
    pub id: usize,
    pub potential: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeDocument {
    pub u: usize,
    pub v: usize,
    pub index: LatticeVector,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct PotentialOverride {
    potential: BTreeMap<String, f64>,
}

/// Parses a graph document.
pub fn parse_graph(source: &str) -> Result<PeriodicGraphSpec> {
    let doc: GraphDocument =
        serde_json::from_str(source).map_err(|e| Error::Malformed(e.to_string()))?;
    doc.into_spec()
}

/// Applies a potential override document `{"potential": {"1": 1.0, ...}}`.
/// Vertices not mentioned keep their potential.
pub fn parse_potential_override(
    spec: &PeriodicGraphSpec,
    source: &str,
) -> Result<PeriodicGraphSpec> {
    let doc: PotentialOverride =
        serde_json::from_str(source).map_err(|e| Error::Malformed(e.to_string()))?;
    let mut potential = spec.potential().to_vec();
    for (key, value) in doc.potential {
        let id: usize = key
            .trim()
            .parse()
            .map_err(|_| Error::Malformed(format!("vertex key {key:?} is not an integer")))?;
        if id == 0 || id > potential.len() {
            return Err(Error::Malformed(format!("override for unknown vertex {id}")));
        }
        potential[id - 1] = value;
    }
    spec.with_potential(potential)
}

impl GraphDocument {
    pub fn into_spec(self) -> Result<PeriodicGraphSpec> {
        let nu = self.vertices.len();
        let mut potential = vec![None; nu];
        for vertex in &self.vertices {
            if vertex.id == 0 || vertex.id > nu {
                return Err(Error::Malformed(format!(
                    "vertex id {} outside 1..={nu}; ids must be contiguous",
                    vertex.id
                )));
            }
            if potential[vertex.id - 1].replace(vertex.potential).is_some() {
                return Err(Error::DuplicateVertex(vertex.id));
            }
        }
        // Every slot is filled: nu distinct ids within 1..=nu.
        let potential = potential.into_iter().map(Option::unwrap).collect();

        let mut edges = Vec::with_capacity(self.edges.len());
        for (id, e) in self.edges.into_iter().enumerate() {
            for w in [e.u, e.v] {
                if w == 0 || w > nu {
                    return Err(Error::UnknownVertex { edge: id, vertex: w });
                }
            }
            edges.push(Edge::new(e.u - 1, e.v - 1, e.index));
        }
        PeriodicGraphSpec::new(self.dimension, potential, edges)
    }

    pub fn from_spec(spec: &PeriodicGraphSpec) -> Self {
        GraphDocument {
            dimension: spec.dimension(),
            vertices: spec
                .potential()
                .iter()
                .enumerate()
                .map(|(i, &q)| VertexDocument {
                    id: i + 1,
                    potential: q,
                })
                .collect(),
            edges: spec
                .edges()
                .iter()
                .map(|e| EdgeDocument {
                    u: e.u + 1,
                    v: e.v + 1,
                    index: e.index.clone(),
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("graph documents always serialize")
    }
}
