//! JSON file formats: hypergraphs (with optional role maps) and weighted
//! incidence matrices.
//!
//! A hypergraph file is an object with exactly the fields `k`, `n`, `edges`
//! and, optionally, `vertex_roles` and `edge_roles`:
//!
//! ```json
//! { "k": 3, "n": 4, "edges": [[0, 1, 2], [1, 2, 3]], "vertex_roles": { "v": 0 } }
//! ```
//!
//! A matrix file is a list of `[vertex, edge, weight]` triples.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::certify::WeightedIncidence;
use crate::error::{Error, Result};
use crate::families::LabeledHypergraph;
use crate::hypergraph::Hypergraph;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HypergraphFile {
    pub k: usize,
    pub n: usize,
    pub edges: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub vertex_roles: BTreeMap<String, usize>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub edge_roles: BTreeMap<String, usize>,
}

impl From<&LabeledHypergraph> for HypergraphFile {
    fn from(l: &LabeledHypergraph) -> Self {
        Self {
            k: l.graph.k(),
            n: l.graph.n(),
            edges: l.graph.edges().to_vec(),
            vertex_roles: l.vertex_roles.clone(),
            edge_roles: l.edge_roles.clone(),
        }
    }
}

impl From<&Hypergraph> for HypergraphFile {
    fn from(h: &Hypergraph) -> Self {
        Self {
            k: h.k(),
            n: h.n(),
            edges: h.edges().to_vec(),
            vertex_roles: BTreeMap::new(),
            edge_roles: BTreeMap::new(),
        }
    }
}

impl HypergraphFile {
    pub fn into_labeled(self) -> Result<LabeledHypergraph> {
        let graph = Hypergraph::new(self.k, self.n, self.edges)?;
        LabeledHypergraph::new(graph, self.vertex_roles, self.edge_roles)
    }
}

pub fn parse_hypergraph(text: &str) -> Result<LabeledHypergraph> {
    let file: HypergraphFile = serde_json::from_str(text)?;
    file.into_labeled()
}

/// Pretty JSON with a trailing newline; stable for a given input.
pub fn hypergraph_to_string(file: &HypergraphFile) -> String {
    let mut s = serde_json::to_string_pretty(file).expect("plain data serializes");
    s.push('\n');
    s
}

pub fn read_hypergraph(path: &Path) -> Result<LabeledHypergraph> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Format(format!("{}: {e}", path.display())))?;
    parse_hypergraph(&text)
}

pub fn write_hypergraph(path: &Path, file: &HypergraphFile) -> Result<()> {
    std::fs::write(path, hypergraph_to_string(file))
        .map_err(|e| Error::Format(format!("{}: {e}", path.display())))
}

pub fn parse_matrix(text: &str) -> Result<WeightedIncidence> {
    let triples: Vec<(usize, usize, f64)> = serde_json::from_str(text)?;
    WeightedIncidence::from_triples(triples)
}

pub fn matrix_to_string(b: &WeightedIncidence) -> String {
    let triples: Vec<(usize, usize, f64)> = b.triples().collect();
    let mut s = serde_json::to_string(&triples).expect("plain data serializes");
    s.push('\n');
    s
}
