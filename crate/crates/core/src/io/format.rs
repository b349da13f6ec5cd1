//! Labeling documents: JSON (read and write), DOT and CSV (write only).
//!
//! Output is deterministic: vertices in topology order, edges in topology
//! order with endpoints lower id first.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{build_union_graph, Edge, GraphError, GraphTopology, Label, Labeling, VertexId};
use crate::verify::{edge_labels, VerifyError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Dot,
    Csv,
}

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("malformed JSON at line {line}, column {column}: {message}")]
    Json {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("vertices[{index}]: {source}")]
    Vertex { index: usize, source: GraphError },
    #[error("edges[{index}]: {source}")]
    Edge { index: usize, source: GraphError },
    #[error("{0}")]
    Topology(#[from] GraphError),
    #[error("document declares q = {declared} but lists {actual} edges")]
    EdgeCount { declared: usize, actual: usize },
    #[error("edges do not form C_{m} ∪ P_{n}")]
    NotUnion { m: usize, n: usize },
    #[error("edges[{index}] ({edge}) states label {stated}, endpoint labels give {actual}")]
    EdgeLabelMismatch {
        index: usize,
        edge: Edge,
        stated: Label,
        actual: Label,
    },
    #[error(transparent)]
    Verify(#[from] VerifyError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphInfo {
    pub m: usize,
    pub n: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexEntry {
    pub id: String,
    pub label: Label,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeEntry {
    pub from: String,
    pub to: String,
    pub label: Label,
}

/// The JSON labeling document. `graph` is `{m: 0, n: 0}` for graphs that
/// are not a cycle-path union.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LabelingDocument {
    pub graph: GraphInfo,
    pub q: usize,
    pub vertices: Vec<VertexEntry>,
    pub edges: Vec<EdgeEntry>,
}

impl LabelingDocument {
    pub fn new(topology: &GraphTopology, labeling: &Labeling) -> Result<Self, VerifyError> {
        let f = labeling
            .aligned(topology)
            .map_err(VerifyError::MissingVertexLabel)?;
        let edges = edge_labels(topology, labeling)?;
        Ok(LabelingDocument {
            graph: GraphInfo {
                m: topology.m(),
                n: topology.n(),
            },
            q: topology.q(),
            vertices: topology
                .vertices()
                .iter()
                .zip(f)
                .map(|(v, label)| VertexEntry {
                    id: v.to_string(),
                    label,
                })
                .collect(),
            edges: edges
                .labels
                .iter()
                .map(|(e, label)| {
                    let (a, b) = e.endpoints();
                    EdgeEntry {
                        from: a.to_string(),
                        to: b.to_string(),
                        label: *label,
                    }
                })
                .collect(),
        })
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("document serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self, DocumentError> {
        serde_json::from_str(text).map_err(|e| DocumentError::Json {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })
    }

    /// Rebuilds the topology and labeling. Stated edge labels must match
    /// the endpoint labels; for a union graph the edges must be exactly
    /// those of `C_m ∪ P_n`.
    pub fn to_graph(&self) -> Result<(GraphTopology, Labeling), DocumentError> {
        let mut ids = Vec::with_capacity(self.vertices.len());
        let mut pairs = Vec::with_capacity(self.vertices.len());
        for (index, v) in self.vertices.iter().enumerate() {
            let id: VertexId =
                v.id.parse()
                    .map_err(|source| DocumentError::Vertex { index, source })?;
            ids.push(id);
            pairs.push((id, v.label));
        }
        let mut edges = Vec::with_capacity(self.edges.len());
        for (index, e) in self.edges.iter().enumerate() {
            let edge = e
                .from
                .parse()
                .and_then(|a| e.to.parse().and_then(|b| Edge::new(a, b)))
                .map_err(|source| DocumentError::Edge { index, source })?;
            edges.push(edge);
        }
        if self.q != edges.len() {
            return Err(DocumentError::EdgeCount {
                declared: self.q,
                actual: edges.len(),
            });
        }
        let GraphInfo { m, n } = self.graph;
        let topology = GraphTopology::new(ids, edges, m, n)?;
        if m > 0 || n > 0 {
            let expected = build_union_graph(m, n).map_err(|_| DocumentError::NotUnion { m, n })?;
            let mut got: Vec<Edge> = topology.edges().to_vec();
            let mut want: Vec<Edge> = expected.edges().to_vec();
            got.sort_unstable();
            want.sort_unstable();
            if got != want || topology.vertices() != expected.vertices() {
                return Err(DocumentError::NotUnion { m, n });
            }
        }
        let labeling = Labeling::from_pairs(pairs)?;
        let actual = edge_labels(&topology, &labeling)?;
        for (index, (entry, &(edge, label))) in self.edges.iter().zip(&actual.labels).enumerate() {
            if entry.label != label {
                return Err(DocumentError::EdgeLabelMismatch {
                    index,
                    edge,
                    stated: entry.label,
                    actual: label,
                });
            }
        }
        Ok((topology, labeling))
    }
}

/// Undirected DOT graph; nodes display `id:label`, edges their label.
pub fn to_dot(topology: &GraphTopology, labeling: &Labeling) -> Result<String, VerifyError> {
    let doc = LabelingDocument::new(topology, labeling)?;
    let mut out = String::new();
    let name = if topology.is_union() {
        format!("C{}_P{}", topology.m(), topology.n())
    } else {
        "G".to_string()
    };
    writeln!(out, "graph {name} {{").unwrap();
    for v in &doc.vertices {
        writeln!(out, "  {} [label=\"{}:{}\"];", v.id, v.id, v.label).unwrap();
    }
    for e in &doc.edges {
        writeln!(out, "  {} -- {} [label=\"{}\"];", e.from, e.to, e.label).unwrap();
    }
    out.push_str("}\n");
    Ok(out)
}

/// A `vertex,label` section followed by an `edge,from,to,label` section.
pub fn to_csv(topology: &GraphTopology, labeling: &Labeling) -> Result<String, VerifyError> {
    let doc = LabelingDocument::new(topology, labeling)?;
    let mut out = String::from("vertex,label\n");
    for v in &doc.vertices {
        writeln!(out, "{},{}", v.id, v.label).unwrap();
    }
    out.push_str("edge,from,to,label\n");
    for (i, e) in doc.edges.iter().enumerate() {
        writeln!(
            out,
            "{},{},{},{}",
            topology.edge_name(i),
            e.from,
            e.to,
            e.label
        )
        .unwrap();
    }
    Ok(out)
}

pub fn render(
    format: Format,
    topology: &GraphTopology,
    labeling: &Labeling,
) -> Result<String, VerifyError> {
    match format {
        Format::Json => Ok(LabelingDocument::new(topology, labeling)?.to_json()),
        Format::Dot => to_dot(topology, labeling),
        Format::Csv => to_csv(topology, labeling),
    }
}
