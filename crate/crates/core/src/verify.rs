//! Odd graceful certificate checking for arbitrary topologies.
//!
//! A labeling of a graph with `q` edges is odd graceful when its vertex
//! labels are distinct values in `[0, 2q - 1]` and the induced edge labels
//! `|f(u) - f(v)|` are exactly `{1, 3, …, 2q - 1}`, each used once.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Edge, EdgeLabelMap, GraphTopology, Label, Labeling, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("vertex {0} has no label")]
    MissingVertexLabel(VertexId),
}

/// One failed condition, with the vertices or edges involved.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind")]
pub enum Violation {
    VertexLabelOutOfRange {
        #[serde(serialize_with = "ser_display")]
        vertex: VertexId,
        label: Label,
        max: Label,
    },
    DuplicateVertexLabel {
        label: Label,
        #[serde(serialize_with = "ser_display_vec")]
        vertices: Vec<VertexId>,
    },
    EdgeLabelEven {
        #[serde(serialize_with = "ser_display")]
        edge: Edge,
        label: Label,
    },
    DuplicateEdgeLabel {
        label: Label,
        #[serde(serialize_with = "ser_display_vec")]
        edges: Vec<Edge>,
    },
    /// Odd values in `1..=2q-1` that no edge carries.
    EdgeLabelSetIncomplete { missing: Vec<Label> },
}

impl Violation {
    pub fn kind(&self) -> &'static str {
        match self {
            Violation::VertexLabelOutOfRange { .. } => "VertexLabelOutOfRange",
            Violation::DuplicateVertexLabel { .. } => "DuplicateVertexLabel",
            Violation::EdgeLabelEven { .. } => "EdgeLabelEven",
            Violation::DuplicateEdgeLabel { .. } => "DuplicateEdgeLabel",
            Violation::EdgeLabelSetIncomplete { .. } => "EdgeLabelSetIncomplete",
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::VertexLabelOutOfRange { vertex, label, max } => {
                write!(f, "VertexLabelOutOfRange: {vertex} = {label} exceeds {max}")
            }
            Violation::DuplicateVertexLabel { label, vertices } => {
                write!(f, "DuplicateVertexLabel: {label} on {}", join(vertices))
            }
            Violation::EdgeLabelEven { edge, label } => {
                write!(f, "EdgeLabelEven: {edge} = {label}")
            }
            Violation::DuplicateEdgeLabel { label, edges } => {
                write!(f, "DuplicateEdgeLabel: {label} on {}", join(edges))
            }
            Violation::EdgeLabelSetIncomplete { missing } => {
                let missing: Vec<String> = missing.iter().map(|l| l.to_string()).collect();
                write!(f, "EdgeLabelSetIncomplete: missing {}", missing.join(", "))
            }
        }
    }
}

fn join<T: fmt::Display>(items: &[T]) -> String {
    items
        .iter()
        .map(|i| i.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

fn ser_display<T: fmt::Display, S: serde::Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}

fn ser_display_vec<T: fmt::Display, S: serde::Serializer>(
    v: &[T],
    s: S,
) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|x| x.to_string()))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub is_odd_graceful: bool,
    pub violations: Vec<Violation>,
}

impl VerificationReport {
    pub fn has(&self, kind: &str) -> bool {
        self.violations.iter().any(|v| v.kind() == kind)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_odd_graceful {
            return writeln!(f, "odd graceful: yes");
        }
        writeln!(f, "odd graceful: no ({} violations)", self.violations.len())?;
        for v in &self.violations {
            writeln!(f, "  {v}")?;
        }
        Ok(())
    }
}

pub fn edge_labels(
    topology: &GraphTopology,
    labeling: &Labeling,
) -> Result<EdgeLabelMap, VerifyError> {
    let f = labeling
        .aligned(topology)
        .map_err(VerifyError::MissingVertexLabel)?;
    Ok(EdgeLabelMap {
        labels: induced(topology, &f),
    })
}

fn induced(topology: &GraphTopology, f: &[Label]) -> Vec<(Edge, Label)> {
    topology
        .edges()
        .iter()
        .zip(topology.edge_positions())
        .map(|(&e, &(a, b))| (e, f[a].abs_diff(f[b])))
        .collect()
}

/// Checks range, then injectivity, then the edge label set. Every violation
/// is reported, in vertex order and then edge order.
pub fn verify_odd_graceful(
    topology: &GraphTopology,
    labeling: &Labeling,
) -> Result<VerificationReport, VerifyError> {
    let f = labeling
        .aligned(topology)
        .map_err(VerifyError::MissingVertexLabel)?;
    let q = topology.q() as Label;
    let max = (2 * q).saturating_sub(1);
    let vertices = topology.vertices();
    let mut violations = Vec::new();

    for (&v, &l) in vertices.iter().zip(&f) {
        if l > max {
            violations.push(Violation::VertexLabelOutOfRange {
                vertex: v,
                label: l,
                max,
            });
        }
    }

    let mut by_label: BTreeMap<Label, Vec<VertexId>> = BTreeMap::new();
    for (&v, &l) in vertices.iter().zip(&f) {
        by_label.entry(l).or_default().push(v);
    }
    let mut dup_vertices: Vec<_> = by_label
        .into_iter()
        .filter(|(_, vs)| vs.len() > 1)
        .collect();
    dup_vertices.sort_by_key(|(_, vs)| vs[0]);
    for (label, vertices) in dup_vertices {
        violations.push(Violation::DuplicateVertexLabel { label, vertices });
    }

    let edges = induced(topology, &f);
    for &(edge, label) in &edges {
        if label % 2 == 0 {
            violations.push(Violation::EdgeLabelEven { edge, label });
        }
    }

    // label -> (first edge position, edges carrying it)
    let mut by_edge_label: BTreeMap<Label, (usize, Vec<Edge>)> = BTreeMap::new();
    for (i, &(edge, label)) in edges.iter().enumerate() {
        if label % 2 == 1 {
            by_edge_label
                .entry(label)
                .or_insert_with(|| (i, Vec::new()))
                .1
                .push(edge);
        }
    }
    let mut dup_edges: Vec<_> = by_edge_label
        .iter()
        .filter(|(_, (_, es))| es.len() > 1)
        .map(|(&l, (first, es))| (*first, l, es.clone()))
        .collect();
    dup_edges.sort_by_key(|d| d.0);
    for (_, label, edges) in dup_edges {
        violations.push(Violation::DuplicateEdgeLabel { label, edges });
    }

    let missing: Vec<Label> = (1..=max)
        .step_by(2)
        .filter(|l| !by_edge_label.contains_key(l))
        .collect();
    if !missing.is_empty() {
        violations.push(Violation::EdgeLabelSetIncomplete { missing });
    }

    Ok(VerificationReport {
        is_odd_graceful: violations.is_empty(),
        violations,
    })
}

/// `f'(v) = 2q - 1 - f(v)`. Preserves every edge label.
pub fn complement(topology: &GraphTopology, labeling: &Labeling) -> Labeling {
    let top = (2 * topology.q() as Label).saturating_sub(1);
    labeling.map_labels(|l| top.saturating_sub(l))
}
