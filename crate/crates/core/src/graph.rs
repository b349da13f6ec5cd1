//! Graph topologies and vertex labelings.
//!
//! The union `C_m ∪ P_n` names its cycle vertices `u_1 … u_m` and its path
//! vertices `v_1 … v_n`. Arbitrary small graphs handed to the search oracle
//! use free vertices `w_1 …`. All indices are 1-based.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// A vertex label. Odd graceful labels live in `[0, 2q - 1]`.
pub type Label = u64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("odd cycle C_{0}: every graph with an odd cycle is not odd graceful")]
    OddCycle(usize),
    #[error("cycle C_{0} is too small, need m >= 4")]
    CycleTooSmall(usize),
    #[error("path P_{0} is empty, need n >= 1")]
    EmptyPath(usize),
    #[error("self-loop on vertex {0}")]
    SelfLoop(VertexId),
    #[error("vertex index must be positive")]
    ZeroIndex,
    #[error("edge list is empty")]
    NoEdges,
    #[error("duplicate vertex {0}")]
    DuplicateVertex(VertexId),
    #[error("duplicate edge {0} -- {1}")]
    DuplicateEdge(VertexId, VertexId),
    #[error("edge endpoint {0} is not a vertex of the graph")]
    UnknownVertex(VertexId),
    #[error("invalid vertex id {0:?}")]
    BadVertexId(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VertexKind {
    /// `u_i`, a vertex of the cycle.
    Cycle,
    /// `v_i`, a vertex of the path.
    Path,
    /// `w_i`, a vertex of an arbitrary graph.
    Free,
}

impl VertexKind {
    fn prefix(self) -> char {
        match self {
            VertexKind::Cycle => 'u',
            VertexKind::Path => 'v',
            VertexKind::Free => 'w',
        }
    }
}

/// A vertex name: kind plus 1-based index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId {
    pub kind: VertexKind,
    pub index: u32,
}

impl VertexId {
    pub const fn cycle(index: u32) -> Self {
        VertexId {
            kind: VertexKind::Cycle,
            index,
        }
    }

    pub const fn path(index: u32) -> Self {
        VertexId {
            kind: VertexKind::Path,
            index,
        }
    }

    pub const fn free(index: u32) -> Self {
        VertexId {
            kind: VertexKind::Free,
            index,
        }
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.kind.prefix(), self.index)
    }
}

impl FromStr for VertexId {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || GraphError::BadVertexId(s.to_string());
        let mut chars = s.chars();
        let kind = match chars.next() {
            Some('u') => VertexKind::Cycle,
            Some('v') => VertexKind::Path,
            Some('w') => VertexKind::Free,
            _ => return Err(bad()),
        };
        let digits = chars.as_str();
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let index: u32 = digits.parse().map_err(|_| bad())?;
        if index == 0 {
            return Err(bad());
        }
        Ok(VertexId { kind, index })
    }
}

/// An undirected edge, endpoints stored lower id first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    a: VertexId,
    b: VertexId,
}

impl Edge {
    /// Canonicalizes endpoint order. Rejects self-loops.
    pub fn new(x: VertexId, y: VertexId) -> Result<Self, GraphError> {
        match x.cmp(&y) {
            Ordering::Less => Ok(Edge { a: x, b: y }),
            Ordering::Greater => Ok(Edge { a: y, b: x }),
            Ordering::Equal => Err(GraphError::SelfLoop(x)),
        }
    }

    pub fn endpoints(&self) -> (VertexId, VertexId) {
        (self.a, self.b)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.a, self.b)
    }
}

/// Vertex and edge structure of a graph.
///
/// Vertices are kept sorted, so `u_1 … u_m` precede `v_1 … v_n`. Edges keep
/// their construction order; for a union graph that is `e_1 … e_m` (with
/// `e_i = u_i u_{i+1}` and `e_m = u_m u_1`) followed by `e'_1 … e'_{n-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphTopology {
    vertices: Vec<VertexId>,
    edges: Vec<Edge>,
    /// Endpoint positions into `vertices`, parallel to `edges`.
    edge_positions: Vec<(usize, usize)>,
    m: usize,
    n: usize,
}

impl GraphTopology {
    /// General constructor. Vertices may be given in any order; edges keep
    /// the given order and must be distinct and loop-free.
    pub fn new(
        mut vertices: Vec<VertexId>,
        edges: Vec<Edge>,
        m: usize,
        n: usize,
    ) -> Result<Self, GraphError> {
        if vertices.iter().any(|v| v.index == 0) {
            return Err(GraphError::ZeroIndex);
        }
        vertices.sort_unstable();
        if let Some(w) = vertices.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateVertex(w[0]));
        }
        let mut seen = std::collections::HashSet::with_capacity(edges.len());
        let mut edge_positions = Vec::with_capacity(edges.len());
        for e in &edges {
            if !seen.insert(*e) {
                return Err(GraphError::DuplicateEdge(e.a, e.b));
            }
            let pa = vertices
                .binary_search(&e.a)
                .map_err(|_| GraphError::UnknownVertex(e.a))?;
            let pb = vertices
                .binary_search(&e.b)
                .map_err(|_| GraphError::UnknownVertex(e.b))?;
            edge_positions.push((pa, pb));
        }
        Ok(GraphTopology {
            vertices,
            edges,
            edge_positions,
            m,
            n,
        })
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Endpoint positions (indices into [`vertices`](Self::vertices)) per edge.
    pub fn edge_positions(&self) -> &[(usize, usize)] {
        &self.edge_positions
    }

    /// Cycle length, or 0 for graphs that are not a cycle-path union.
    pub fn m(&self) -> usize {
        self.m
    }

    /// Path length, or 0 for graphs that are not a cycle-path union.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn q(&self) -> usize {
        self.edges.len()
    }

    pub fn is_union(&self) -> bool {
        self.m > 0
    }

    pub fn position(&self, id: VertexId) -> Option<usize> {
        self.vertices.binary_search(&id).ok()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertices.len()];
        for &(a, b) in &self.edge_positions {
            deg[a] += 1;
            deg[b] += 1;
        }
        deg
    }

    /// Adjacency lists over vertex positions.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertices.len()];
        for &(a, b) in &self.edge_positions {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }

    /// Conventional name of the edge at `pos`: `e1 … em` on the cycle and
    /// `e'1 … e'(n-1)` on the path of a union graph, `e1 …` otherwise.
    pub fn edge_name(&self, pos: usize) -> String {
        if self.m > 0 && pos >= self.m {
            format!("e'{}", pos - self.m + 1)
        } else {
            format!("e{}", pos + 1)
        }
    }
}

/// Builds `C_m ∪ P_n`.
pub fn build_union_graph(m: usize, n: usize) -> Result<GraphTopology, GraphError> {
    if m % 2 == 1 {
        return Err(GraphError::OddCycle(m));
    }
    if m < 4 {
        return Err(GraphError::CycleTooSmall(m));
    }
    if n < 1 {
        return Err(GraphError::EmptyPath(n));
    }
    let cycle = |i: usize| VertexId::cycle(i as u32);
    let path = |i: usize| VertexId::path(i as u32);

    let mut vertices = Vec::with_capacity(m + n);
    vertices.extend((1..=m).map(cycle));
    vertices.extend((1..=n).map(path));

    let q = m + n - 1;
    let mut edges = Vec::with_capacity(q);
    let mut edge_positions = Vec::with_capacity(q);
    for i in 1..=m {
        let j = if i == m { 1 } else { i + 1 };
        edges.push(Edge::new(cycle(i), cycle(j))?);
        edge_positions.push(((i - 1).min(j - 1), (i - 1).max(j - 1)));
    }
    for j in 1..n {
        edges.push(Edge::new(path(j), path(j + 1))?);
        edge_positions.push((m + j - 1, m + j));
    }
    Ok(GraphTopology {
        vertices,
        edges,
        edge_positions,
        m,
        n,
    })
}

/// Builds a graph over free vertices `w_i` from 1-based index pairs.
/// Repeated edges (in either orientation) are kept once.
pub fn build_free_graph(edge_list: &[(u32, u32)]) -> Result<GraphTopology, GraphError> {
    if edge_list.is_empty() {
        return Err(GraphError::NoEdges);
    }
    let mut seen = std::collections::HashSet::new();
    let mut edges = Vec::new();
    let mut vertices = std::collections::BTreeSet::new();
    for &(x, y) in edge_list {
        if x == 0 || y == 0 {
            return Err(GraphError::ZeroIndex);
        }
        let e = Edge::new(VertexId::free(x), VertexId::free(y))?;
        if seen.insert(e) {
            edges.push(e);
            vertices.insert(e.a);
            vertices.insert(e.b);
        }
    }
    GraphTopology::new(vertices.into_iter().collect(), edges, 0, 0)
}

/// A vertex → label assignment, sorted by vertex id.
///
/// Injectivity is not enforced here: invalid candidates must stay
/// representable so the verifier can report on them.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Labeling {
    entries: Vec<(VertexId, Label)>,
}

impl Labeling {
    /// Fails on a vertex assigned twice.
    pub fn from_pairs(mut entries: Vec<(VertexId, Label)>) -> Result<Self, GraphError> {
        if !entries.windows(2).all(|w| w[0].0 < w[1].0) {
            entries.sort_by_key(|e| e.0);
            if let Some(w) = entries.windows(2).find(|w| w[0].0 == w[1].0) {
                return Err(GraphError::DuplicateVertex(w[0].0));
            }
        }
        Ok(Labeling { entries })
    }

    /// Labels `u_1 … u_len` with `labels` in order.
    pub fn from_cycle_labels(labels: impl IntoIterator<Item = Label>) -> Self {
        Self::from_indexed(VertexId::cycle, labels)
    }

    /// Labels `v_1 … v_len` with `labels` in order.
    pub fn from_path_labels(labels: impl IntoIterator<Item = Label>) -> Self {
        Self::from_indexed(VertexId::path, labels)
    }

    fn from_indexed(id: fn(u32) -> VertexId, labels: impl IntoIterator<Item = Label>) -> Self {
        let entries = labels
            .into_iter()
            .enumerate()
            .map(|(i, l)| (id(i as u32 + 1), l))
            .collect();
        Labeling { entries }
    }

    /// Union of two labelings over disjoint vertex sets.
    pub fn merge(self, other: Labeling) -> Result<Self, GraphError> {
        let mut entries = self.entries;
        entries.extend(other.entries);
        Self::from_pairs(entries)
    }

    pub fn get(&self, id: VertexId) -> Option<Label> {
        self.entries
            .binary_search_by_key(&id, |e| e.0)
            .ok()
            .map(|i| self.entries[i].1)
    }

    pub fn iter(&self) -> impl Iterator<Item = (VertexId, Label)> + '_ {
        self.entries.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Labels of the vertices of `kind`, in index order.
    pub fn labels_of(&self, kind: VertexKind) -> Vec<Label> {
        self.entries
            .iter()
            .filter(|e| e.0.kind == kind)
            .map(|e| e.1)
            .collect()
    }

    /// Labels aligned with `topology.vertices()`, or the first vertex lacking one.
    pub fn aligned(&self, topology: &GraphTopology) -> Result<Vec<Label>, VertexId> {
        let mut out = Vec::with_capacity(topology.vertices().len());
        let mut it = self.entries.iter().peekable();
        for &v in topology.vertices() {
            while it.peek().is_some_and(|e| e.0 < v) {
                it.next();
            }
            match it.peek() {
                Some(e) if e.0 == v => out.push(e.1),
                _ => return Err(v),
            }
        }
        Ok(out)
    }

    /// Applies `f` to every label.
    pub fn map_labels(&self, mut f: impl FnMut(Label) -> Label) -> Self {
        Labeling {
            entries: self.entries.iter().map(|&(v, l)| (v, f(l))).collect(),
        }
    }
}

/// Induced edge labels, in topology edge order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeLabelMap {
    pub labels: Vec<(Edge, Label)>,
}

impl EdgeLabelMap {
    pub fn values(&self) -> Vec<Label> {
        self.labels.iter().map(|e| e.1).collect()
    }
}
