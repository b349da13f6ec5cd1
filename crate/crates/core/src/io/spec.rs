//! Textual graph specs such as `C8+P12` or `C4+@extra.edges`.
//!
//! ```text
//! spec := term ("+" term)*
//! term := "C" integer | "P" integer | "@" filepath
//! ```
//!
//! Whitespace around terms is ignored. Edge-list files hold one `a b` (or
//! `a,b`) pair of positive integers per line; `#` starts a comment.

use std::path::{Path, PathBuf};

use thiserror::Error;

use crate::graph::{build_union_graph, Edge, GraphError, GraphTopology, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpecError {
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("integer at byte {offset} is too large")]
    Overflow { offset: usize },
    #[error("{0}")]
    Unsupported(String),
    #[error("{path}:{line}: {message}")]
    EdgeFile {
        path: String,
        line: usize,
        message: String,
    },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Term {
    Cycle(usize),
    Path(usize),
    EdgeFile(PathBuf),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphSpec {
    pub terms: Vec<Term>,
}

pub fn parse_graph_spec(text: &str) -> Result<GraphSpec, SpecError> {
    let bytes = text.as_bytes();
    let mut pos = 0;
    let mut terms = Vec::new();
    loop {
        pos = skip_ws(bytes, pos);
        let Some(&head) = bytes.get(pos) else {
            return Err(syntax(pos, "expected a term (C<m>, P<n> or @file)"));
        };
        match head {
            b'C' | b'P' => {
                let (value, next) = parse_int(bytes, pos + 1)?;
                terms.push(if head == b'C' {
                    Term::Cycle(value)
                } else {
                    Term::Path(value)
                });
                pos = next;
            }
            b'@' => {
                let start = pos + 1;
                let end = text[start..].find('+').map_or(text.len(), |i| start + i);
                let path = text[start..end].trim();
                if path.is_empty() {
                    return Err(syntax(start, "expected a file path after '@'"));
                }
                terms.push(Term::EdgeFile(PathBuf::from(path)));
                pos = end;
            }
            _ => return Err(syntax(pos, "expected 'C', 'P' or '@'")),
        }
        pos = skip_ws(bytes, pos);
        match bytes.get(pos) {
            None => break,
            Some(b'+') => pos += 1,
            Some(_) => return Err(syntax(pos, "expected '+' or end of input")),
        }
    }
    Ok(GraphSpec { terms })
}

fn skip_ws(bytes: &[u8], mut pos: usize) -> usize {
    while bytes.get(pos).is_some_and(u8::is_ascii_whitespace) {
        pos += 1;
    }
    pos
}

fn parse_int(bytes: &[u8], start: usize) -> Result<(usize, usize), SpecError> {
    let mut end = start;
    while bytes.get(end).is_some_and(u8::is_ascii_digit) {
        end += 1;
    }
    if end == start {
        return Err(syntax(start, "expected an integer"));
    }
    let digits = std::str::from_utf8(&bytes[start..end]).expect("ascii digits");
    let value: usize = digits
        .parse()
        .ok()
        .filter(|&v| v <= u32::MAX as usize)
        .ok_or(SpecError::Overflow { offset: start })?;
    if value == 0 {
        return Err(syntax(start, "integers must be >= 1"));
    }
    Ok((value, end))
}

fn syntax(offset: usize, message: &str) -> SpecError {
    SpecError::Syntax {
        offset,
        message: message.to_string(),
    }
}

impl GraphSpec {
    /// The `(m, n)` of a `C<m>+P<n>` spec, in either order.
    pub fn as_union(&self) -> Result<(usize, usize), SpecError> {
        match self.terms.as_slice() {
            [Term::Cycle(m), Term::Path(n)] | [Term::Path(n), Term::Cycle(m)] => Ok((*m, *n)),
            _ => Err(SpecError::Unsupported(
                "expected exactly one cycle and one path, e.g. C8+P12".to_string(),
            )),
        }
    }

    /// Topology for searching. A single even cycle plus a path keeps the
    /// `u`/`v` naming; anything else becomes a free graph `w_1 …` with the
    /// terms laid out one after another.
    pub fn to_topology(&self) -> Result<GraphTopology, SpecError> {
        if let Ok((m, n)) = self.as_union() {
            if let Ok(g) = build_union_graph(m, n) {
                return Ok(g);
            }
        }
        // Vertices of each term are numbered after those of the previous one.
        let mut base: u32 = 0;
        let mut vertices = Vec::new();
        let mut edges = Vec::new();
        let w = VertexId::free;
        for term in &self.terms {
            match term {
                Term::Cycle(m) => {
                    if *m < 3 {
                        return Err(SpecError::Unsupported(format!(
                            "C{m} is not a simple cycle, need at least 3 vertices"
                        )));
                    }
                    let m = *m as u32;
                    vertices.extend((1..=m).map(|i| w(base + i)));
                    for i in 1..=m {
                        let j = if i == m { 1 } else { i + 1 };
                        edges.push(Edge::new(w(base + i), w(base + j))?);
                    }
                    base += m;
                }
                Term::Path(n) => {
                    let n = *n as u32;
                    vertices.extend((1..=n).map(|i| w(base + i)));
                    for i in 1..n {
                        edges.push(Edge::new(w(base + i), w(base + i + 1))?);
                    }
                    base += n;
                }
                Term::EdgeFile(path) => {
                    let pairs = read_edge_file(path)?;
                    let mut present = std::collections::BTreeSet::new();
                    let mut seen = std::collections::HashSet::new();
                    for &(a, b) in &pairs {
                        let e = Edge::new(w(base + a), w(base + b))?;
                        if seen.insert(e) {
                            edges.push(e);
                        }
                        present.insert(a);
                        present.insert(b);
                    }
                    let max = present.last().copied().unwrap_or(0);
                    vertices.extend(present.into_iter().map(|i| w(base + i)));
                    base += max;
                }
            }
        }
        if edges.is_empty() {
            return Err(GraphError::NoEdges.into());
        }
        Ok(GraphTopology::new(vertices, edges, 0, 0)?)
    }
}

/// Reads an edge-list file of 1-based index pairs.
pub fn read_edge_file(path: &Path) -> Result<Vec<(u32, u32)>, SpecError> {
    let text = std::fs::read_to_string(path).map_err(|e| SpecError::EdgeFile {
        path: path.display().to_string(),
        line: 0,
        message: e.to_string(),
    })?;
    parse_edge_list(&text).map_err(|(line, message)| SpecError::EdgeFile {
        path: path.display().to_string(),
        line,
        message,
    })
}

/// Parses edge-list text; errors carry the 1-based line number.
pub fn parse_edge_list(text: &str) -> Result<Vec<(u32, u32)>, (usize, String)> {
    let mut pairs = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|f| !f.is_empty())
            .collect();
        let [a, b] = fields.as_slice() else {
            return Err((i + 1, format!("expected two vertex indices, got {line:?}")));
        };
        let parse = |s: &str| -> Result<u32, (usize, String)> {
            match s.parse::<u32>() {
                Ok(0) | Err(_) => Err((i + 1, format!("invalid vertex index {s:?}"))),
                Ok(v) => Ok(v),
            }
        };
        pairs.push((parse(a)?, parse(b)?));
    }
    Ok(pairs)
}
