//! Row-finite directed graphs, their graph inverse semigroups and graph
//! groupoids.
//!
//! Edge-list format, one directive per line, `#` starts a comment line:
//!
//! ```text
//! vertex v
//! edge a v v
//! edge e v w
//! ```
//!
//! `edge <name> <source> <range>` declares vertices implicitly. Vertices and
//! edges are numbered in order of first appearance.

mod ideals;
mod iso;
mod lasso;
mod semigroup;

use std::collections::HashMap;
use std::fmt::{self, Write as _};

use serde::Serialize;
use thiserror::Error;

use crate::groupoid::escape;

pub use ideals::{
    cycle_exit_check, graph_simplicity, hereditary_saturated_lattice, hs_hull, is_hereditary, is_saturated, lemma_it_check,
    GraphSimplicity, LemmaItReport,
    VertexLattice, VertexSet,
};
pub use iso::{enumerate_lassos, enumerate_triples, graphiso_check, IsoBounds, IsoReport};
pub use lasso::{lag_equiv, z_set_membership, GroupoidTriple, LassoPath, MinimalClass};
pub use semigroup::{pair_product, radius, GraphSemigroup, OrderReport, PathPair, RadiusCheck};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphParseError {
    #[error("{line}:{column}: unknown directive `{word}`")]
    UnknownDirective { line: usize, column: usize, word: String },
    #[error("{line}:{column}: `{directive}` expects {expected} names")]
    MissingField { line: usize, column: usize, directive: &'static str, expected: usize },
    #[error("{line}:{column}: unexpected `{word}`")]
    Trailing { line: usize, column: usize, word: String },
    #[error("{line}:{column}: duplicate edge `{name}`")]
    DuplicateEdge { line: usize, column: usize, name: String },
    #[error("{line}:{column}: duplicate vertex `{name}`")]
    DuplicateVertex { line: usize, column: usize, name: String },
}

/// A standing assumption the graph breaks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Violation {
    /// No edge ends at this vertex.
    RNotOnto(String),
    /// No edge starts at this vertex.
    SourceEmpty(String),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::RNotOnto(v) => write!(f, "RNotOnto({v}): no edge ends at {v}"),
            Violation::SourceEmpty(v) => write!(f, "SourceEmpty({v}): no edge starts at {v}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error(transparent)]
    Parse(#[from] GraphParseError),
    #[error("graph has no vertices")]
    NoVertices,
    #[error("graph violates {}", .0.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
    Invalid(Vec<Violation>),
    #[error("paths do not end at the same vertex")]
    RangeMismatch,
    #[error("not a path: edges do not connect")]
    NotAPath,
    #[error("not a lasso: the cycle is empty or not closed at the end of the prefix")]
    NotALasso,
    #[error("lasso paths are not lag-{0} equivalent")]
    NotEquivalent(i64),
    #[error("triples are not composable")]
    NotComposable,
    #[error("max length {maxlen} is below the {needed} needed")]
    BoundTooSmall { maxlen: usize, needed: usize },
    #[error("ideal lattice changes between max length {maxlen} and {next}")]
    NotStabilized { maxlen: usize, next: usize, at_maxlen: Vec<Vec<String>>, at_next: Vec<Vec<String>> },
}

/// A finite directed graph that is row finite, has `r` onto and no sinks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirectedGraph {
    vertices: Vec<String>,
    edges: Vec<String>,
    source: Vec<usize>,
    range: Vec<usize>,
}

/// A finite path: a start vertex and a sequence of edges. The path of length
/// zero is a vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FinitePath {
    start: usize,
    end: usize,
    edges: Vec<usize>,
}

impl FinitePath {
    pub fn vertex(v: usize) -> Self {
        FinitePath { start: v, end: v, edges: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// `s(α)`.
    pub fn source(&self) -> usize {
        self.start
    }

    /// `r(α)`.
    pub fn range(&self) -> usize {
        self.end
    }

    pub fn edges(&self) -> &[usize] {
        &self.edges
    }

    pub fn last(&self) -> Option<usize> {
        self.edges.last().copied()
    }

    /// `α ≺ β`: `β = αμ`.
    pub fn is_prefix_of(&self, other: &FinitePath) -> bool {
        self.start == other.start && other.edges.starts_with(&self.edges)
    }

    /// `μ` with `other = self·μ`.
    pub fn strip_from(&self, other: &FinitePath) -> Option<FinitePath> {
        self.is_prefix_of(other).then(|| FinitePath {
            start: self.end,
            end: other.end,
            edges: other.edges[self.edges.len()..].to_vec(),
        })
    }

    /// `αμ`; panics unless `r(α) = s(μ)`.
    pub fn concat(&self, mu: &FinitePath) -> FinitePath {
        assert_eq!(self.end, mu.start, "paths do not connect");
        let mut edges = self.edges.clone();
        edges.extend_from_slice(&mu.edges);
        FinitePath { start: self.start, end: mu.end, edges }
    }

    /// Sort key: length, then start, then edges.
    pub fn key(&self) -> (usize, usize, &[usize]) {
        (self.edges.len(), self.start, &self.edges)
    }
}

impl DirectedGraph {
    /// Builds a graph and checks the standing assumptions.
    pub fn new(vertices: Vec<String>, edges: Vec<(String, usize, usize)>) -> Result<Self, GraphError> {
        if vertices.is_empty() {
            return Err(GraphError::NoVertices);
        }
        let g = DirectedGraph {
            vertices,
            source: edges.iter().map(|e| e.1).collect(),
            range: edges.iter().map(|e| e.2).collect(),
            edges: edges.into_iter().map(|e| e.0).collect(),
        };
        let mut violations = Vec::new();
        for v in 0..g.vertex_count() {
            if !g.range.contains(&v) {
                violations.push(Violation::RNotOnto(g.vertices[v].clone()));
            }
            if !g.source.contains(&v) {
                violations.push(Violation::SourceEmpty(g.vertices[v].clone()));
            }
        }
        if violations.is_empty() {
            Ok(g)
        } else {
            Err(GraphError::Invalid(violations))
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_name(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    pub fn edge_name(&self, e: usize) -> &str {
        &self.edges[e]
    }

    pub fn vertex_by_name(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    pub fn edge_by_name(&self, name: &str) -> Option<usize> {
        self.edges.iter().position(|e| e == name)
    }

    pub fn source(&self, e: usize) -> usize {
        self.source[e]
    }

    pub fn range(&self, e: usize) -> usize {
        self.range[e]
    }

    /// Edges starting at `v`.
    pub fn out_edges(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.edge_count()).filter(move |&e| self.source[e] == v)
    }

    /// The path through `edges` from `start`.
    pub fn path(&self, start: usize, edges: &[usize]) -> Result<FinitePath, GraphError> {
        let mut end = start;
        for &e in edges {
            if e >= self.edge_count() || self.source[e] != end {
                return Err(GraphError::NotAPath);
            }
            end = self.range[e];
        }
        Ok(FinitePath { start, end, edges: edges.to_vec() })
    }

    /// A path given by edge names; a vertex name gives the path of length 0.
    pub fn path_by_names(&self, names: &[&str]) -> Result<FinitePath, GraphError> {
        if let [single] = names {
            if let Some(v) = self.vertex_by_name(single) {
                return Ok(FinitePath::vertex(v));
            }
        }
        let edges: Vec<usize> = names
            .iter()
            .map(|n| self.edge_by_name(n).ok_or(GraphError::NotAPath))
            .collect::<Result<_, _>>()?;
        let start = edges.first().map(|&e| self.source[e]).ok_or(GraphError::NotAPath)?;
        self.path(start, &edges)
    }

    /// `α·e`.
    pub fn extend(&self, path: &FinitePath, e: usize) -> FinitePath {
        assert_eq!(self.source[e], path.end);
        let mut edges = path.edges.clone();
        edges.push(e);
        FinitePath { start: path.start, end: self.range[e], edges }
    }

    /// All paths of length at most `maxlen`, sorted by [`FinitePath::key`].
    pub fn paths_up_to(&self, maxlen: usize) -> Vec<FinitePath> {
        let mut out: Vec<FinitePath> = (0..self.vertex_count()).map(FinitePath::vertex).collect();
        let mut layer = out.clone();
        for _ in 0..maxlen {
            layer = layer
                .iter()
                .flat_map(|p| self.out_edges(p.end).map(move |e| (p, e)))
                .map(|(p, e)| self.extend(p, e))
                .collect();
            out.extend(layer.iter().cloned());
        }
        out.sort_by(|a, b| a.key().cmp(&b.key()));
        out
    }

    /// `v ≥ w`: a path leads from `v` to `w`.
    pub fn reachable(&self, v: usize) -> Vec<bool> {
        let mut seen = vec![false; self.vertex_count()];
        let mut stack = vec![v];
        seen[v] = true;
        while let Some(u) = stack.pop() {
            for e in self.out_edges(u) {
                let w = self.range[e];
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen
    }

    pub fn path_label(&self, p: &FinitePath) -> String {
        if p.edges.is_empty() {
            self.vertices[p.start].clone()
        } else {
            p.edges.iter().map(|&e| self.edges[e].as_str()).collect::<Vec<_>>().join(".")
        }
    }

    pub fn to_dot(&self, title: &str) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "digraph \"{}\" {{", escape(title));
        for (v, name) in self.vertices.iter().enumerate() {
            let _ = writeln!(out, "  v{v} [label=\"{}\"];", escape(name));
        }
        for e in 0..self.edge_count() {
            let _ = writeln!(out, "  v{} -> v{} [label=\"{}\"];", self.source[e], self.range[e], escape(&self.edges[e]));
        }
        out.push_str("}\n");
        out
    }

    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for v in &self.vertices {
            let _ = writeln!(out, "vertex {v}");
        }
        for e in 0..self.edge_count() {
            let _ = writeln!(out, "edge {} {} {}", self.edges[e], self.vertices[self.source[e]], self.vertices[self.range[e]]);
        }
        out
    }
}

/// Parses an edge list without checking the standing assumptions.
pub fn parse_edge_list(text: &str) -> Result<(Vec<String>, Vec<(String, usize, usize)>), GraphParseError> {
    let mut vertices: Vec<String> = Vec::new();
    let mut vindex: HashMap<String, usize> = HashMap::new();
    let mut edges: Vec<(String, usize, usize)> = Vec::new();
    let mut eindex: HashMap<String, ()> = HashMap::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim_start();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let words = words(raw);
        let (col, directive) = words[0];
        let (arity, name): (usize, &'static str) = match directive {
            "vertex" => (1, "vertex"),
            "edge" => (3, "edge"),
            _ => {
                return Err(GraphParseError::UnknownDirective { line, column: col, word: directive.to_string() })
            }
        };
        if words.len() < arity + 1 {
            return Err(GraphParseError::MissingField {
                line,
                column: raw.chars().count() + 1,
                directive: name,
                expected: arity,
            });
        }
        if let Some(&(column, word)) = words.get(arity + 1) {
            return Err(GraphParseError::Trailing { line, column, word: word.to_string() });
        }
        if arity == 1 {
            let (column, w) = words[1];
            if vindex.contains_key(w) {
                return Err(GraphParseError::DuplicateVertex { line, column, name: w.to_string() });
            }
        }
        let mut vertex = |w: &str| -> usize {
            if let Some(&v) = vindex.get(w) {
                return v;
            }
            vertices.push(w.to_string());
            vindex.insert(w.to_string(), vertices.len() - 1);
            vertices.len() - 1
        };
        if arity == 1 {
            vertex(words[1].1);
        } else {
            let (column, e) = words[1];
            if eindex.insert(e.to_string(), ()).is_some() {
                return Err(GraphParseError::DuplicateEdge { line, column, name: e.to_string() });
            }
            let s = vertex(words[2].1);
            let r = vertex(words[3].1);
            edges.push((e.to_string(), s, r));
        }
    }
    Ok((vertices, edges))
}

/// Whitespace-separated words with their 1-based column.
fn words(text: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start: Option<(usize, usize)> = None;
    for (col, (i, c)) in text.char_indices().enumerate() {
        match (c.is_whitespace(), start) {
            (false, None) => start = Some((col, i)),
            (true, Some((sc, si))) => {
                out.push((sc + 1, &text[si..i]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some((sc, si)) = start {
        out.push((sc + 1, &text[si..]));
    }
    out
}

/// Parses and validates an edge list.
pub fn load_graph(text: &str) -> Result<DirectedGraph, GraphError> {
    let (vertices, edges) = parse_edge_list(text)?;
    DirectedGraph::new(vertices, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn bouquet_is_valid() {
        let g = load_graph(corpus::graph_text("o2")).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (1, 2));
        assert_eq!(g.paths_up_to(2).len(), 1 + 2 + 4);
    }

    #[test]
    fn violations_are_listed() {
        let err = load_graph("edge e v w\nedge f w w\n").unwrap_err();
        assert_eq!(err, GraphError::Invalid(vec![Violation::RNotOnto("v".into())]));
        let err = load_graph("edge e v w\n").unwrap_err();
        assert_eq!(
            err,
            GraphError::Invalid(vec![Violation::RNotOnto("v".into()), Violation::SourceEmpty("w".into())])
        );
        assert!(load_graph(corpus::graph_text("sink2")).is_ok());
        assert_eq!(load_graph("# nothing\n"), Err(GraphError::NoVertices));
    }

    #[test]
    fn parse_errors() {
        assert_eq!(
            parse_edge_list("edge a v v\n  arc b v v\n").unwrap_err(),
            GraphParseError::UnknownDirective { line: 2, column: 3, word: "arc".into() }
        );
        assert!(matches!(
            parse_edge_list("edge a v\n").unwrap_err(),
            GraphParseError::MissingField { line: 1, column: 9, expected: 3, .. }
        ));
        assert!(matches!(
            parse_edge_list("vertex v w\n").unwrap_err(),
            GraphParseError::Trailing { line: 1, column: 10, .. }
        ));
        assert!(matches!(
            parse_edge_list("edge a v v\nedge a v v\n").unwrap_err(),
            GraphParseError::DuplicateEdge { line: 2, column: 6, .. }
        ));
        assert!(matches!(
            parse_edge_list("vertex v\nvertex v\n").unwrap_err(),
            GraphParseError::DuplicateVertex { line: 2, column: 8, .. }
        ));
    }

    #[test]
    fn edge_list_roundtrip() {
        let g = load_graph(corpus::graph_text("sink2")).unwrap();
        assert_eq!(load_graph(&g.to_edge_list()).unwrap(), g);
    }

    #[test]
    fn paths() {
        let g = load_graph(corpus::graph_text("sink2")).unwrap();
        let ae = g.path_by_names(&["a", "e"]).unwrap();
        let a = g.path_by_names(&["a"]).unwrap();
        let v = g.path_by_names(&["v"]).unwrap();
        assert!(a.is_prefix_of(&ae) && v.is_prefix_of(&ae));
        assert_eq!(a.strip_from(&ae).unwrap(), g.path_by_names(&["e"]).unwrap());
        assert_eq!(g.path_by_names(&["e", "a"]), Err(GraphError::NotAPath));
        assert_eq!(g.path_label(&ae), "a.e");
        assert_eq!(g.reachable(g.vertex_by_name("w").unwrap()), vec![false, true]);
    }
}
