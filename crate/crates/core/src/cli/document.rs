//! Graph files: a JSON object or a whitespace-separated edge list.
//!
//! ```text
//! # comment
//! @origin o
//! @destination d
//! @vertex lonely
//! o a
//! a d
//! ```

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::ValueEnum;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::error::Result as GraphResult;
use crate::graph::{build_two_terminal, BuildMode, Pruned, TwoTerminalDag, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Edgelist,
}

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid JSON document: {0}")]
    Json(String),
    #[error("edge ({0}, {1}) appears twice")]
    DuplicateEdge(String, String),
    #[error("self-loop on `{0}`")]
    SelfLoop(String),
    #[error("vertex `{0}` is listed twice")]
    DuplicateVertex(String),
    #[error("no {0} given")]
    MissingTerminal(&'static str),
    #[error("`{0}` cannot be written as an edge-list name")]
    Unrepresentable(String),
}

/// A graph as read from a file, with vertices and edges in sorted order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDocument {
    pub vertices: Vec<String>,
    pub edges: Vec<[String; 2]>,
    pub origin: String,
    pub destination: String,
}

impl GraphDocument {
    /// Sorts and checks for duplicates and self-loops.
    pub fn normalized(mut self) -> Result<Self, DocumentError> {
        self.vertices.sort();
        if let Some(w) = self.vertices.windows(2).find(|w| w[0] == w[1]) {
            return Err(DocumentError::DuplicateVertex(w[0].clone()));
        }
        if let Some([u, _]) = self.edges.iter().find(|[u, v]| u == v) {
            return Err(DocumentError::SelfLoop(u.clone()));
        }
        self.edges.sort();
        if let Some(w) = self.edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(DocumentError::DuplicateEdge(w[0][0].clone(), w[0][1].clone()));
        }
        Ok(self)
    }

    pub fn from_dag(dag: &TwoTerminalDag) -> Self {
        let mut vertices: Vec<String> = dag.names().iter().map(|v| v.as_str().to_owned()).collect();
        vertices.sort();
        let mut edges: Vec<[String; 2]> =
            dag.named_edges().map(|(u, v)| [u.as_str().to_owned(), v.as_str().to_owned()]).collect();
        edges.sort();
        Self {
            vertices,
            edges,
            origin: dag.name(dag.origin()).as_str().to_owned(),
            destination: dag.name(dag.destination()).as_str().to_owned(),
        }
    }

    pub fn to_dag(&self, mode: BuildMode) -> GraphResult<(TwoTerminalDag, Pruned)> {
        let vertices = self.vertices.iter().map(VertexId::new).collect::<GraphResult<Vec<_>>>()?;
        let edges = self
            .edges
            .iter()
            .map(|[u, v]| Ok((VertexId::new(u)?, VertexId::new(v)?)))
            .collect::<GraphResult<Vec<_>>>()?;
        build_two_terminal(vertices, edges, VertexId::new(&self.origin)?, VertexId::new(&self.destination)?, mode)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents always serialize")
    }

    /// Terminals first, then vertices on no edge, then edges.
    pub fn to_edgelist(&self) -> Result<String, DocumentError> {
        let representable =
            |s: &str| !s.is_empty() && !s.starts_with('@') && !s.contains('#') && !s.contains(char::is_whitespace);
        if let Some(bad) = self.vertices.iter().find(|v| !representable(v)) {
            return Err(DocumentError::Unrepresentable(bad.clone()));
        }
        let mut out = String::new();
        writeln!(out, "@origin {}", self.origin).unwrap();
        writeln!(out, "@destination {}", self.destination).unwrap();
        let on_edges: BTreeSet<&str> = self.edges.iter().flat_map(|[u, v]| [u.as_str(), v.as_str()]).collect();
        for v in &self.vertices {
            if !on_edges.contains(v.as_str()) && *v != self.origin && *v != self.destination {
                writeln!(out, "@vertex {v}").unwrap();
            }
        }
        for [u, v] in &self.edges {
            writeln!(out, "{u} {v}").unwrap();
        }
        Ok(out)
    }

    pub fn serialize(&self, format: Format) -> Result<String, DocumentError> {
        match format {
            Format::Json => Ok(self.to_json()),
            Format::Edgelist => self.to_edgelist(),
        }
    }
}

pub fn parse_json(text: &str) -> Result<GraphDocument, DocumentError> {
    let doc: GraphDocument = serde_json::from_str(text).map_err(|e| DocumentError::Json(e.to_string()))?;
    doc.normalized()
}

pub fn parse_edgelist(text: &str) -> Result<GraphDocument, DocumentError> {
    let mut origin = None;
    let mut destination = None;
    let mut vertices = BTreeSet::new();
    let mut edges = BTreeSet::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or_default();
        let tokens: Vec<&str> = content.split_whitespace().collect();
        let parse_error = |message: String| DocumentError::Parse { line, message };
        match tokens.as_slice() {
            [] => {}
            [directive, name] if directive.starts_with('@') => {
                let slot = match *directive {
                    "@origin" => &mut origin,
                    "@destination" => &mut destination,
                    "@vertex" => {
                        vertices.insert(name.to_string());
                        continue;
                    }
                    other => return Err(parse_error(format!("unknown directive `{other}`"))),
                };
                if slot.replace(name.to_string()).is_some() {
                    return Err(parse_error(format!("repeated `{directive}`")));
                }
                vertices.insert(name.to_string());
            }
            [directive, ..] if directive.starts_with('@') => {
                return Err(parse_error(format!("`{directive}` takes exactly one name")));
            }
            [u, v] => {
                if u == v {
                    return Err(DocumentError::SelfLoop(u.to_string()));
                }
                if !edges.insert([u.to_string(), v.to_string()]) {
                    return Err(DocumentError::DuplicateEdge(u.to_string(), v.to_string()));
                }
                vertices.insert(u.to_string());
                vertices.insert(v.to_string());
            }
            _ => return Err(parse_error(format!("expected `from to`, found {} fields", tokens.len()))),
        }
    }
    GraphDocument {
        vertices: vertices.into_iter().collect(),
        edges: edges.into_iter().collect(),
        origin: origin.ok_or(DocumentError::MissingTerminal("@origin"))?,
        destination: destination.ok_or(DocumentError::MissingTerminal("@destination"))?,
    }
    .normalized()
}

pub fn parse(text: &str, format: Format) -> Result<GraphDocument, DocumentError> {
    match format {
        Format::Json => parse_json(text),
        Format::Edgelist => parse_edgelist(text),
    }
}

/// Reads `path`, or standard input for `-`.
pub fn load_graph(path: &Path, format: Format) -> Result<GraphDocument, DocumentError> {
    let io = |source| DocumentError::Io { path: path.to_owned(), source };
    let text = if path == Path::new("-") {
        std::io::read_to_string(std::io::stdin()).map_err(io)?
    } else {
        std::fs::read_to_string(path).map_err(io)?
    };
    parse(&text, format)
}
