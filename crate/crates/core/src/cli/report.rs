//! The JSON report. Vertices appear by name; route indices refer to the
//! `routes` list in canonical order.

use serde::Serialize;

use crate::chain::{Counterexample, LevelCheck, VerificationReport};
use crate::graph::{Pruned, TwoTerminalDag, VertexId};
use crate::robust::{RobustPath, TriangleSemantics};
use crate::simplex::ColoredRouteSimplex;
use crate::sp::{BraessCase, BraessSite, DecompositionTree, LawReport};

use super::document::GraphDocument;

#[derive(Debug, Clone, Default, Serialize)]
pub struct AnalysisReport {
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub graph: Option<GraphSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub routes: Option<Vec<Vec<VertexId>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub simplex: Option<Vec<ColoredEdge>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub robust_paths: Option<Vec<RobustLevel>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dims: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub betti: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verification: Option<Verification>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sp_verdict: Option<SpVerdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub braess_sites: Option<Vec<Site>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub composed: Option<GraphDocument>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub laws: Option<LawReport>,
    pub warnings: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<ErrorEntry>,
}

#[derive(Debug, Clone, Serialize)]
pub struct GraphSummary {
    pub vertices: usize,
    pub edges: usize,
    pub origin: VertexId,
    pub destination: VertexId,
    pub topological_order: Vec<VertexId>,
    pub triangle_semantics: TriangleSemantics,
}

impl GraphSummary {
    pub fn of(dag: &TwoTerminalDag, semantics: TriangleSemantics) -> Self {
        Self {
            vertices: dag.vertex_count(),
            edges: dag.edge_count(),
            origin: dag.name(dag.origin()).clone(),
            destination: dag.name(dag.destination()).clone(),
            topological_order: dag.names().to_vec(),
            triangle_semantics: semantics,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ColoredEdge {
    pub from: VertexId,
    pub to: VertexId,
    pub color: Vec<usize>,
}

pub fn colored_edges(simplex: &ColoredRouteSimplex) -> Vec<ColoredEdge> {
    let dag = simplex.dag();
    simplex
        .coloring()
        .iter()
        .map(|(e, color)| ColoredEdge {
            from: dag.name(e.from).clone(),
            to: dag.name(e.to).clone(),
            color: color.clone(),
        })
        .collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct Witness {
    pub triple: Vec<VertexId>,
    pub alpha: usize,
    pub beta: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct NamedRobustPath {
    pub vertices: Vec<VertexId>,
    pub witnesses: Vec<Witness>,
}

#[derive(Debug, Clone, Serialize)]
pub struct RobustLevel {
    pub order: usize,
    pub paths: Vec<NamedRobustPath>,
}

impl RobustLevel {
    pub fn of(dag: &TwoTerminalDag, order: usize, paths: &[RobustPath]) -> Self {
        Self {
            order,
            paths: paths
                .iter()
                .map(|p| NamedRobustPath {
                    vertices: dag.names_of(&p.vertices),
                    witnesses: p
                        .witnesses
                        .iter()
                        .map(|w| Witness { triple: dag.names_of(&w.apex_path), alpha: w.alpha, beta: w.beta })
                        .collect(),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum NamedCounterexample {
    NonzeroComposite { order: usize, column: Vec<VertexId>, row: Vec<VertexId>, value: i64 },
    ClosureViolation { order: usize, path: Vec<VertexId>, face: Vec<VertexId> },
}

#[derive(Debug, Clone, Serialize)]
pub struct Verification {
    pub p_max: usize,
    pub passed: bool,
    pub levels: Vec<LevelCheck>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<NamedCounterexample>,
}

impl Verification {
    pub fn of(dag: &TwoTerminalDag, report: VerificationReport) -> Self {
        let counterexample = report.counterexample.map(|c| match c {
            Counterexample::NonzeroComposite { order, column, row, value } => NamedCounterexample::NonzeroComposite {
                order,
                column: dag.names_of(&column),
                row: dag.names_of(&row),
                value,
            },
            Counterexample::ClosureViolation { order, path, face } => {
                NamedCounterexample::ClosureViolation { order, path: dag.names_of(&path), face: dag.names_of(&face) }
            }
        });
        Self { p_max: report.p_max, passed: report.passed, levels: report.levels, counterexample }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SpVerdict {
    /// `dim Ω_3 = 0`
    pub homology: bool,
    /// Recursive route-set decomposition succeeded.
    pub reduction: bool,
    pub agree: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tree_depth: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub decomposition_tree: Option<DecompositionTree>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Site {
    pub tuple: Vec<VertexId>,
    pub source_path: Vec<VertexId>,
    pub case: BraessCase,
    pub verified: bool,
}

impl Site {
    pub fn of(dag: &TwoTerminalDag, site: &BraessSite) -> Self {
        Self {
            tuple: dag.names_of(&site.tuple),
            source_path: dag.names_of(&site.source_path),
            case: site.case_label,
            verified: site.verified,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ErrorEntry {
    pub kind: &'static str,
    pub message: String,
}

pub fn pruned_warnings(pruned: &Pruned) -> Vec<String> {
    let mut out: Vec<String> = pruned.vertices.iter().map(|v| format!("pruned vertex {v}")).collect();
    out.extend(pruned.edges.iter().map(|(u, v)| format!("pruned edge ({u}, {v})")));
    out
}
