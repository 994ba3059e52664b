//! Command-line front end: every command loads a graph file, runs a slice of
//! the pipeline and prints a JSON report.
//!
//! Exit codes: 0 on success, 1 when the input is rejected, 2 when an
//! internal invariant fails (closure, ∂∂ = 0, or the two series-parallel
//! verdicts disagreeing).

pub mod document;
pub mod report;

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::chain::ChainComplex;
use crate::error::Error;
use crate::graph::{parallel_combine, series_combine, BuildMode, TwoTerminalDag};
use crate::robust::{RobustPath, RobustPathIndex, TriangleSemantics};
use crate::route::DEFAULT_ROUTE_CAP;
use crate::simplex::{colored_route_simplex, ColoredRouteSimplex};
use crate::sp::{check_parallel_dimension_laws, check_series_dimension_laws, recognize_series_parallel, sites_from};

pub use document::{load_graph, parse, DocumentError, Format, GraphDocument};
pub use report::AnalysisReport;
use report::{colored_edges, pruned_warnings, ErrorEntry, GraphSummary, RobustLevel, Site, SpVerdict, Verification};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum ModeArg {
    #[default]
    Strict,
    Prune,
}

impl From<ModeArg> for BuildMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Strict => BuildMode::Strict,
            ModeArg::Prune => BuildMode::Prune,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum SemanticsArg {
    #[default]
    Literal,
    Segment,
}

impl From<SemanticsArg> for TriangleSemantics {
    fn from(s: SemanticsArg) -> Self {
        match s {
            SemanticsArg::Literal => TriangleSemantics::Literal,
            SemanticsArg::Segment => TriangleSemantics::Segment,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Operation {
    Series,
    Parallel,
}

#[derive(Debug, Parser)]
#[command(name = "flowhom", version, about = "Robust-path homology of two-terminal flow networks")]
pub struct Cli {
    /// How vertices and edges off every origin-destination path are handled.
    #[arg(long, value_enum, default_value_t, global = true)]
    pub mode: ModeArg,
    /// Maximum number of routes before enumeration gives up.
    #[arg(long, default_value_t = DEFAULT_ROUTE_CAP, global = true)]
    pub route_cap: usize,
    /// Input file format.
    #[arg(long, value_enum, default_value_t, global = true)]
    pub format: Format,
    #[arg(long, value_enum, default_value_t, global = true)]
    pub triangle_semantics: SemanticsArg,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check that the input is a two-terminal DAG.
    Validate { file: PathBuf },
    /// List origin-destination routes.
    Routes { file: PathBuf },
    /// List simplex edges with their route colors.
    Simplex { file: PathBuf },
    /// List robust paths of one order with their triangle witnesses.
    Robust {
        #[arg(long)]
        p: usize,
        file: PathBuf,
    },
    /// Chain-space dimensions and Betti numbers.
    Chains {
        #[arg(long)]
        pmax: Option<usize>,
        file: PathBuf,
    },
    /// Check closure and ∂∂ = 0.
    VerifyComplex {
        #[arg(long)]
        pmax: Option<usize>,
        file: PathBuf,
    },
    /// Decide series-parallel structure both ways.
    SpCheck { file: PathBuf },
    /// Locate Braess sites.
    Braess { file: PathBuf },
    /// Combine two graphs and check the dimension laws.
    Compose {
        #[arg(long, value_enum)]
        op: Operation,
        first: PathBuf,
        second: PathBuf,
    },
    /// Everything.
    Analyze { file: PathBuf },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Validate { .. } => "validate",
            Command::Routes { .. } => "routes",
            Command::Simplex { .. } => "simplex",
            Command::Robust { .. } => "robust",
            Command::Chains { .. } => "chains",
            Command::VerifyComplex { .. } => "verify-complex",
            Command::SpCheck { .. } => "sp-check",
            Command::Braess { .. } => "braess",
            Command::Compose { .. } => "compose",
            Command::Analyze { .. } => "analyze",
        }
    }
}

#[derive(Debug)]
enum Failure {
    Input(ErrorEntry),
    Internal(ErrorEntry),
}

impl Failure {
    fn internal(kind: &'static str, message: impl Into<String>) -> Self {
        Failure::Internal(ErrorEntry { kind, message: message.into() })
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let entry = ErrorEntry { kind: error_kind(&e), message: e.to_string() };
        if e.is_internal() {
            Failure::Internal(entry)
        } else {
            Failure::Input(entry)
        }
    }
}

impl From<DocumentError> for Failure {
    fn from(e: DocumentError) -> Self {
        let kind = match e {
            DocumentError::Io { .. } => "io",
            DocumentError::Parse { .. } | DocumentError::Json(_) => "parse_error",
            DocumentError::DuplicateEdge(..) => "duplicate_edge",
            DocumentError::SelfLoop(_) => "self_loop",
            DocumentError::DuplicateVertex(_) => "duplicate_vertex",
            DocumentError::MissingTerminal(_) => "missing_terminal",
            DocumentError::Unrepresentable(_) => "unrepresentable",
        };
        Failure::Input(ErrorEntry { kind, message: e.to_string() })
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::EmptyVertexName => "empty_vertex_name",
        Error::MissingTerminal(_) => "missing_terminal",
        Error::DegenerateTerminals(_) => "degenerate_terminals",
        Error::UnknownVertex(..) => "unknown_vertex",
        Error::CycleDetected(_) => "cycle_detected",
        Error::Disconnected { .. } => "disconnected",
        Error::NotTwoTerminal { .. } => "not_two_terminal",
        Error::RouteExplosion(_) => "route_explosion",
        Error::NotOnRoute(_) => "not_on_route",
        Error::OrderViolation(..) => "order_violation",
        Error::InconsistentOrder(..) => "inconsistent_order",
        Error::HingeMismatch { .. } => "hinge_mismatch",
        Error::TerminalMismatch(..) => "terminal_mismatch",
        Error::VertexOverlap(_) => "vertex_overlap",
        Error::DuplicateEdge(_) => "duplicate_edge",
        Error::NotAllowed(..) => "not_allowed",
        Error::ClosureViolation { .. } => "closure_violation",
    }
}

/// The outcome of one invocation.
#[derive(Debug)]
pub struct Outcome {
    pub report: AnalysisReport,
    pub exit_code: i32,
}

impl Outcome {
    pub fn json(&self) -> String {
        serde_json::to_string_pretty(&self.report).expect("reports always serialize")
    }
}

struct Session<'c> {
    cli: &'c Cli,
    report: AnalysisReport,
}

impl Session<'_> {
    fn semantics(&self) -> TriangleSemantics {
        self.cli.triangle_semantics.into()
    }

    fn load(&mut self, path: &Path) -> Result<TwoTerminalDag, Failure> {
        let doc = load_graph(path, self.cli.format)?;
        let (dag, pruned) = doc.to_dag(self.cli.mode.into())?;
        self.report.warnings.extend(pruned_warnings(&pruned));
        Ok(dag)
    }

    fn summarize(&mut self, dag: &TwoTerminalDag) {
        self.report.graph = Some(GraphSummary::of(dag, self.semantics()));
    }

    fn simplex(&self, dag: &TwoTerminalDag) -> Result<ColoredRouteSimplex, Failure> {
        Ok(colored_route_simplex(dag, self.cli.route_cap)?)
    }

    fn record_routes(&mut self, simplex: &ColoredRouteSimplex) {
        let dag = simplex.dag();
        self.report.routes = Some(simplex.routes().iter().map(|r| dag.names_of(r.vertices())).collect());
    }

    fn record_chains(&mut self, complex: &ChainComplex<'_>, p_max: usize) -> Result<(), Failure> {
        self.report.dims = Some(complex.dims(p_max));
        self.report.betti = Some(complex.betti(p_max)?);
        Ok(())
    }

    fn record_verification(&mut self, complex: &ChainComplex<'_>, p_max: usize) -> Result<(), Failure> {
        let verification = Verification::of(complex.paths().simplex().dag(), complex.verify(p_max));
        let passed = verification.passed;
        self.report.verification = Some(verification);
        if passed {
            Ok(())
        } else {
            Err(Failure::internal("verification_failed", "chain complex verification failed"))
        }
    }

    fn record_sp(&mut self, complex: &ChainComplex<'_>) -> Result<(), Failure> {
        let dag = complex.paths().simplex().dag();
        let tree = recognize_series_parallel(dag, self.cli.route_cap)?;
        let homology = complex.dim(3) == 0;
        let reduction = tree.is_some();
        self.report.sp_verdict = Some(SpVerdict {
            homology,
            reduction,
            agree: homology == reduction,
            tree_depth: tree.as_ref().map(|t| t.depth()),
            decomposition_tree: tree,
        });
        if homology == reduction {
            Ok(())
        } else {
            Err(Failure::internal(
                "sp_disagreement",
                format!("homological verdict {homology} differs from reduction verdict {reduction}"),
            ))
        }
    }

    fn record_braess(&mut self, index: &RobustPathIndex<'_>) {
        let dag = index.simplex().dag();
        self.report.braess_sites = Some(sites_from(index).iter().map(|s| Site::of(dag, s)).collect());
    }

    fn execute(&mut self) -> Result<(), Failure> {
        let semantics = self.semantics();
        match &self.cli.command {
            Command::Validate { file } => {
                let dag = self.load(file)?;
                self.summarize(&dag);
            }
            Command::Routes { file } => {
                let dag = self.load(file)?;
                self.summarize(&dag);
                let simplex = self.simplex(&dag)?;
                self.record_routes(&simplex);
            }
            Command::Simplex { file } => {
                let dag = self.load(file)?;
                self.summarize(&dag);
                let simplex = self.simplex(&dag)?;
                self.record_routes(&simplex);
                self.report.simplex = Some(colored_edges(&simplex));
            }
            Command::Robust { p, file } => {
                let dag = self.load(file)?;
                self.summarize(&dag);
                let simplex = self.simplex(&dag)?;
                self.record_routes(&simplex);
                let paths = match p {
                    0 => (0..dag.vertex_count()).map(|v| plain_path(vec![v])).collect(),
                    1 => simplex.edges().map(|e| plain_path(vec![e.from, e.to])).collect(),
                    _ => RobustPathIndex::new(&simplex, semantics).level(*p),
                };
                self.report.robust_paths = Some(vec![RobustLevel::of(&dag, *p, &paths)]);
            }
            Command::Chains { pmax, file } => {
                let dag = self.load(file)?;
                self.summarize(&dag);
                let simplex = self.simplex(&dag)?;
                let complex = ChainComplex::new(&simplex, semantics);
                let p_max = pmax.unwrap_or(complex.max_order());
                self.record_chains(&complex, p_max)?;
            }
            Command::VerifyComplex { pmax, file } => {
                let dag = self.load(file)?;
                self.summarize(&dag);
                let simplex = self.simplex(&dag)?;
                let complex = ChainComplex::new(&simplex, semantics);
                let p_max = pmax.unwrap_or(complex.max_order());
                self.record_verification(&complex, p_max)?;
            }
            Command::SpCheck { file } => {
                let dag = self.load(file)?;
                self.summarize(&dag);
                let simplex = self.simplex(&dag)?;
                let complex = ChainComplex::new(&simplex, semantics);
                self.record_sp(&complex)?;
            }
            Command::Braess { file } => {
                let dag = self.load(file)?;
                self.summarize(&dag);
                let simplex = self.simplex(&dag)?;
                let index = RobustPathIndex::new(&simplex, semantics);
                self.record_braess(&index);
            }
            Command::Compose { op, first, second } => {
                let g1 = self.load(first)?;
                let g2 = self.load(second)?;
                let (combined, laws) = match op {
                    Operation::Series => {
                        (series_combine(&g1, &g2)?, check_series_dimension_laws(&g1, &g2, self.cli.route_cap)?)
                    }
                    Operation::Parallel => {
                        (parallel_combine(&g1, &g2)?, check_parallel_dimension_laws(&g1, &g2, self.cli.route_cap)?)
                    }
                };
                self.summarize(&combined);
                self.report.composed = Some(GraphDocument::from_dag(&combined));
                for c in laws.observations() {
                    self.report.warnings.push(format!(
                        "{} at p = {} is an observation, not a law: {} vs {} + {}",
                        c.law, c.order, c.combined, c.first, c.second
                    ));
                }
                let holds = laws.all_hold();
                self.report.laws = Some(laws);
                if !holds {
                    return Err(Failure::internal("law_violation", "a dimension law failed"));
                }
            }
            Command::Analyze { file } => {
                let dag = self.load(file)?;
                self.summarize(&dag);
                let simplex = self.simplex(&dag)?;
                self.record_routes(&simplex);
                self.report.simplex = Some(colored_edges(&simplex));
                let complex = ChainComplex::new(&simplex, semantics);
                let index = complex.paths();
                self.report.robust_paths = Some(
                    index.levels().iter().enumerate().map(|(k, level)| RobustLevel::of(&dag, k + 2, level)).collect(),
                );
                let p_max = complex.max_order();
                self.record_chains(&complex, p_max)?;
                self.record_braess(index);
                let verified = self.record_verification(&complex, p_max);
                let sp = self.record_sp(&complex);
                verified.and(sp)?;
            }
        }
        Ok(())
    }
}

fn plain_path(vertices: Vec<usize>) -> RobustPath {
    RobustPath { vertices, witnesses: Vec::new() }
}

/// Runs a parsed command line.
pub fn run(cli: &Cli) -> Outcome {
    let mut session =
        Session { cli, report: AnalysisReport { command: cli.command.name().to_owned(), ..AnalysisReport::default() } };
    let result = session.execute();
    let mut report = session.report;
    let exit_code = match result {
        Ok(()) => 0,
        Err(Failure::Input(entry)) => {
            report.error = Some(entry);
            1
        }
        Err(Failure::Internal(entry)) => {
            report.error = Some(entry);
            2
        }
    };
    Outcome { report, exit_code }
}

/// Entry point for the binary; returns the process exit code.
pub fn main() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let outcome = run(&cli);
    println!("{}", outcome.json());
    if let Some(error) = &outcome.report.error {
        eprintln!("flowhom: {}: {}", error.kind, error.message);
    }
    outcome.exit_code
}

#[cfg(test)]
mod tests {
    use super::*;

    fn write_temp(name: &str, body: &str) -> PathBuf {
        let dir = std::env::temp_dir().join(format!("flowhom-cli-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join(name);
        std::fs::write(&path, body).unwrap();
        path
    }

    fn invoke(args: &[&str]) -> Outcome {
        let cli = Cli::try_parse_from(std::iter::once("flowhom").chain(args.iter().copied())).unwrap();
        run(&cli)
    }

    #[test]
    fn chains_on_k12() {
        let path =
            write_temp("k12.json", r#"{"vertices":["1","2"],"edges":[["1","2"]],"origin":"1","destination":"2"}"#);
        let out = invoke(&["chains", "--pmax", "5", path.to_str().unwrap()]);
        assert_eq!(out.exit_code, 0);
        assert_eq!(out.report.dims, Some(vec![2, 1, 0, 0, 0, 0]));
    }

    #[test]
    fn sp_check_on_diamond() {
        let path = write_temp("diamond.txt", "@origin o\n@destination d\no a\na d\no b\nb d\n");
        let out = invoke(&["--format", "edgelist", "sp-check", path.to_str().unwrap()]);
        assert_eq!(out.exit_code, 0);
        let verdict = out.report.sp_verdict.unwrap();
        assert!(verdict.homology && verdict.reduction);
        assert_eq!(verdict.tree_depth, Some(2));
    }

    #[test]
    fn input_errors_exit_one() {
        let path = write_temp("loop.txt", "@origin o\n@destination d\no o\n");
        let out = invoke(&["--format", "edgelist", "validate", path.to_str().unwrap()]);
        assert_eq!(out.exit_code, 1);
        assert_eq!(out.report.error.unwrap().kind, "self_loop");

        let path = write_temp("dangling.txt", "@origin o\n@destination d\no d\no x\n");
        let out = invoke(&["--format", "edgelist", "validate", path.to_str().unwrap()]);
        assert_eq!(out.report.error.unwrap().kind, "not_two_terminal");
        let out = invoke(&["--format", "edgelist", "--mode", "prune", "validate", path.to_str().unwrap()]);
        assert_eq!(out.exit_code, 0);
        assert_eq!(out.report.warnings, ["pruned vertex x", "pruned edge (o, x)"]);
    }

    #[test]
    fn route_cap_is_an_input_error() {
        let path = write_temp("diamond-cap.txt", "@origin o\n@destination d\no a\na d\no b\nb d\n");
        let out = invoke(&["--format", "edgelist", "--route-cap", "1", "routes", path.to_str().unwrap()]);
        assert_eq!(out.exit_code, 1);
        assert_eq!(out.report.error.unwrap().kind, "route_explosion");
    }
}
