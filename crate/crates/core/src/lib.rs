//! Robust-path chain complexes of two-terminal flow networks.
//!
//! Pipeline: [`graph`] validates a two-terminal DAG, [`route`] enumerates its
//! origin-destination routes, [`simplex`] colors every forward vertex pair by
//! the routes containing it, [`robust`] finds triangles and robust paths,
//! [`chain`] assembles the chain complex, and [`sp`] relates it to
//! series-parallel structure and Braess sites.

pub mod chain;
pub mod cli;
pub mod corpus;
pub mod error;
pub mod fixtures;
pub mod graph;
pub mod rank;
pub mod robust;
pub mod route;
pub mod simplex;
pub mod sp;

pub use error::{Error, Result};
pub use graph::{build_two_terminal, parallel_combine, series_combine, BuildMode, Pruned, TwoTerminalDag, VertexId};
pub use route::{
    enumerate_routes, intersect_routes, route_segment, IntersectionDecomposition, Route, DEFAULT_ROUTE_CAP,
};
pub use simplex::{color_of, colored_route_simplex, route_simplex_of, ColoredRouteSimplex, SimplexEdge};
