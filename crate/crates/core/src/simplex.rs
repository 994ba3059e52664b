//! Route simplices and the colored route simplex of a two-terminal graph.
//!
//! The simplex of a route holds every forward pair of its vertices. The
//! colored simplex of a graph is the union over its complete route
//! enumeration, with each pair colored by the indices of the routes that
//! contain it in order.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::error::Result;
use crate::graph::TwoTerminalDag;
use crate::route::{enumerate_routes, Route};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct SimplexEdge {
    pub from: usize,
    pub to: usize,
}

impl SimplexEdge {
    pub fn new(from: usize, to: usize) -> Self {
        Self { from, to }
    }
}

pub fn route_simplex_of(route: &Route) -> BTreeSet<SimplexEdge> {
    let vs = route.vertices();
    let mut edges = BTreeSet::new();
    for (a, &i) in vs.iter().enumerate() {
        for &j in &vs[a + 1..] {
            edges.insert(SimplexEdge::new(i, j));
        }
    }
    edges
}

#[derive(Debug, Clone)]
pub struct ColoredRouteSimplex {
    base: TwoTerminalDag,
    routes: Vec<Route>,
    // Sorted route indices per edge.
    coloring: BTreeMap<SimplexEdge, Vec<usize>>,
    succ: Vec<Vec<usize>>,
}

pub fn colored_route_simplex(dag: &TwoTerminalDag, route_cap: usize) -> Result<ColoredRouteSimplex> {
    let routes = enumerate_routes(dag, route_cap)?;
    Ok(ColoredRouteSimplex::from_routes(dag.clone(), routes))
}

impl ColoredRouteSimplex {
    /// Builds the simplex from an explicit route list. The list is taken as
    /// the complete enumeration; indices follow its order.
    pub fn from_routes(base: TwoTerminalDag, routes: Vec<Route>) -> Self {
        let mut coloring: BTreeMap<SimplexEdge, Vec<usize>> = BTreeMap::new();
        for (index, route) in routes.iter().enumerate() {
            for edge in route_simplex_of(route) {
                coloring.entry(edge).or_default().push(index);
            }
        }
        let mut succ = vec![Vec::new(); base.vertex_count()];
        for edge in coloring.keys() {
            succ[edge.from].push(edge.to);
        }
        Self { base, routes, coloring, succ }
    }

    pub fn dag(&self) -> &TwoTerminalDag {
        &self.base
    }

    pub fn routes(&self) -> &[Route] {
        &self.routes
    }

    pub fn route(&self, index: usize) -> &Route {
        &self.routes[index]
    }

    pub fn vertex_count(&self) -> usize {
        self.base.vertex_count()
    }

    /// R(E) in lexicographic order.
    pub fn edges(&self) -> impl ExactSizeIterator<Item = SimplexEdge> + '_ {
        self.coloring.keys().copied()
    }

    pub fn edge_count(&self) -> usize {
        self.coloring.len()
    }

    pub fn contains(&self, from: usize, to: usize) -> bool {
        self.coloring.contains_key(&SimplexEdge::new(from, to))
    }

    /// Route indices containing `from` before `to`; empty when the pair is
    /// not a simplex edge.
    pub fn color_of(&self, from: usize, to: usize) -> &[usize] {
        self.coloring.get(&SimplexEdge::new(from, to)).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn coloring(&self) -> &BTreeMap<SimplexEdge, Vec<usize>> {
        &self.coloring
    }

    /// Simplex-edge successors of `v`, ascending.
    pub fn successors(&self, v: usize) -> &[usize] {
        &self.succ[v]
    }
}

pub fn color_of(simplex: &ColoredRouteSimplex, from: usize, to: usize) -> &[usize] {
    simplex.color_of(from, to)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::route::DEFAULT_ROUTE_CAP;

    fn simplex(g: &TwoTerminalDag) -> ColoredRouteSimplex {
        colored_route_simplex(g, DEFAULT_ROUTE_CAP).unwrap()
    }

    #[test]
    fn route_simplex_sizes() {
        let one = Route::new(vec![0, 1], 2).unwrap();
        assert_eq!(route_simplex_of(&one).into_iter().collect::<Vec<_>>(), [SimplexEdge::new(0, 1)]);
        let three = Route::new(vec![0, 1, 2], 3).unwrap();
        assert_eq!(
            route_simplex_of(&three).into_iter().collect::<Vec<_>>(),
            [SimplexEdge::new(0, 1), SimplexEdge::new(0, 2), SimplexEdge::new(1, 2)]
        );
        let four = Route::new(vec![0, 1, 2, 6], 7).unwrap();
        assert_eq!(route_simplex_of(&four).len(), 6);
    }

    #[test]
    fn k12_coloring() {
        let s = simplex(&fixtures::k12());
        assert_eq!(s.edge_count(), 1);
        assert_eq!(s.color_of(0, 1), &[0]);
    }

    #[test]
    fn four_route_coloring() {
        let g = fixtures::four_route();
        let s = simplex(&g);
        let ix = |n| g.index_of(n).unwrap();
        assert_eq!(s.color_of(ix("o"), ix("1")), &[0, 1]);
        // Only (o,1,2,4,d), which is route 0 in canonical order.
        assert_eq!(s.color_of(ix("2"), ix("4")), &[0]);
        assert!(color_of(&s, ix("5"), ix("4")).is_empty());
        assert!(!s.contains(ix("1"), ix("3")));
        assert_eq!(s.color_of(ix("o"), ix("d")), &[0, 1, 2, 3]);
    }

    #[test]
    fn diamond_origin_destination_edge_has_every_color() {
        let s = simplex(&fixtures::diamond());
        assert_eq!(s.color_of(0, s.vertex_count() - 1), &[0, 1]);
        assert_eq!(s.edge_count(), 5);
    }

    #[test]
    fn simplex_contains_base_edges() {
        for g in [fixtures::four_route(), fixtures::braess(), fixtures::chained_triangles()] {
            let s = simplex(&g);
            for &(u, v) in g.edges() {
                assert!(s.contains(u, v));
            }
        }
    }
}
