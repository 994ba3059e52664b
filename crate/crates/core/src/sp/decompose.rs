//! Series-parallel recognition by recursive splitting of the route set.
//!
//! A route set from `o` to `d` splits in series at any interior vertex
//! lying on every route, and in parallel when its routes fall into at least
//! two groups with pairwise disjoint interiors. A set with several routes
//! that admits neither split is not series-parallel.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::Result;
use crate::graph::{parallel_combine, series_combine, TwoTerminalDag, VertexId};
use crate::route::enumerate_routes;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum DecompositionTree {
    Edge { from: VertexId, to: VertexId },
    Series { left: Box<DecompositionTree>, right: Box<DecompositionTree> },
    Parallel { left: Box<DecompositionTree>, right: Box<DecompositionTree> },
}

impl DecompositionTree {
    pub fn edge(from: impl Into<VertexId>, to: impl Into<VertexId>) -> Self {
        Self::Edge { from: from.into(), to: to.into() }
    }

    pub fn series(left: Self, right: Self) -> Self {
        Self::Series { left: Box::new(left), right: Box::new(right) }
    }

    pub fn parallel(left: Self, right: Self) -> Self {
        Self::Parallel { left: Box::new(left), right: Box::new(right) }
    }

    /// Rebuild the graph bottom-up with the combination operators.
    pub fn evaluate(&self) -> Result<TwoTerminalDag> {
        match self {
            Self::Edge { from, to } => TwoTerminalDag::edge(from.clone(), to.clone()),
            Self::Series { left, right } => series_combine(&left.evaluate()?, &right.evaluate()?),
            Self::Parallel { left, right } => parallel_combine(&left.evaluate()?, &right.evaluate()?),
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            Self::Edge { .. } => 0,
            Self::Series { left, right } | Self::Parallel { left, right } => 1 + left.depth().max(right.depth()),
        }
    }

    pub fn leaf_count(&self) -> usize {
        match self {
            Self::Edge { .. } => 1,
            Self::Series { left, right } | Self::Parallel { left, right } => left.leaf_count() + right.leaf_count(),
        }
    }

    /// Equality up to reordering and reassociating parallel children and
    /// reassociating series chains.
    pub fn equivalent(&self, other: &Self) -> bool {
        self.shape() == other.shape()
    }

    fn shape(&self) -> Shape {
        match self {
            Self::Edge { from, to } => Shape::Edge(from.clone(), to.clone()),
            Self::Series { .. } => {
                let mut parts = Vec::new();
                self.collect_series(&mut parts);
                Shape::Series(parts)
            }
            Self::Parallel { .. } => {
                let mut parts = Vec::new();
                self.collect_parallel(&mut parts);
                parts.sort();
                Shape::Parallel(parts)
            }
        }
    }

    fn collect_series(&self, out: &mut Vec<Shape>) {
        match self {
            Self::Series { left, right } => {
                left.collect_series(out);
                right.collect_series(out);
            }
            other => out.push(other.shape()),
        }
    }

    fn collect_parallel(&self, out: &mut Vec<Shape>) {
        match self {
            Self::Parallel { left, right } => {
                left.collect_parallel(out);
                right.collect_parallel(out);
            }
            other => out.push(other.shape()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
enum Shape {
    Edge(VertexId, VertexId),
    Series(Vec<Shape>),
    Parallel(Vec<Shape>),
}

/// Decomposition tree of `dag` if it is series-parallel.
pub fn recognize_series_parallel(dag: &TwoTerminalDag, route_cap: usize) -> Result<Option<DecompositionTree>> {
    let routes = enumerate_routes(dag, route_cap)?;
    let sequences: Vec<&[usize]> = routes.iter().map(|r| r.vertices()).collect();
    Ok(decompose(dag, &sequences))
}

fn decompose(dag: &TwoTerminalDag, routes: &[&[usize]]) -> Option<DecompositionTree> {
    let first = routes[0];
    if routes.len() == 1 && first.len() == 2 {
        return Some(DecompositionTree::edge(dag.name(first[0]).clone(), dag.name(first[1]).clone()));
    }

    let interior = |r: &[usize]| r[1..r.len() - 1].to_vec();
    if let Some(&hinge) = first[1..first.len() - 1].iter().find(|&&v| routes.iter().all(|r| r.contains(&v))) {
        let mut prefixes = BTreeSet::new();
        let mut suffixes = BTreeSet::new();
        for r in routes {
            let at = r.iter().position(|&v| v == hinge).expect("hinge is on every route");
            prefixes.insert(&r[..=at]);
            suffixes.insert(&r[at..]);
        }
        let left = decompose(dag, &prefixes.into_iter().collect::<Vec<_>>())?;
        let right = decompose(dag, &suffixes.into_iter().collect::<Vec<_>>())?;
        return Some(DecompositionTree::series(left, right));
    }

    // Union-find over routes joined by shared interior vertices.
    let mut parent: Vec<usize> = (0..routes.len()).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut root = x;
        while parent[root] != root {
            root = parent[root];
        }
        let mut cur = x;
        while parent[cur] != root {
            let next = parent[cur];
            parent[cur] = root;
            cur = next;
        }
        root
    }
    let mut owner = vec![None::<usize>; dag.vertex_count()];
    for (i, r) in routes.iter().enumerate() {
        for v in interior(r) {
            match owner[v] {
                Some(j) => {
                    let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                    parent[a.max(b)] = a.min(b);
                }
                None => owner[v] = Some(i),
            }
        }
    }
    let mut groups: Vec<Vec<&[usize]>> = Vec::new();
    let mut slot = vec![None::<usize>; routes.len()];
    for (i, r) in routes.iter().enumerate() {
        let root = find(&mut parent, i);
        let g = *slot[root].get_or_insert_with(|| {
            groups.push(Vec::new());
            groups.len() - 1
        });
        groups[g].push(r);
    }
    if groups.len() < 2 {
        return None;
    }
    let mut trees = groups.iter().map(|g| decompose(dag, g));
    let mut acc = trees.next()??;
    for t in trees {
        acc = DecompositionTree::parallel(acc, t?);
    }
    Some(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::route::DEFAULT_ROUTE_CAP;

    fn recognize(g: &TwoTerminalDag) -> Option<DecompositionTree> {
        recognize_series_parallel(g, DEFAULT_ROUTE_CAP).unwrap()
    }

    #[test]
    fn edge_graph_is_a_leaf() {
        assert_eq!(recognize(&fixtures::k12()), Some(DecompositionTree::edge("1", "2")));
    }

    #[test]
    fn split_pairs_matches_edge_combinatorial_representation() {
        let g = fixtures::split_pairs();
        let tree = recognize(&g).unwrap();
        let expected = DecompositionTree::parallel(
            DecompositionTree::series(DecompositionTree::edge("i0", "i1"), DecompositionTree::edge("i1", "i3")),
            DecompositionTree::series(DecompositionTree::edge("i0", "i2"), DecompositionTree::edge("i2", "i3")),
        );
        assert!(tree.equivalent(&expected));
        assert_eq!(tree.evaluate().unwrap(), g);
    }

    #[test]
    fn non_series_parallel_graphs() {
        assert_eq!(recognize(&fixtures::braess()), None);
        assert_eq!(recognize(&fixtures::four_route()), None);
        assert_eq!(recognize(&fixtures::chained_triangles()), None);
    }

    #[test]
    fn diamond_tree_depth() {
        let tree = recognize(&fixtures::diamond()).unwrap();
        assert_eq!(tree.depth(), 2);
        assert_eq!(tree.leaf_count(), 4);
    }

    #[test]
    fn parallel_with_direct_edge_and_three_branches() {
        let g = TwoTerminalDag::from_edges(
            &[("o", "d"), ("o", "a"), ("a", "d"), ("o", "b"), ("b", "d"), ("b", "c"), ("c", "d")],
            "o",
            "d",
        )
        .unwrap();
        let tree = recognize(&g).unwrap();
        assert_eq!(tree.evaluate().unwrap(), g);
        assert_eq!(tree.leaf_count(), 7);
    }

    #[test]
    fn equivalence_ignores_parallel_order_and_association() {
        let e = |a: &str, b: &str| DecompositionTree::edge(a, b);
        let path = |m: &str| DecompositionTree::series(e("o", m), e(m, "d"));
        let left = DecompositionTree::parallel(DecompositionTree::parallel(path("a"), path("b")), path("c"));
        let right = DecompositionTree::parallel(path("c"), DecompositionTree::parallel(path("b"), path("a")));
        assert!(left.equivalent(&right));
        assert!(!left.equivalent(&path("a")));
    }
}
