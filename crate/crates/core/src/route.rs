//! Routes, their segments and pairwise intersections.

use crate::error::{Error, Result};
use crate::graph::TwoTerminalDag;

pub const DEFAULT_ROUTE_CAP: usize = 10_000;

/// A simple directed path. `rank` maps a topological vertex index to its
/// position on the route.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Route {
    vertices: Vec<usize>,
    rank: Vec<Option<usize>>,
}

impl Route {
    /// `universe` is the vertex count of the ambient graph. Returns `None`
    /// if the sequence is empty, repeats a vertex or leaves the universe.
    pub fn new(vertices: Vec<usize>, universe: usize) -> Option<Self> {
        if vertices.is_empty() {
            return None;
        }
        let mut rank = vec![None; universe];
        for (pos, &v) in vertices.iter().enumerate() {
            let slot = rank.get_mut(v)?;
            if slot.is_some() {
                return None;
            }
            *slot = Some(pos);
        }
        Some(Self { vertices, rank })
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn rank(&self, v: usize) -> Option<usize> {
        self.rank.get(v).copied().flatten()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.rank(v).is_some()
    }

    /// True if `i` and `j` are both on the route with `i` strictly first.
    pub fn precedes(&self, i: usize, j: usize) -> bool {
        matches!((self.rank(i), self.rank(j)), (Some(a), Some(b)) if a < b)
    }

    pub fn first(&self) -> usize {
        self.vertices[0]
    }

    pub fn last(&self) -> usize {
        *self.vertices.last().expect("routes are non-empty")
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.len() == 1
    }

    /// The sub-route from `i` to `j`. `segment(i, i)` is the single vertex.
    pub fn segment(&self, i: usize, j: usize) -> Result<Route> {
        let a = self.rank(i).ok_or(Error::NotOnRoute(i))?;
        let b = self.rank(j).ok_or(Error::NotOnRoute(j))?;
        if a > b {
            return Err(Error::OrderViolation(i, j));
        }
        Ok(Route::new(self.vertices[a..=b].to_vec(), self.rank.len()).expect("sub-sequence of a route"))
    }

    /// Vertices strictly between `i` and `j` on this route; both must be
    /// present with `i` first.
    pub(crate) fn interior(&self, i: usize, j: usize) -> &[usize] {
        let (a, b) = (self.rank[i].unwrap(), self.rank[j].unwrap());
        &self.vertices[a + 1..b]
    }
}

pub fn route_segment(route: &Route, i: usize, j: usize) -> Result<Route> {
    route.segment(i, j)
}

/// All origin-destination routes in lexicographic order of their vertex
/// sequences. The position in the returned vector is the route index.
pub fn enumerate_routes(dag: &TwoTerminalDag, cap: usize) -> Result<Vec<Route>> {
    let n = dag.vertex_count();
    let (o, d) = (dag.origin(), dag.destination());
    let mut routes = Vec::new();
    let mut path = vec![o];
    // Iterator position into the successor list of each vertex on the path.
    let mut cursor = vec![0usize];
    while let Some(&top) = path.last() {
        if top == d {
            if routes.len() == cap {
                return Err(Error::RouteExplosion(cap));
            }
            routes.push(Route::new(path.clone(), n).expect("DAG paths are simple"));
            path.pop();
            cursor.pop();
            continue;
        }
        let depth = cursor.len() - 1;
        match dag.successors(top).get(cursor[depth]) {
            Some(&next) => {
                cursor[depth] += 1;
                path.push(next);
                cursor.push(0);
            }
            None => {
                path.pop();
                cursor.pop();
            }
        }
    }
    Ok(routes)
}

/// Maximal shared segments of two routes, in route order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct IntersectionDecomposition {
    pub segments: Vec<(usize, usize)>,
}

impl IntersectionDecomposition {
    pub fn is_empty(&self) -> bool {
        self.segments.is_empty()
    }

    /// Exit vertex of the last segment.
    pub fn last_exit(&self) -> Option<usize> {
        self.segments.last().map(|&(_, q)| q)
    }

    /// Union of the segment vertex sets, read off `route`.
    pub fn vertices_on(&self, route: &Route) -> Vec<usize> {
        self.segments.iter().flat_map(|&(p, q)| route.segment(p, q).expect("segment of this route").vertices).collect()
    }
}

/// Splits the common vertices of `r1` and `r2` into maximal runs that are
/// contiguous on both routes.
pub fn intersect_routes(r1: &Route, r2: &Route) -> Result<IntersectionDecomposition> {
    let mut segments: Vec<(usize, usize)> = Vec::new();
    let mut prev: Option<(usize, usize, usize)> = None;
    for (pos1, &v) in r1.vertices().iter().enumerate() {
        let Some(pos2) = r2.rank(v) else { continue };
        match prev {
            Some((u, _, p2)) if pos2 <= p2 => return Err(Error::InconsistentOrder(u, v)),
            Some((_, p1, p2)) if pos1 == p1 + 1 && pos2 == p2 + 1 => {
                segments.last_mut().expect("open segment").1 = v;
            }
            _ => segments.push((v, v)),
        }
        prev = Some((v, pos1, pos2));
    }
    Ok(IntersectionDecomposition { segments })
}
