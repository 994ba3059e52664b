//! Allowed paths, triangles and robust paths of a colored route simplex.
//!
//! A triangle `(i0, i1, i2)` needs a route `alpha` through `i0 .. i2` and a
//! route `beta` through `i0 .. i1 .. i2` such that the `i0 → i2` segment of
//! `alpha` meets `beta` only in its endpoints. A robust `p`-path is an
//! allowed path all of whose consecutive triples are triangles, so the
//! levels are built by extending the previous level one vertex at a time.

use std::collections::{BTreeMap, HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::simplex::ColoredRouteSimplex;

/// Which vertex set of `beta` the `alpha` segment is tested against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TriangleSemantics {
    /// All vertices of `beta`.
    #[default]
    Literal,
    /// Only `beta`'s own `i0 → i2` segment.
    Segment,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AllowedPath {
    pub vertices: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct TriangleWitness {
    pub apex_path: [usize; 3],
    pub alpha: usize,
    pub beta: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RobustPath {
    pub vertices: Vec<usize>,
    /// One witness per consecutive triple, in order.
    pub witnesses: Vec<TriangleWitness>,
}

impl RobustPath {
    pub fn order(&self) -> usize {
        self.vertices.len() - 1
    }

    /// Contiguous sub-paths with four vertices.
    pub fn three_windows(&self) -> impl Iterator<Item = &[usize]> {
        self.vertices.windows(4)
    }
}

/// All elementary allowed `p`-paths in lexicographic order.
pub fn allowed_paths(simplex: &ColoredRouteSimplex, p: usize) -> Vec<AllowedPath> {
    let mut level: Vec<Vec<usize>> = (0..simplex.vertex_count()).map(|v| vec![v]).collect();
    for _ in 0..p {
        level = level
            .into_iter()
            .flat_map(|path| {
                let last = *path.last().expect("non-empty");
                simplex.successors(last).iter().map(move |&next| {
                    let mut ext = path.clone();
                    ext.push(next);
                    ext
                })
            })
            .collect();
    }
    level.into_iter().map(|vertices| AllowedPath { vertices }).collect()
}

pub fn find_triangle_witness(
    simplex: &ColoredRouteSimplex,
    i0: usize,
    i1: usize,
    i2: usize,
    semantics: TriangleSemantics,
) -> Result<Option<TriangleWitness>> {
    if !simplex.contains(i0, i1) || !simplex.contains(i1, i2) {
        return Err(Error::NotAllowed(i0, i1, i2));
    }
    Ok(search_witness(simplex, i0, i1, i2, semantics))
}

fn search_witness(
    simplex: &ColoredRouteSimplex,
    i0: usize,
    i1: usize,
    i2: usize,
    semantics: TriangleSemantics,
) -> Option<TriangleWitness> {
    let through_apex = intersect_sorted(simplex.color_of(i0, i1), simplex.color_of(i1, i2));
    if through_apex.is_empty() {
        return None;
    }
    // Alphas sharing an i0 → i2 segment with an earlier failed alpha fail too.
    let mut tried: HashSet<&[usize]> = HashSet::new();
    for &alpha in simplex.color_of(i0, i2) {
        let interior = simplex.route(alpha).interior(i0, i2);
        if !tried.insert(interior) {
            continue;
        }
        for &beta in &through_apex {
            let route = simplex.route(beta);
            // i0 and i2 are on beta by its colors; only the interior can collide.
            let collides = match semantics {
                TriangleSemantics::Literal => interior.iter().any(|&v| route.contains(v)),
                TriangleSemantics::Segment => interior.iter().any(|&v| route.interior(i0, i2).contains(&v)),
            };
            if !collides {
                return Some(TriangleWitness { apex_path: [i0, i1, i2], alpha, beta });
            }
        }
    }
    None
}

fn intersect_sorted(a: &[usize], b: &[usize]) -> Vec<usize> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// The triangle set of a simplex with an index for one-vertex extension.
#[derive(Debug, Clone)]
pub struct RobustPathIndex<'a> {
    simplex: &'a ColoredRouteSimplex,
    triangles: BTreeMap<[usize; 3], TriangleWitness>,
    // (i0, i1) -> ascending i2 with (i0, i1, i2) a triangle
    extensions: HashMap<(usize, usize), Vec<usize>>,
}

impl<'a> RobustPathIndex<'a> {
    pub fn new(simplex: &'a ColoredRouteSimplex, semantics: TriangleSemantics) -> Self {
        let mut triangles = BTreeMap::new();
        let mut extensions: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
        for edge in simplex.edges() {
            for &i2 in simplex.successors(edge.to) {
                if let Some(w) = search_witness(simplex, edge.from, edge.to, i2, semantics) {
                    triangles.insert([edge.from, edge.to, i2], w);
                    extensions.entry((edge.from, edge.to)).or_default().push(i2);
                }
            }
        }
        Self { simplex, triangles, extensions }
    }

    pub fn simplex(&self) -> &'a ColoredRouteSimplex {
        self.simplex
    }

    pub fn triangles(&self) -> &BTreeMap<[usize; 3], TriangleWitness> {
        &self.triangles
    }

    pub fn witness(&self, i0: usize, i1: usize, i2: usize) -> Option<&TriangleWitness> {
        self.triangles.get(&[i0, i1, i2])
    }

    /// Δ_p for `p ≥ 2`; empty for smaller `p`.
    pub fn level(&self, p: usize) -> Vec<RobustPath> {
        if p < 2 {
            return Vec::new();
        }
        let mut level: Vec<RobustPath> =
            self.triangles.iter().map(|(t, w)| RobustPath { vertices: t.to_vec(), witnesses: vec![*w] }).collect();
        for _ in 2..p {
            if level.is_empty() {
                break;
            }
            level = self.extend(&level);
        }
        level
    }

    /// Δ_2, Δ_3, ... up to and excluding the first empty level.
    pub fn levels(&self) -> Vec<Vec<RobustPath>> {
        let mut out = Vec::new();
        let mut level = self.level(2);
        while !level.is_empty() {
            let next = self.extend(&level);
            out.push(level);
            level = next;
        }
        out
    }

    // Lexicographic order is preserved: parents are sorted and each parent's
    // extensions are ascending.
    fn extend(&self, level: &[RobustPath]) -> Vec<RobustPath> {
        let mut next = Vec::new();
        for path in level {
            let n = path.vertices.len();
            let key = (path.vertices[n - 2], path.vertices[n - 1]);
            for &v in self.extensions.get(&key).map(Vec::as_slice).unwrap_or(&[]) {
                let mut vertices = path.vertices.clone();
                vertices.push(v);
                let mut witnesses = path.witnesses.clone();
                witnesses.push(self.triangles[&[key.0, key.1, v]]);
                next.push(RobustPath { vertices, witnesses });
            }
        }
        next
    }

    /// Largest `p` with a non-empty basis: 1 when there are simplex edges
    /// but no triangles.
    pub fn max_order(&self) -> usize {
        if self.simplex.edge_count() == 0 {
            return 0;
        }
        1 + self.levels().len()
    }
}

pub fn robust_paths(simplex: &ColoredRouteSimplex, p: usize) -> Vec<RobustPath> {
    RobustPathIndex::new(simplex, TriangleSemantics::Literal).level(p)
}

pub fn max_robust_order(simplex: &ColoredRouteSimplex) -> usize {
    RobustPathIndex::new(simplex, TriangleSemantics::Literal).max_order()
}
