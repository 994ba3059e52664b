//! Braess sites: Wheatstone-bridge embeddings located by robust 3-paths.
//!
//! A robust 3-path `(a, b, c, e)` carries triangulating pairs `(α1, β1)` for
//! `(a, b, c)` and `(α2, β2)` for `(b, c, e)`. When the segments `α1[a→c]`
//! and `α2[b→e]` are disjoint the 3-path itself is the site. Otherwise let
//! `q` be the last vertex they share and `v` the last vertex shared by
//! `α2[b→e]` and `β1[b→c]`; the site is `(a, v, q, e)` when `v` precedes
//! `q` on `α2` and `(a, b, q, e)` when it follows.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::graph::TwoTerminalDag;
use crate::robust::{RobustPath, RobustPathIndex, TriangleSemantics};
use crate::route::intersect_routes;
use crate::simplex::ColoredRouteSimplex;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum BraessCase {
    Case1,
    Case2a,
    Case2b,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BraessSite {
    pub tuple: [usize; 4],
    pub source_path: [usize; 4],
    pub case_label: BraessCase,
    pub verified: bool,
}

pub fn braess_sites(simplex: &ColoredRouteSimplex) -> Vec<BraessSite> {
    let index = RobustPathIndex::new(simplex, TriangleSemantics::Literal);
    sites_from(&index)
}

/// Sites for every robust 3-path of `index`, deduplicated by tuple; the
/// first source path in canonical order is kept.
pub fn sites_from(index: &RobustPathIndex<'_>) -> Vec<BraessSite> {
    let simplex = index.simplex();
    let mut by_tuple: BTreeMap<[usize; 4], BraessSite> = BTreeMap::new();
    for path in index.level(3) {
        let (tuple, case_label) = classify(simplex, &path);
        by_tuple.entry(tuple).or_insert_with(|| BraessSite {
            tuple,
            source_path: path.vertices[..].try_into().expect("3-path has four vertices"),
            case_label,
            verified: verify_braess_embedding(simplex.dag(), tuple),
        });
    }
    let mut sites: Vec<BraessSite> = by_tuple.into_values().collect();
    sites.sort_by_key(|s| (s.source_path, s.tuple));
    sites
}

fn classify(simplex: &ColoredRouteSimplex, path: &RobustPath) -> ([usize; 4], BraessCase) {
    let [a, b, c, e] = path.vertices[..] else {
        panic!("classify expects a robust 3-path");
    };
    let (w1, w2) = (path.witnesses[0], path.witnesses[1]);
    let (alpha1, beta1, alpha2) = (simplex.route(w1.alpha), simplex.route(w1.beta), simplex.route(w2.alpha));

    let seg_alpha1 = alpha1.segment(a, c).expect("alpha1 spans a..c");
    let seg_alpha2 = alpha2.segment(b, e).expect("alpha2 spans b..e");
    let shared = intersect_routes(&seg_alpha1, &seg_alpha2).expect("routes of one DAG are order-consistent");
    let Some(q) = shared.last_exit() else {
        return ([a, b, c, e], BraessCase::Case1);
    };

    let seg_beta1 = beta1.segment(b, c).expect("beta1 spans b..c");
    let toward_beta = intersect_routes(&seg_alpha2, &seg_beta1).expect("routes of one DAG are order-consistent");
    let v = toward_beta.last_exit().expect("both segments start at b");
    if alpha2.rank(v) < alpha2.rank(q) {
        ([a, v, q, e], BraessCase::Case2a)
    } else {
        ([a, b, q, e], BraessCase::Case2b)
    }
}

/// True iff the DAG contains internally disjoint paths
/// `t0→t1, t0→t2, t1→t2, t1→t3, t2→t3` avoiding the other branch vertices,
/// i.e. a subdivided Wheatstone bridge with the tuple as branch vertices.
pub fn verify_braess_embedding(dag: &TwoTerminalDag, tuple: [usize; 4]) -> bool {
    let n = dag.vertex_count();
    if tuple.iter().any(|&t| t >= n) {
        return false;
    }
    let mut used = vec![false; n];
    for &t in &tuple {
        if used[t] {
            return false;
        }
        used[t] = true;
    }
    let [t0, t1, t2, t3] = tuple;
    let demands = [(t0, t1), (t0, t2), (t1, t2), (t1, t3), (t2, t3)];
    route_demands(dag, &demands, &mut used)
}

fn route_demands(dag: &TwoTerminalDag, demands: &[(usize, usize)], used: &mut [bool]) -> bool {
    let Some((&(s, t), rest)) = demands.split_first() else {
        return true;
    };
    let mut interior = Vec::new();
    extend_path(dag, s, t, rest, used, &mut interior)
}

// Depth-first over s→t paths whose interior avoids `used`; each complete
// path reserves its interior while the remaining demands are routed.
fn extend_path(
    dag: &TwoTerminalDag,
    at: usize,
    target: usize,
    rest: &[(usize, usize)],
    used: &mut [bool],
    interior: &mut Vec<usize>,
) -> bool {
    for &next in dag.successors(at) {
        if next == target {
            if route_demands(dag, rest, used) {
                return true;
            }
        } else if !used[next] && next < target {
            used[next] = true;
            interior.push(next);
            let found = extend_path(dag, next, target, rest, used, interior);
            interior.pop();
            used[next] = false;
            if found {
                return true;
            }
        }
    }
    false
}
