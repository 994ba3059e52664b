//! Brute-force reference computations written directly from the definitions,
//! sharing nothing with the library beyond reading the validated graph.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use flowhom::TwoTerminalDag;
use rand::rngs::StdRng;
use rand::SeedableRng;

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// Every origin-destination route, by recursion over the raw edge list.
pub fn routes(dag: &TwoTerminalDag) -> Vec<Vec<usize>> {
    fn walk(edges: &[(usize, usize)], d: usize, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let at = *path.last().unwrap();
        if at == d {
            out.push(path.clone());
            return;
        }
        for &(u, v) in edges {
            if u == at {
                path.push(v);
                walk(edges, d, path, out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    walk(dag.edges(), dag.destination(), &mut vec![dag.origin()], &mut out);
    out.sort();
    out
}

fn position(route: &[usize], v: usize) -> Option<usize> {
    route.iter().position(|&x| x == v)
}

/// Indices of routes visiting `i` strictly before `j`.
pub fn color(routes: &[Vec<usize>], i: usize, j: usize) -> Vec<usize> {
    routes
        .iter()
        .enumerate()
        .filter(|(_, r)| matches!((position(r, i), position(r, j)), (Some(a), Some(b)) if a < b))
        .map(|(c, _)| c)
        .collect()
}

pub fn coloring(dag: &TwoTerminalDag, routes: &[Vec<usize>]) -> BTreeMap<(usize, usize), Vec<usize>> {
    let n = dag.vertex_count();
    let mut out = BTreeMap::new();
    for i in 0..n {
        for j in 0..n {
            let c = color(routes, i, j);
            if !c.is_empty() {
                out.insert((i, j), c);
            }
        }
    }
    out
}

/// The vertices of `route` from `i` to `j` inclusive.
pub fn segment(route: &[usize], i: usize, j: usize) -> Vec<usize> {
    let (a, b) = (position(route, i).unwrap(), position(route, j).unwrap());
    route[a..=b].to_vec()
}

/// Some α through i0 → i2 and β through i0 → i1 → i2 with
/// V_α^{i0→i2} ∩ V_β = {i0, i2}; `segment_only` intersects with β's own
/// i0 → i2 segment instead of all of β.
pub fn is_triangle(routes: &[Vec<usize>], i0: usize, i1: usize, i2: usize, segment_only: bool) -> bool {
    Positions::new(routes).is_triangle(i0, i1, i2, segment_only)
}

/// Route positions and vertex bitmasks, for graphs of up to 64 vertices.
struct Positions<'r> {
    routes: &'r [Vec<usize>],
    at: Vec<BTreeMap<usize, usize>>,
}

impl<'r> Positions<'r> {
    fn new(routes: &'r [Vec<usize>]) -> Self {
        let at = routes.iter().map(|r| r.iter().enumerate().map(|(k, &v)| (v, k)).collect()).collect();
        Self { routes, at }
    }

    fn mask(vertices: &[usize]) -> u64 {
        vertices.iter().fold(0, |m, &v| m | 1 << v)
    }

    fn before(&self, r: usize, i: usize, j: usize) -> bool {
        matches!((self.at[r].get(&i), self.at[r].get(&j)), (Some(a), Some(b)) if a < b)
    }

    fn segment_mask(&self, r: usize, i: usize, j: usize) -> u64 {
        Self::mask(&self.routes[r][self.at[r][&i]..=self.at[r][&j]])
    }

    fn is_triangle(&self, i0: usize, i1: usize, i2: usize, segment_only: bool) -> bool {
        let n = self.routes.len();
        let alphas: Vec<usize> = (0..n).filter(|&a| self.before(a, i0, i2)).collect();
        let betas: Vec<usize> = (0..n).filter(|&b| self.before(b, i0, i1) && self.before(b, i1, i2)).collect();
        let ends = 1u64 << i0 | 1 << i2;
        alphas.iter().any(|&a| {
            let seg = self.segment_mask(a, i0, i2);
            betas.iter().any(|&b| {
                let beta = if segment_only { self.segment_mask(b, i0, i2) } else { Self::mask(&self.routes[b]) };
                seg & beta == ends
            })
        })
    }
}

/// Δ_p by testing every ascending (p+1)-tuple: consecutive pairs colored,
/// consecutive triples triangles.
pub fn delta(dag: &TwoTerminalDag, routes: &[Vec<usize>], p: usize) -> Vec<Vec<usize>> {
    Brute::new(dag, routes).delta(p)
}

/// Δ_2, Δ_3, ... up to the first empty level, as plain vertex lists.
pub fn all_levels(dag: &TwoTerminalDag, routes: &[Vec<usize>]) -> Vec<Vec<Vec<usize>>> {
    let mut brute = Brute::new(dag, routes);
    let mut out = Vec::new();
    for p in 2.. {
        let level = brute.delta(p);
        if level.is_empty() {
            break;
        }
        out.push(level);
    }
    out
}

struct Brute<'r> {
    n: usize,
    positions: Positions<'r>,
    colored: BTreeSet<(usize, usize)>,
    triangles: BTreeMap<(usize, usize, usize), bool>,
}

impl<'r> Brute<'r> {
    fn new(dag: &TwoTerminalDag, routes: &'r [Vec<usize>]) -> Self {
        let n = dag.vertex_count();
        let positions = Positions::new(routes);
        let colored = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|&(i, j)| (0..routes.len()).any(|r| positions.before(r, i, j)))
            .collect();
        Self { n, positions, colored, triangles: BTreeMap::new() }
    }

    fn delta(&mut self, p: usize) -> Vec<Vec<usize>> {
        let n = self.n;
        let mut out = Vec::new();
        for mask in 0u64..(1 << n) {
            if mask.count_ones() as usize != p + 1 {
                continue;
            }
            let t: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
            if !t.windows(2).all(|w| self.colored.contains(&(w[0], w[1]))) {
                continue;
            }
            let positions = &self.positions;
            let robust = t.windows(3).all(|w| {
                *self
                    .triangles
                    .entry((w[0], w[1], w[2]))
                    .or_insert_with(|| positions.is_triangle(w[0], w[1], w[2], false))
            });
            if robust {
                out.push(t);
            }
        }
        out.sort();
        out
    }
}

/// Rank over the rationals by fraction-free elimination in i128.
pub fn rank(matrix: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<i128>> = matrix.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(pivot) = (r..rows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, pivot);
        for i in r + 1..rows {
            if m[i][c] != 0 {
                let (a, b) = (m[r][c], m[i][c]);
                let pivot_row = m[r].clone();
                for (x, &y) in m[i].iter_mut().zip(&pivot_row).skip(c) {
                    *x = *x * a - y * b;
                }
                let g = m[i].iter().fold(0i128, |g, &x| gcd(g, x.abs()));
                if g > 1 {
                    m[i].iter_mut().for_each(|x| *x /= g);
                }
            }
        }
        r += 1;
    }
    r
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Does the graph contain internally disjoint paths realising a Wheatstone
/// bridge on `t`? Tries every assignment of path vertex sets by brute force
/// over simple paths.
pub fn has_bridge(dag: &TwoTerminalDag, t: [usize; 4]) -> bool {
    fn simple_paths(dag: &TwoTerminalDag, s: usize, e: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut stack = vec![vec![s]];
        while let Some(p) = stack.pop() {
            let at = *p.last().unwrap();
            if at == e {
                out.push(p[1..p.len() - 1].to_vec());
                continue;
            }
            for &(u, v) in dag.edges() {
                if u == at {
                    let mut q = p.clone();
                    q.push(v);
                    stack.push(q);
                }
            }
        }
        out
    }
    let demands = [(t[0], t[1]), (t[0], t[2]), (t[1], t[2]), (t[1], t[3]), (t[2], t[3])];
    let options: Vec<Vec<Vec<usize>>> = demands.iter().map(|&(s, e)| simple_paths(dag, s, e)).collect();
    fn choose(options: &[Vec<Vec<usize>>], taken: &mut BTreeSet<usize>) -> bool {
        let Some((first, rest)) = options.split_first() else {
            return true;
        };
        first.iter().any(|interior| {
            if interior.iter().any(|v| taken.contains(v)) {
                return false;
            }
            taken.extend(interior.iter().copied());
            let ok = choose(rest, taken);
            for v in interior {
                taken.remove(v);
            }
            ok
        })
    }
    let mut taken: BTreeSet<usize> = t.into_iter().collect();
    taken.len() == 4 && choose(&options, &mut taken)
}
