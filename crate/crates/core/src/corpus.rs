//! Generators for graph corpora: exhaustive small two-terminal DAGs,
//! random two-terminal DAGs and random series-parallel decomposition trees.

use rand::Rng;

use crate::graph::{TwoTerminalDag, VertexId};
use crate::route::enumerate_routes;
use crate::sp::DecompositionTree;

/// `v00`, `v01`, ...; lexicographic order equals numeric order.
pub fn vertex_name(prefix: &str, i: usize) -> VertexId {
    VertexId::from(format!("{prefix}{i:02}").as_str())
}

fn from_index_edges(n: usize, edges: &[(usize, usize)]) -> Option<TwoTerminalDag> {
    let names: Vec<VertexId> = (0..n).map(|i| vertex_name("v", i)).collect();
    TwoTerminalDag::new(
        names.iter().cloned(),
        edges.iter().map(|&(u, v)| (names[u].clone(), names[v].clone())),
        names[0].clone(),
        names[n - 1].clone(),
    )
    .ok()
}

/// Every two-terminal DAG on `n ≥ 2` vertices labelled by its own canonical
/// topological order, so each isomorphism class appears at least once and
/// relabelings that Kahn's algorithm would reorder are skipped.
pub fn exhaustive(n: usize) -> impl Iterator<Item = TwoTerminalDag> {
    assert!((2..=8).contains(&n), "exhaustive enumeration is limited to 2..=8 vertices");
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let total: u64 = 1 << pairs.len();
    (0..total).filter_map(move |mask| {
        let edges: Vec<(usize, usize)> =
            pairs.iter().enumerate().filter(|&(b, _)| mask >> b & 1 == 1).map(|(_, &e)| e).collect();
        (is_two_terminal(n, &edges) && kahn_is_identity(n, &edges))
            .then(|| from_index_edges(n, &edges).expect("checked two-terminal"))
    })
}

fn is_two_terminal(n: usize, edges: &[(usize, usize)]) -> bool {
    // Edges ascend, so one sweep each way settles reachability.
    let mut fwd = vec![false; n];
    fwd[0] = true;
    for &(u, v) in edges {
        fwd[v] |= fwd[u];
    }
    let mut bwd = vec![false; n];
    bwd[n - 1] = true;
    for &(u, v) in edges.iter().rev() {
        bwd[u] |= bwd[v];
    }
    (0..n).all(|i| fwd[i] && bwd[i])
}

fn kahn_is_identity(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut indeg = vec![0usize; n];
    for &(_, v) in edges {
        indeg[v] += 1;
    }
    let mut emitted = vec![false; n];
    for step in 0..n {
        let next = (0..n).find(|&i| !emitted[i] && indeg[i] == 0);
        if next != Some(step) {
            return false;
        }
        emitted[step] = true;
        for &(u, v) in edges {
            if u == step {
                indeg[v] -= 1;
            }
        }
    }
    true
}

/// A random two-terminal DAG on `min_n..=max_n` vertices named `{prefix}NN`,
/// resampled until it has at most `max_routes` routes.
pub fn random_two_terminal<R: Rng>(
    rng: &mut R,
    min_n: usize,
    max_n: usize,
    max_routes: usize,
    prefix: &str,
) -> TwoTerminalDag {
    assert!(min_n >= 2 && min_n <= max_n);
    loop {
        let n = rng.random_range(min_n..=max_n);
        let density: f64 = rng.random_range(0.15..0.75);
        let mut adj = vec![vec![false; n]; n];
        for (i, row) in adj.iter_mut().enumerate() {
            for cell in row.iter_mut().skip(i + 1) {
                *cell = rng.random_bool(density);
            }
        }
        for v in 1..n {
            if !(0..v).any(|u| adj[u][v]) {
                adj[rng.random_range(0..v)][v] = true;
            }
        }
        for u in 0..n - 1 {
            if !(u + 1..n).any(|v| adj[u][v]) {
                adj[u][rng.random_range(u + 1..n)] = true;
            }
        }
        let names: Vec<VertexId> = (0..n).map(|i| vertex_name(prefix, i)).collect();
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| adj[u][v]);
        let dag = TwoTerminalDag::new(
            names.iter().cloned(),
            edges.map(|(u, v)| (names[u].clone(), names[v].clone())).collect::<Vec<_>>(),
            names[0].clone(),
            names[n - 1].clone(),
        )
        .expect("every vertex has a predecessor and a successor");
        if enumerate_routes(&dag, max_routes).is_ok() {
            return dag;
        }
    }
}

/// Fresh vertex names `{prefix}NNN`.
pub struct NameSource {
    prefix: String,
    next: usize,
}

impl NameSource {
    pub fn new(prefix: impl Into<String>) -> Self {
        Self { prefix: prefix.into(), next: 0 }
    }

    pub fn fresh(&mut self) -> VertexId {
        let name = VertexId::from(format!("{}{:03}", self.prefix, self.next).as_str());
        self.next += 1;
        name
    }
}

/// A random series-parallel decomposition tree from `origin` to
/// `destination` of depth at most `max_depth`. With `allow_direct_edge`
/// false the tree contains no edge `origin → destination`, which lets it be
/// combined in parallel with a tree that does.
pub fn random_sp_tree<R: Rng>(
    rng: &mut R,
    origin: &VertexId,
    destination: &VertexId,
    max_depth: usize,
    allow_direct_edge: bool,
    names: &mut NameSource,
) -> DecompositionTree {
    assert!(allow_direct_edge || max_depth >= 1);
    let leaf = allow_direct_edge && (max_depth == 0 || rng.random_bool(0.3));
    if leaf {
        return DecompositionTree::edge(origin.clone(), destination.clone());
    }
    if max_depth >= 2 && rng.random_bool(0.45) {
        let left = random_sp_tree(rng, origin, destination, max_depth - 1, allow_direct_edge, names);
        let right_may_be_edge = allow_direct_edge && !has_edge(&left, origin, destination);
        let right = random_sp_tree(rng, origin, destination, max_depth - 1, right_may_be_edge, names);
        return DecompositionTree::parallel(left, right);
    }
    let hinge = names.fresh();
    let left = random_sp_tree(rng, origin, &hinge, max_depth - 1, true, names);
    let right = random_sp_tree(rng, &hinge, destination, max_depth - 1, true, names);
    DecompositionTree::series(left, right)
}

/// Whether the tree has the leaf `from → to`.
pub fn has_edge(tree: &DecompositionTree, from: &VertexId, to: &VertexId) -> bool {
    match tree {
        DecompositionTree::Edge { from: f, to: t } => f == from && t == to,
        DecompositionTree::Series { left, right } | DecompositionTree::Parallel { left, right } => {
            has_edge(left, from, to) || has_edge(right, from, to)
        }
    }
}
