//! Two-terminal directed acyclic graphs.
//!
//! Vertices are addressed by their position in the canonical topological
//! order (Kahn's algorithm, ties broken by the lexicographically smallest
//! name). Every index-based API in this crate uses that position, so the
//! numeric order of indices is always a linear extension of the partial
//! order of the graph.

use std::borrow::Borrow;
use std::cmp::Reverse;
use std::collections::{BTreeMap, BTreeSet, BinaryHeap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexId(String);

impl VertexId {
    pub fn new(name: impl Into<String>) -> Result<Self> {
        let name = name.into();
        if name.is_empty() {
            return Err(Error::EmptyVertexName);
        }
        Ok(Self(name))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl Borrow<str> for VertexId {
    fn borrow(&self) -> &str {
        &self.0
    }
}

impl From<&str> for VertexId {
    /// Panics on the empty string; use [`VertexId::new`] for untrusted input.
    fn from(name: &str) -> Self {
        Self::new(name).expect("vertex names must be non-empty")
    }
}

/// How [`build_two_terminal`] treats vertices and edges that lie on no
/// origin-destination path.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum BuildMode {
    #[default]
    Strict,
    Prune,
}

/// Elements removed by [`BuildMode::Prune`].
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Pruned {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<(VertexId, VertexId)>,
}

impl Pruned {
    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty() && self.edges.is_empty()
    }
}

#[derive(Debug, Clone)]
pub struct TwoTerminalDag {
    names: Vec<VertexId>,
    index: BTreeMap<VertexId, usize>,
    succ: Vec<Vec<usize>>,
    pred: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
    origin: usize,
    destination: usize,
}

impl PartialEq for TwoTerminalDag {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names && self.edges == other.edges
    }
}

impl Eq for TwoTerminalDag {}

pub fn build_two_terminal<V, E>(
    vertices: V,
    edges: E,
    origin: VertexId,
    destination: VertexId,
    mode: BuildMode,
) -> Result<(TwoTerminalDag, Pruned)>
where
    V: IntoIterator<Item = VertexId>,
    E: IntoIterator<Item = (VertexId, VertexId)>,
{
    let vertices: BTreeSet<VertexId> = vertices.into_iter().collect();
    let edges: BTreeSet<(VertexId, VertexId)> = edges.into_iter().collect();

    for terminal in [&origin, &destination] {
        if !vertices.contains(terminal) {
            return Err(Error::MissingTerminal(terminal.clone()));
        }
    }
    if origin == destination {
        return Err(Error::DegenerateTerminals(origin));
    }
    for (u, v) in &edges {
        if !vertices.contains(u) || !vertices.contains(v) {
            return Err(Error::UnknownVertex(u.clone(), v.clone()));
        }
    }

    // Acyclicity is checked on the full input before anything is pruned.
    let names: Vec<VertexId> = vertices.into_iter().collect();
    let pos: BTreeMap<&VertexId, usize> = names.iter().enumerate().map(|(i, n)| (n, i)).collect();
    let idx_edges: Vec<(usize, usize)> = edges.iter().map(|(u, v)| (pos[u], pos[v])).collect();
    kahn_lexicographic(names.len(), &idx_edges).map_err(|stuck| {
        let cycle = cycle_among(names.len(), &idx_edges, &stuck);
        Error::CycleDetected(cycle.into_iter().map(|i| names[i].clone()).collect())
    })?;

    let (o, d) = (pos[&origin], pos[&destination]);
    let forward = reach(names.len(), &idx_edges, o, false);
    let backward = reach(names.len(), &idx_edges, d, true);
    if !forward[d] {
        return Err(Error::Disconnected { origin, destination });
    }

    let mut pruned = Pruned::default();
    for (i, name) in names.iter().enumerate() {
        if !(forward[i] && backward[i]) {
            pruned.vertices.push(name.clone());
        }
    }
    for &(u, v) in &idx_edges {
        if !(forward[u] && backward[v]) {
            pruned.edges.push((names[u].clone(), names[v].clone()));
        }
    }
    if mode == BuildMode::Strict && !pruned.is_empty() {
        return Err(Error::NotTwoTerminal { vertices: pruned.vertices, edges: pruned.edges });
    }

    let kept_names: Vec<VertexId> =
        names.iter().enumerate().filter(|&(i, _)| forward[i] && backward[i]).map(|(_, n)| n.clone()).collect();
    let kept_edges: Vec<(VertexId, VertexId)> = idx_edges
        .iter()
        .filter(|&&(u, v)| forward[u] && backward[v])
        .map(|&(u, v)| (names[u].clone(), names[v].clone()))
        .collect();
    Ok((TwoTerminalDag::assemble(kept_names, kept_edges, &origin, &destination), pruned))
}

/// Kahn's algorithm over `0..n` where the numeric index doubles as the
/// lexicographic rank of the name. Returns the vertices left over on a cycle.
fn kahn_lexicographic(n: usize, edges: &[(usize, usize)]) -> std::result::Result<Vec<usize>, Vec<usize>> {
    let mut indeg = vec![0usize; n];
    let mut succ = vec![Vec::new(); n];
    for &(u, v) in edges {
        indeg[v] += 1;
        succ[u].push(v);
    }
    let mut ready: BinaryHeap<Reverse<usize>> = (0..n).filter(|&i| indeg[i] == 0).map(Reverse).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(Reverse(u)) = ready.pop() {
        order.push(u);
        for &v in &succ[u] {
            indeg[v] -= 1;
            if indeg[v] == 0 {
                ready.push(Reverse(v));
            }
        }
    }
    if order.len() == n {
        Ok(order)
    } else {
        Err((0..n).filter(|&i| indeg[i] > 0).collect())
    }
}

// Every vertex Kahn could not emit has a predecessor that also could not be
// emitted, so walking predecessors from one of them must revisit a vertex.
fn cycle_among(n: usize, edges: &[(usize, usize)], stuck: &[usize]) -> Vec<usize> {
    let mut in_stuck = vec![false; n];
    for &v in stuck {
        in_stuck[v] = true;
    }
    let mut stuck_pred = vec![None; n];
    for &(u, v) in edges {
        if in_stuck[u] && in_stuck[v] && stuck_pred[v].is_none_or(|p| u < p) {
            stuck_pred[v] = Some(u);
        }
    }
    let mut seen_at = vec![None; n];
    let mut walk = Vec::new();
    let mut v = stuck[0];
    while seen_at[v].is_none() {
        seen_at[v] = Some(walk.len());
        walk.push(v);
        v = stuck_pred[v].expect("stuck vertices have stuck predecessors");
    }
    let mut cycle: Vec<usize> = walk[seen_at[v].unwrap()..].iter().rev().copied().collect();
    let start = cycle.iter().enumerate().min_by_key(|&(_, &x)| x).map(|(i, _)| i).unwrap();
    cycle.rotate_left(start);
    cycle
}

fn reach(n: usize, edges: &[(usize, usize)], start: usize, reverse: bool) -> Vec<bool> {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        if reverse {
            adj[v].push(u);
        } else {
            adj[u].push(v);
        }
    }
    let mut seen = vec![false; n];
    let mut stack = vec![start];
    seen[start] = true;
    while let Some(u) = stack.pop() {
        for &v in &adj[u] {
            if !seen[v] {
                seen[v] = true;
                stack.push(v);
            }
        }
    }
    seen
}

impl TwoTerminalDag {
    /// Strict-mode construction.
    pub fn new<V, E>(vertices: V, edges: E, origin: VertexId, destination: VertexId) -> Result<Self>
    where
        V: IntoIterator<Item = VertexId>,
        E: IntoIterator<Item = (VertexId, VertexId)>,
    {
        build_two_terminal(vertices, edges, origin, destination, BuildMode::Strict).map(|(g, _)| g)
    }

    /// Convenience constructor from string edges; the vertex set is the set
    /// of edge endpoints.
    pub fn from_edges(edges: &[(&str, &str)], origin: &str, destination: &str) -> Result<Self> {
        let mut vertices = BTreeSet::new();
        let mut pairs = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            let (u, v) = (VertexId::new(u)?, VertexId::new(v)?);
            vertices.insert(u.clone());
            vertices.insert(v.clone());
            pairs.push((u, v));
        }
        vertices.insert(VertexId::new(origin)?);
        vertices.insert(VertexId::new(destination)?);
        Self::new(vertices, pairs, VertexId::new(origin)?, VertexId::new(destination)?)
    }

    /// The edge graph K_{ij}.
    pub fn edge(from: VertexId, to: VertexId) -> Result<Self> {
        Self::new([from.clone(), to.clone()], [(from.clone(), to.clone())], from, to)
    }

    // Inputs are already validated: acyclic and two-terminal.
    fn assemble(
        names: Vec<VertexId>,
        edges: Vec<(VertexId, VertexId)>,
        origin: &VertexId,
        destination: &VertexId,
    ) -> Self {
        let lex: BTreeMap<&VertexId, usize> = names.iter().enumerate().map(|(i, n)| (n, i)).collect();
        let lex_edges: Vec<(usize, usize)> = edges.iter().map(|(u, v)| (lex[u], lex[v])).collect();
        let order = kahn_lexicographic(names.len(), &lex_edges).expect("validated acyclic");
        let topo_names: Vec<VertexId> = order.iter().map(|&i| names[i].clone()).collect();
        let index: BTreeMap<VertexId, usize> = topo_names.iter().cloned().enumerate().map(|(i, n)| (n, i)).collect();

        let n = topo_names.len();
        let mut succ = vec![Vec::new(); n];
        let mut pred = vec![Vec::new(); n];
        let mut idx_edges: Vec<(usize, usize)> = edges.iter().map(|(u, v)| (index[u], index[v])).collect();
        idx_edges.sort_unstable();
        for &(u, v) in &idx_edges {
            succ[u].push(v);
            pred[v].push(u);
        }
        Self {
            origin: index[origin],
            destination: index[destination],
            names: topo_names,
            index,
            succ,
            pred,
            edges: idx_edges,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn origin(&self) -> usize {
        self.origin
    }

    pub fn destination(&self) -> usize {
        self.destination
    }

    pub fn name(&self, v: usize) -> &VertexId {
        &self.names[v]
    }

    /// Vertex names in canonical topological order.
    pub fn names(&self) -> &[VertexId] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn index_of_id(&self, name: &VertexId) -> Option<usize> {
        self.index.get(name).copied()
    }

    /// Edges as topological index pairs, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn named_edges(&self) -> impl Iterator<Item = (&VertexId, &VertexId)> + '_ {
        self.edges.iter().map(move |&(u, v)| (&self.names[u], &self.names[v]))
    }

    pub fn successors(&self, v: usize) -> &[usize] {
        &self.succ[v]
    }

    pub fn predecessors(&self, v: usize) -> &[usize] {
        &self.pred[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.succ[u].binary_search(&v).is_ok()
    }

    pub fn names_of(&self, vertices: &[usize]) -> Vec<VertexId> {
        vertices.iter().map(|&v| self.names[v].clone()).collect()
    }

    /// Rename vertices, keeping the edge structure. Fails if the renaming is
    /// not injective.
    pub fn relabel(&self, mut rename: impl FnMut(&VertexId) -> VertexId) -> Result<Self> {
        let renamed: Vec<VertexId> = self.names.iter().map(&mut rename).collect();
        let distinct: BTreeSet<&VertexId> = renamed.iter().collect();
        if distinct.len() != renamed.len() {
            let mut seen = BTreeSet::new();
            let dup = renamed.iter().filter(|n| !seen.insert(*n)).cloned().collect();
            return Err(Error::VertexOverlap(dup));
        }
        Self::new(
            renamed.iter().cloned(),
            self.edges.iter().map(|&(u, v)| (renamed[u].clone(), renamed[v].clone())),
            renamed[self.origin].clone(),
            renamed[self.destination].clone(),
        )
    }
}

/// `g1 → g2`: glue the destination of `g1` to the origin of `g2`.
pub fn series_combine(g1: &TwoTerminalDag, g2: &TwoTerminalDag) -> Result<TwoTerminalDag> {
    let hinge = g1.name(g1.destination());
    if hinge != g2.name(g2.origin()) {
        return Err(Error::HingeMismatch { destination: hinge.clone(), origin: g2.name(g2.origin()).clone() });
    }
    let overlap: Vec<VertexId> =
        g1.names().iter().filter(|n| *n != hinge && g2.index_of_id(n).is_some()).cloned().collect();
    if !overlap.is_empty() {
        return Err(Error::VertexOverlap(overlap));
    }
    union(g1, g2, g1.name(g1.origin()), g2.name(g2.destination()))
}

/// `g1 || g2`: identify the two origins and the two destinations.
pub fn parallel_combine(g1: &TwoTerminalDag, g2: &TwoTerminalDag) -> Result<TwoTerminalDag> {
    let (o1, d1) = (g1.name(g1.origin()), g1.name(g1.destination()));
    let (o2, d2) = (g2.name(g2.origin()), g2.name(g2.destination()));
    if o1 != o2 || d1 != d2 {
        return Err(Error::TerminalMismatch(o1.clone(), d1.clone(), o2.clone(), d2.clone()));
    }
    let overlap: Vec<VertexId> =
        g1.names().iter().filter(|n| *n != o1 && *n != d1 && g2.index_of_id(n).is_some()).cloned().collect();
    if !overlap.is_empty() {
        return Err(Error::VertexOverlap(overlap));
    }
    let e2: BTreeSet<(&VertexId, &VertexId)> = g2.named_edges().collect();
    let shared: Vec<(VertexId, VertexId)> =
        g1.named_edges().filter(|e| e2.contains(e)).map(|(u, v)| (u.clone(), v.clone())).collect();
    if !shared.is_empty() {
        return Err(Error::DuplicateEdge(shared));
    }
    union(g1, g2, o1, d1)
}

fn union(
    g1: &TwoTerminalDag,
    g2: &TwoTerminalDag,
    origin: &VertexId,
    destination: &VertexId,
) -> Result<TwoTerminalDag> {
    let vertices = g1.names().iter().chain(g2.names()).cloned();
    let edges = g1.named_edges().chain(g2.named_edges()).map(|(u, v)| (u.clone(), v.clone()));
    TwoTerminalDag::new(vertices, edges, origin.clone(), destination.clone())
}
