//! Dense simple undirected graphs and the primitive queries the cover
//! constructions are built from.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bits::VertexSet;
use crate::error::{EccError, Result};

/// Largest `n` accepted by the exact independence-number search.
pub const EXACT_ALPHA_CAP: usize = 32;

/// Immutable simple graph on vertices `0..n` with one packed adjacency row
/// per vertex.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    rows: Vec<VertexSet>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate and reversed pairs collapse.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        if n == 0 {
            return Err(EccError::Input("graph must have at least one vertex".into()));
        }
        let mut rows = vec![VertexSet::empty(n); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(EccError::Input(format!(
                    "edge ({u}, {v}) references a vertex outside 0..{n}"
                )));
            }
            if u == v {
                return Err(EccError::Input(format!("self-loop at vertex {u}")));
            }
            rows[u].insert(v);
            rows[v].insert(u);
        }
        Ok(Graph { n, rows })
    }

    /// Builds a graph from a symmetric predicate evaluated on every pair `u < v`.
    pub fn from_fn(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Result<Graph> {
        if n == 0 {
            return Err(EccError::Input("graph must have at least one vertex".into()));
        }
        let mut rows = vec![VertexSet::empty(n); n];
        for u in 0..n {
            for v in u + 1..n {
                if adjacent(u, v) {
                    rows[u].insert(v);
                    rows[v].insert(u);
                }
            }
        }
        Ok(Graph { n, rows })
    }

    pub fn complete(n: usize) -> Result<Graph> {
        Graph::from_fn(n, |_, _| true)
    }

    pub fn empty(n: usize) -> Result<Graph> {
        Graph::from_fn(n, |_, _| false)
    }

    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(EccError::Input(format!("cycle needs at least 3 vertices, got {n}")));
        }
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &edges)
    }

    pub fn path(n: usize) -> Result<Graph> {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::new(n, &edges)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    /// Open neighbourhood of `v` as a packed row.
    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.rows[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    /// All edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in self.rows[u].iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn complement(&self) -> Graph {
        let full = VertexSet::full(self.n);
        let rows = (0..self.n)
            .map(|v| {
                let mut r = full.difference(&self.rows[v]);
                r.remove(v);
                r
            })
            .collect();
        Graph { n: self.n, rows }
    }

    /// Vertices other than `x` that are not adjacent to `x`.
    pub fn non_neighborhood(&self, x: usize) -> VertexSet {
        let mut s = VertexSet::full(self.n).difference(&self.rows[x]);
        s.remove(x);
        s
    }

    pub fn is_clique<I: IntoIterator<Item = usize>>(&self, s: I) -> bool {
        let members: Vec<usize> = s.into_iter().collect();
        if members.iter().any(|&v| v >= self.n) {
            return false;
        }
        let set = VertexSet::from_iter_in(self.n, members.iter().copied());
        members.iter().all(|&v| {
            let mut rest = set.clone();
            rest.remove(v);
            rest.is_subset(&self.rows[v])
        })
    }

    pub fn is_clique_set(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| {
            let mut rest = s.clone();
            rest.remove(v);
            rest.is_subset(&self.rows[v])
        })
    }

    /// Whether the complement contains a triangle, i.e. `alpha >= 3`.
    pub fn has_independent_triple(&self) -> bool {
        let co = self.complement();
        for u in 0..self.n {
            for v in co.rows[u].iter().filter(|&v| v > u) {
                let common = co.rows[u].intersection(&co.rows[v]);
                if common.iter().any(|w| w > v) {
                    return true;
                }
            }
        }
        false
    }

    /// `alpha(G) = 2` iff the complement has an edge and no triangle. O(n^3).
    pub fn is_alpha_two(&self) -> bool {
        let complete = self.edge_count() == self.n * (self.n - 1) / 2;
        !complete && !self.has_independent_triple()
    }

    /// Size of a maximum independent set. Answers up to 2 take the complement
    /// triangle fast path; larger answers need `n <= EXACT_ALPHA_CAP`.
    pub fn independence_number(&self) -> Result<usize> {
        if self.edge_count() == self.n * (self.n - 1) / 2 {
            return Ok(1);
        }
        if !self.has_independent_triple() {
            return Ok(2);
        }
        if self.n > EXACT_ALPHA_CAP {
            return Err(EccError::Capacity {
                what: "independence_number",
                n: self.n,
                cap: EXACT_ALPHA_CAP,
            });
        }
        let co: Vec<u64> = (0..self.n).map(|v| self.complement_row_mask(v)).collect();
        let mut best = 0;
        max_clique_mask(&co, 0, (1u64 << self.n) - 1, &mut best);
        Ok(best)
    }

    fn complement_row_mask(&self, v: usize) -> u64 {
        let full = if self.n == 64 { u64::MAX } else { (1u64 << self.n) - 1 };
        !self.rows[v].words()[0] & full & !(1u64 << v)
    }

    /// Shortest-path distances from `src`; `None` for unreachable vertices.
    pub fn distances_from(&self, src: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[src] = Some(0);
        let mut queue = VecDeque::from([src]);
        while let Some(x) = queue.pop_front() {
            let d = dist[x].unwrap();
            for y in self.rows[x].iter() {
                if dist[y].is_none() {
                    dist[y] = Some(d + 1);
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    pub fn diameter(&self) -> Diameter {
        let mut best = 0;
        for s in 0..self.n {
            for d in self.distances_from(s) {
                match d {
                    Some(d) => best = best.max(d),
                    None => return Diameter::Disconnected,
                }
            }
        }
        Diameter::Finite(best)
    }

    pub fn is_connected(&self) -> bool {
        self.distances_from(0).iter().all(Option::is_some)
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let mut comp: Vec<usize> = self
                .distances_from(s)
                .iter()
                .enumerate()
                .filter_map(|(v, d)| d.map(|_| v))
                .collect();
            comp.sort_unstable();
            for &v in &comp {
                seen[v] = true;
            }
            out.push(comp);
        }
        out
    }

    /// Subgraph induced by `s`. The new labels follow the ascending order of `s`.
    pub fn induced_subgraph(&self, s: &[usize]) -> Result<InducedSubgraph> {
        let mut members: Vec<usize> = s.to_vec();
        members.sort_unstable();
        members.dedup();
        if members.is_empty() {
            return Err(EccError::Input("induced subgraph of an empty vertex set".into()));
        }
        if let Some(&v) = members.iter().find(|&&v| v >= self.n) {
            return Err(EccError::Input(format!("vertex {v} outside 0..{}", self.n)));
        }
        let m = members.len();
        let graph = Graph::from_fn(m, |a, b| self.has_edge(members[a], members[b]))?;
        Ok(InducedSubgraph { graph, to_host: members })
    }

    /// `G \ removed`, with a mapping back to host labels.
    pub fn without(&self, removed: &[usize]) -> Result<InducedSubgraph> {
        let keep: Vec<usize> = (0..self.n).filter(|v| !removed.contains(v)).collect();
        self.induced_subgraph(&keep)
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        let edges: Vec<_> = self.edges().into_iter().map(|(u, v)| (perm[u], perm[v])).collect();
        Graph::new(self.n, &edges)
    }
}

fn max_clique_mask(adj: &[u64], size: usize, mut cand: u64, best: &mut usize) {
    if cand == 0 {
        *best = (*best).max(size);
        return;
    }
    while cand != 0 {
        if size + cand.count_ones() as usize <= *best {
            return;
        }
        let v = cand.trailing_zeros() as usize;
        cand &= cand - 1;
        max_clique_mask(adj, size + 1, cand & adj[v], best);
    }
    *best = (*best).max(size);
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// An induced subgraph together with the labels its vertices carry in the host.
#[derive(Debug, Clone)]
pub struct InducedSubgraph {
    pub graph: Graph,
    /// `to_host[i]` is the host vertex behind local vertex `i`.
    pub to_host: Vec<usize>,
}

impl InducedSubgraph {
    pub fn to_local(&self, host_vertex: usize) -> Option<usize> {
        self.to_host.binary_search(&host_vertex).ok()
    }

    pub fn lift(&self, clique: &Clique) -> Clique {
        Clique::new(clique.iter().map(|v| self.to_host[v]))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Diameter {
    Finite(usize),
    Disconnected,
}

impl Diameter {
    pub fn finite(self) -> Option<usize> {
        match self {
            Diameter::Finite(d) => Some(d),
            Diameter::Disconnected => None,
        }
    }
}

impl fmt::Display for Diameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diameter::Finite(d) => write!(f, "{d}"),
            Diameter::Disconnected => f.write_str("disconnected"),
        }
    }
}

/// A vertex set, kept sorted and duplicate-free.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Clique(Vec<usize>);

impl Clique {
    pub fn new<I: IntoIterator<Item = usize>>(vertices: I) -> Clique {
        let mut v: Vec<usize> = vertices.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        Clique(v)
    }

    pub fn from_set(s: &VertexSet) -> Clique {
        Clique(s.to_vec())
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn to_set(&self, universe: usize) -> VertexSet {
        VertexSet::from_iter_in(universe, self.iter())
    }
}

impl fmt::Debug for Clique {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(&self.0).finish()
    }
}

/// A list of cliques meant to cover every edge of some host graph.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliqueCover {
    pub cliques: Vec<Clique>,
}

impl CliqueCover {
    /// Collects the given sets, dropping empty ones.
    pub fn new<I: IntoIterator<Item = Clique>>(cliques: I) -> CliqueCover {
        CliqueCover {
            cliques: cliques.into_iter().filter(|c| !c.is_empty()).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.cliques.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cliques.is_empty()
    }

    pub fn push(&mut self, c: Clique) {
        if !c.is_empty() {
            self.cliques.push(c);
        }
    }

    pub fn verify(&self, g: &Graph) -> VerificationReport {
        verify_cover(g, self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub valid: bool,
    pub first_uncovered_edge: Option<(usize, usize)>,
    pub non_clique_index: Option<usize>,
    pub size: usize,
}

/// Checks that every listed set is a nonempty clique of `g` and that every
/// edge of `g` lies inside at least one of them. Sets that fail the clique
/// test do not count towards coverage.
pub fn verify_cover(g: &Graph, cover: &CliqueCover) -> VerificationReport {
    let n = g.n();
    let mut non_clique_index = None;
    let mut reach = vec![VertexSet::empty(n); n];
    for (i, c) in cover.cliques.iter().enumerate() {
        let ok = !c.is_empty() && g.is_clique(c.iter());
        if !ok {
            non_clique_index.get_or_insert(i);
            continue;
        }
        let set = c.to_set(n);
        for v in c.iter() {
            reach[v].union_with(&set);
        }
    }
    let mut first_uncovered_edge = None;
    for u in 0..n {
        let missing = g.neighbors(u).difference(&reach[u]);
        if let Some(v) = missing.iter().find(|&v| v > u) {
            first_uncovered_edge = Some((u, v));
            break;
        }
    }
    VerificationReport {
        valid: non_clique_index.is_none() && first_uncovered_edge.is_none(),
        first_uncovered_edge,
        non_clique_index,
        size: cover.len(),
    }
}

/// Is `g` a 5-cycle (up to relabeling)?
pub fn is_five_cycle(g: &Graph) -> bool {
    g.n() == 5 && g.edge_count() == 5 && (0..5).all(|v| g.degree(v) == 2) && g.is_connected()
}

/// Small named graphs used throughout the tests and docs.
pub mod fixtures {
    use super::Graph;

    pub fn p4() -> Graph {
        Graph::path(4).unwrap()
    }

    pub fn c5() -> Graph {
        Graph::cycle(5).unwrap()
    }

    pub fn k4() -> Graph {
        Graph::complete(4).unwrap()
    }

    /// All edges except the antipodal pairs {0,3}, {1,4}, {2,5}.
    pub fn oct() -> Graph {
        Graph::from_fn(6, |u, v| v != u + 3).unwrap()
    }

    /// K4 minus the edge {0,3}.
    pub fn diamond() -> Graph {
        Graph::from_fn(4, |u, v| !(u == 0 && v == 3)).unwrap()
    }

    /// P4 on {0,1,2,3} plus two adjacent apexes 4 and 5 joined to everything.
    pub fn t1() -> Graph {
        Graph::from_fn(6, |u, v| v >= 4 || v == u + 1).unwrap()
    }
}
