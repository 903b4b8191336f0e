//! Exact minimum edge clique cover for small graphs.
//!
//! The minimum cover is searched as a set cover over edges whose candidate
//! sets are the maximal cliques: any clique of a cover can be grown to a
//! maximal one without losing coverage, so restricting to maximal cliques
//! keeps at least one optimum.

use serde::{Deserialize, Serialize};

use crate::graph::{Clique, CliqueCover, Graph};
use crate::error::{EccError, Result};

/// Hard limit for the 64-bit masks used by the clique enumeration.
pub const MAXIMAL_CLIQUE_CAP: usize = 32;
/// Default `n` cap for [`exact_ecc`].
pub const DEFAULT_ORACLE_CAP: usize = 12;
pub const DEFAULT_NODE_BUDGET: u64 = 20_000_000;

/// Environment variable overriding the oracle's `n` cap.
pub const ORACLE_CAP_ENV: &str = "ECCKIT_ORACLE_CAP";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExactConfig {
    pub max_n: usize,
    pub node_budget: u64,
}

impl Default for ExactConfig {
    fn default() -> Self {
        ExactConfig { max_n: DEFAULT_ORACLE_CAP, node_budget: DEFAULT_NODE_BUDGET }
    }
}

impl ExactConfig {
    /// Defaults, with the cap taken from `ECCKIT_ORACLE_CAP` when it parses.
    pub fn from_env() -> Self {
        let mut cfg = ExactConfig::default();
        if let Some(cap) = std::env::var(ORACLE_CAP_ENV).ok().and_then(|s| s.trim().parse().ok()) {
            cfg.max_n = cap;
        }
        cfg
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExactResult {
    pub ecc: usize,
    pub witness: CliqueCover,
    pub nodes_explored: u64,
}

fn adjacency_masks(g: &Graph) -> Vec<u64> {
    (0..g.n()).map(|v| g.neighbors(v).words()[0]).collect()
}

/// All inclusion-maximal cliques, sorted lexicographically.
pub fn maximal_cliques(g: &Graph) -> Result<Vec<Clique>> {
    let n = g.n();
    if n > MAXIMAL_CLIQUE_CAP {
        return Err(EccError::Capacity { what: "maximal_cliques", n, cap: MAXIMAL_CLIQUE_CAP });
    }
    let adj = adjacency_masks(g);
    let mut out = Vec::new();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    bron_kerbosch(&adj, 0, all, 0, &mut out);
    let mut cliques: Vec<Clique> = out.into_iter().map(mask_to_clique).collect();
    cliques.sort();
    Ok(cliques)
}

fn mask_to_clique(mut m: u64) -> Clique {
    let mut v = Vec::with_capacity(m.count_ones() as usize);
    while m != 0 {
        v.push(m.trailing_zeros() as usize);
        m &= m - 1;
    }
    Clique::new(v)
}

fn bron_kerbosch(adj: &[u64], r: u64, mut p: u64, mut x: u64, out: &mut Vec<u64>) {
    if p == 0 {
        if x == 0 {
            out.push(r);
        }
        return;
    }
    // Pivot on the vertex of P u X with the most neighbours in P.
    let mut px = p | x;
    let mut pivot = 0;
    let mut best = -1i32;
    while px != 0 {
        let u = px.trailing_zeros() as usize;
        px &= px - 1;
        let c = (adj[u] & p).count_ones() as i32;
        if c > best {
            best = c;
            pivot = u;
        }
    }
    let mut cand = p & !adj[pivot];
    while cand != 0 {
        let v = cand.trailing_zeros() as usize;
        cand &= cand - 1;
        let bit = 1u64 << v;
        bron_kerbosch(adj, r | bit, p & adj[v], x & adj[v], out);
        p &= !bit;
        x |= bit;
    }
}

/// Packed set of edge indices.
#[derive(Clone, PartialEq, Eq)]
struct EdgeMask(Vec<u64>);

impl EdgeMask {
    fn empty(len: usize) -> Self {
        EdgeMask(vec![0; len.div_ceil(64).max(1)])
    }
    fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
    fn contains(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }
    fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }
    fn first(&self) -> Option<usize> {
        self.0
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }
    fn count_and(&self, other: &EdgeMask) -> u32 {
        self.0.iter().zip(&other.0).map(|(a, b)| (a & b).count_ones()).sum()
    }
    fn remove_all(&mut self, other: &EdgeMask) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a &= !b;
        }
    }
    fn union_with(&mut self, other: &EdgeMask) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a |= b;
        }
    }
    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(i * 64 + b)
                }
            })
        })
    }
}

struct CoverSearch {
    clique_edges: Vec<EdgeMask>,
    /// `by_edge[e]`: cliques containing edge `e`.
    by_edge: Vec<Vec<usize>>,
    /// `compat[e]`: edges sharing some maximal clique with `e`.
    compat: Vec<EdgeMask>,
    best: Vec<usize>,
    chosen: Vec<usize>,
    nodes: u64,
    budget: u64,
}

impl CoverSearch {
    fn lower_bound(&self, uncovered: &EdgeMask) -> usize {
        let mut blocked = EdgeMask::empty(self.compat.len());
        let mut count = 0;
        for e in uncovered.iter() {
            if !blocked.contains(e) {
                count += 1;
                blocked.union_with(&self.compat[e]);
            }
        }
        count
    }

    fn search(&mut self, uncovered: &EdgeMask) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(EccError::Budget { what: "exact_ecc", budget: self.budget });
        }
        let Some(e) = uncovered.first() else {
            if self.chosen.len() < self.best.len() {
                self.best = self.chosen.clone();
            }
            return Ok(());
        };
        if self.chosen.len() + self.lower_bound(uncovered) >= self.best.len() {
            return Ok(());
        }
        let mut options: Vec<(u32, usize)> = self.by_edge[e]
            .iter()
            .map(|&c| (self.clique_edges[c].count_and(uncovered), c))
            .collect();
        options.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        for (_, c) in options {
            let mut rest = uncovered.clone();
            rest.remove_all(&self.clique_edges[c]);
            self.chosen.push(c);
            self.search(&rest)?;
            self.chosen.pop();
            if self.chosen.len() + 1 >= self.best.len() {
                break;
            }
        }
        Ok(())
    }
}

/// Minimum edge clique cover by branch and bound. Branches on the smallest
/// uncovered edge, prunes with a greedy upper bound and a lower bound made of
/// edges no two of which share a maximal clique.
pub fn exact_ecc(g: &Graph, cfg: ExactConfig) -> Result<ExactResult> {
    let n = g.n();
    let cap = cfg.max_n.min(MAXIMAL_CLIQUE_CAP);
    if n > cap {
        return Err(EccError::Capacity { what: "exact_ecc", n, cap });
    }
    let edges = g.edges();
    let m = edges.len();
    if m == 0 {
        return Ok(ExactResult { ecc: 0, witness: CliqueCover::default(), nodes_explored: 0 });
    }
    let mut index = vec![vec![usize::MAX; n]; n];
    for (i, &(u, v)) in edges.iter().enumerate() {
        index[u][v] = i;
        index[v][u] = i;
    }
    let cliques = maximal_cliques(g)?;
    let mut clique_edges = Vec::with_capacity(cliques.len());
    let mut by_edge = vec![Vec::new(); m];
    for (ci, c) in cliques.iter().enumerate() {
        let mut mask = EdgeMask::empty(m);
        let vs = c.vertices();
        for (a, &u) in vs.iter().enumerate() {
            for &v in &vs[a + 1..] {
                let e = index[u][v];
                mask.insert(e);
                by_edge[e].push(ci);
            }
        }
        clique_edges.push(mask);
    }
    let compat = (0..m)
        .map(|e| {
            let mut acc = EdgeMask::empty(m);
            for &c in &by_edge[e] {
                acc.union_with(&clique_edges[c]);
            }
            acc
        })
        .collect();

    let mut all = EdgeMask::empty(m);
    (0..m).for_each(|e| all.insert(e));

    // Greedy start: repeatedly take the clique covering the most uncovered edges.
    let mut greedy = Vec::new();
    let mut left = all.clone();
    while !left.is_empty() {
        let best = (0..cliques.len())
            .max_by(|&a, &b| {
                clique_edges[a]
                    .count_and(&left)
                    .cmp(&clique_edges[b].count_and(&left))
                    .then(b.cmp(&a))
            })
            .unwrap();
        left.remove_all(&clique_edges[best]);
        greedy.push(best);
    }

    let mut search = CoverSearch {
        clique_edges,
        by_edge,
        compat,
        best: greedy,
        chosen: Vec::new(),
        nodes: 0,
        budget: cfg.node_budget,
    };
    search.search(&all)?;
    let mut chosen = search.best.clone();
    chosen.sort_unstable();
    let witness = CliqueCover::new(chosen.into_iter().map(|c| cliques[c].clone()));
    Ok(ExactResult { ecc: witness.len(), witness, nodes_explored: search.nodes })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{fixtures::*, verify_cover};

    fn ecc(g: &Graph) -> usize {
        let r = exact_ecc(g, ExactConfig::default()).unwrap();
        assert!(verify_cover(g, &r.witness).valid);
        r.ecc
    }

    #[test]
    fn maximal_cliques_of_fixtures() {
        assert_eq!(maximal_cliques(&k4()).unwrap(), vec![Clique::new(0..4)]);
        let c5 = maximal_cliques(&c5()).unwrap();
        assert_eq!(c5.len(), 5);
        assert!(c5.iter().all(|c| c.len() == 2));
        assert_eq!(
            maximal_cliques(&diamond()).unwrap(),
            vec![Clique::new([0, 1, 2]), Clique::new([1, 2, 3])]
        );
        assert!(matches!(
            maximal_cliques(&Graph::empty(33).unwrap()),
            Err(EccError::Capacity { .. })
        ));
    }

    #[test]
    fn fixture_ecc_values() {
        assert_eq!(ecc(&k4()), 1);
        assert_eq!(ecc(&c5()), 5);
        assert_eq!(ecc(&diamond()), 2);
        assert_eq!(ecc(&oct()), 4);
        assert_eq!(ecc(&Graph::empty(3).unwrap()), 0);
    }

    #[test]
    fn caps_and_budgets() {
        let g = Graph::cycle(13).unwrap();
        assert!(matches!(exact_ecc(&g, ExactConfig::default()), Err(EccError::Capacity { .. })));
        let tight = ExactConfig { max_n: 12, node_budget: 0 };
        assert!(matches!(exact_ecc(&oct(), tight), Err(EccError::Budget { .. })));
        let wide = ExactConfig { max_n: 13, ..ExactConfig::default() };
        assert_eq!(exact_ecc(&g, wide).unwrap().ecc, 13);
    }
}
