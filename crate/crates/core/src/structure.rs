//! Structural predicates: dominating edges, double tops, supercycles, and the
//! routing classification that decides which cover construction applies.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bits::VertexSet;
use crate::error::{EccError, Result};
use crate::graph::{Diameter, Graph};

/// Default node-expansion budget for the supercycle search.
pub const SUPERCYCLE_BUDGET: u64 = 50_000_000;

/// `uv` is dominating when every other vertex sees `u` or `v`.
pub fn is_dominating_edge(g: &Graph, u: usize, v: usize) -> Result<bool> {
    if u >= g.n() || v >= g.n() || !g.has_edge(u, v) {
        return Err(EccError::Input(format!("({u}, {v}) is not an edge")));
    }
    Ok(dominates(g, u, v))
}

#[inline]
fn dominates(g: &Graph, u: usize, v: usize) -> bool {
    let mut seen = g.neighbors(u).union(g.neighbors(v));
    seen.insert(u);
    seen.insert(v);
    seen.len() == g.n()
}

/// Dominating edges `(u, v)`, `u < v`, in lexicographic order.
pub fn dominating_edges(g: &Graph) -> Vec<(usize, usize)> {
    g.edges().into_iter().filter(|&(u, v)| dominates(g, u, v)).collect()
}

/// The dominating-edge subgraph as adjacency rows: `rows[u]` holds every `v`
/// with `uv` a dominating edge.
#[derive(Debug, Clone)]
pub struct DominatingGraph {
    rows: Vec<VertexSet>,
}

impl DominatingGraph {
    pub fn new(g: &Graph) -> DominatingGraph {
        let n = g.n();
        let mut rows = vec![VertexSet::empty(n); n];
        for (u, v) in dominating_edges(g) {
            rows[u].insert(v);
            rows[v].insert(u);
        }
        DominatingGraph { rows }
    }

    #[inline]
    pub fn is_dominating(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    #[inline]
    pub fn neighbors(&self, u: usize) -> &VertexSet {
        &self.rows[u]
    }

    pub fn is_empty(&self) -> bool {
        self.rows.iter().all(VertexSet::is_empty)
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (u, row) in self.rows.iter().enumerate() {
            out.extend(row.iter().filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }
}

/// A path `x0 x1 x2 x3 x4` of dominating edges with `x2` adjacent to neither `x0` nor `x4`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DoubleTop {
    pub path: [usize; 5],
    /// `x1 x3` is not an edge.
    pub incompatible: bool,
}

/// All double tops, each reported once in the orientation that is
/// lexicographically smaller than its reversal.
pub fn find_double_tops(g: &Graph, incompatible_only: bool) -> Vec<DoubleTop> {
    find_double_tops_with(g, &DominatingGraph::new(g), incompatible_only)
}

pub fn find_double_tops_with(
    g: &Graph,
    dom: &DominatingGraph,
    incompatible_only: bool,
) -> Vec<DoubleTop> {
    let mut out = Vec::new();
    visit_double_tops(g, dom, |dt| {
        if !incompatible_only || dt.incompatible {
            out.push(dt);
        }
        false
    });
    out.sort_by_key(|d| d.path);
    out
}

pub fn has_incompatible_double_top(g: &Graph, dom: &DominatingGraph) -> bool {
    visit_double_tops(g, dom, |dt| dt.incompatible)
}

/// Calls `f` on each canonical double top until it returns true.
fn visit_double_tops(
    g: &Graph,
    dom: &DominatingGraph,
    mut f: impl FnMut(DoubleTop) -> bool,
) -> bool {
    let n = g.n();
    if n < 5 {
        return false;
    }
    for x2 in 0..n {
        let far = g.non_neighborhood(x2);
        let arms = dom.neighbors(x2).to_vec();
        if arms.len() < 2 {
            continue;
        }
        for &x1 in &arms {
            let ends0 = dom.neighbors(x1).intersection(&far);
            if ends0.is_empty() {
                continue;
            }
            for &x3 in &arms {
                if x3 == x1 {
                    continue;
                }
                let ends4 = dom.neighbors(x3).intersection(&far);
                for x0 in ends0.iter() {
                    for x4 in ends4.iter().filter(|&x4| x4 != x0) {
                        let path = [x0, x1, x2, x3, x4];
                        let rev = [x4, x3, x2, x1, x0];
                        if path > rev {
                            continue;
                        }
                        let dt = DoubleTop { path, incompatible: !g.has_edge(x1, x3) };
                        if f(dt) {
                            return true;
                        }
                    }
                }
            }
        }
    }
    false
}

/// A cycle `u0 .. uk` (at least four vertices) of dominating edges in which
/// `u_{i-1} u_{i+1}` is an edge for every `i`, indices taken cyclically.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Supercycle {
    pub cycle: Vec<usize>,
}

impl Supercycle {
    /// Re-checks the defining conditions against `g` edge by edge.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let c = &self.cycle;
        let len = c.len();
        if len < 4 || c.iter().any(|&v| v >= g.n()) {
            return false;
        }
        let mut sorted = c.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != len {
            return false;
        }
        (0..len).all(|i| {
            let prev = c[(i + len - 1) % len];
            let next = c[(i + 1) % len];
            g.has_edge(c[i], next) && dominates(g, c[i], next) && g.has_edge(prev, next)
        })
    }

    /// Rotation/reflection-invariant form: smallest vertex first, then the
    /// smaller of its two neighbours along the cycle.
    pub fn canonical(&self) -> Vec<usize> {
        canonical_cycle(&self.cycle)
    }
}

pub fn canonical_cycle(cycle: &[usize]) -> Vec<usize> {
    let len = cycle.len();
    if len == 0 {
        return Vec::new();
    }
    let start = (0..len).min_by_key(|&i| cycle[i]).unwrap();
    let fwd: Vec<usize> = (0..len).map(|k| cycle[(start + k) % len]).collect();
    let bwd: Vec<usize> = (0..len).map(|k| cycle[(start + len - k) % len]).collect();
    fwd.min(bwd)
}

pub fn has_supercycle(g: &Graph) -> Result<Option<Supercycle>> {
    has_supercycle_with(g, &DominatingGraph::new(g), SUPERCYCLE_BUDGET)
}

/// Depth-first search over the dominating-edge subgraph, checking the chord
/// condition as the path grows. Each cycle is explored from its smallest
/// vertex with `u1 < uk`. Exhausting `budget` expansions is an error.
pub fn has_supercycle_with(
    g: &Graph,
    dom: &DominatingGraph,
    budget: u64,
) -> Result<Option<Supercycle>> {
    let n = g.n();
    if n < 4 {
        return Ok(None);
    }
    let mut search = CycleSearch { g, dom, budget, expanded: 0, path: Vec::with_capacity(n) };
    for s in 0..n {
        if dom.neighbors(s).iter().filter(|&v| v > s).count() < 2 {
            continue;
        }
        search.path.clear();
        search.path.push(s);
        let mut on_path = VertexSet::empty(n);
        on_path.insert(s);
        if search.extend(&mut on_path)? {
            return Ok(Some(Supercycle { cycle: search.path.clone() }));
        }
    }
    Ok(None)
}

struct CycleSearch<'a> {
    g: &'a Graph,
    dom: &'a DominatingGraph,
    budget: u64,
    expanded: u64,
    path: Vec<usize>,
}

impl CycleSearch<'_> {
    fn extend(&mut self, on_path: &mut VertexSet) -> Result<bool> {
        self.expanded += 1;
        if self.expanded > self.budget {
            return Err(EccError::Budget { what: "supercycle search", budget: self.budget });
        }
        let s = self.path[0];
        let len = self.path.len();
        let last = self.path[len - 1];
        let before = if len >= 2 { Some(self.path[len - 2]) } else { None };
        let candidates: Vec<usize> = self
            .dom
            .neighbors(last)
            .iter()
            .filter(|&y| y > s && !on_path.contains(y))
            .filter(|&y| before.is_none_or(|b| self.g.has_edge(b, y)))
            .collect();
        for y in candidates {
            self.path.push(y);
            on_path.insert(y);
            if self.path.len() >= 4 && self.closes() {
                return Ok(true);
            }
            if self.extend(on_path)? {
                return Ok(true);
            }
            on_path.remove(y);
            self.path.pop();
        }
        Ok(false)
    }

    fn closes(&self) -> bool {
        let p = &self.path;
        let len = p.len();
        let (s, second, last, before) = (p[0], p[1], p[len - 1], p[len - 2]);
        second < last
            && self.dom.is_dominating(last, s)
            && self.g.has_edge(before, s)
            && self.g.has_edge(last, second)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Route {
    Trivial,
    Disconnected,
    NoDominatingEdge,
    GPrimeComplete,
    GPrimeDisconnected,
    Theorem1,
    Theorem8Eligible,
    Fallback,
}

impl Route {
    pub const ALL: [Route; 8] = [
        Route::Trivial,
        Route::Disconnected,
        Route::NoDominatingEdge,
        Route::GPrimeComplete,
        Route::GPrimeDisconnected,
        Route::Theorem1,
        Route::Theorem8Eligible,
        Route::Fallback,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Route::Trivial => "Trivial",
            Route::Disconnected => "Disconnected",
            Route::NoDominatingEdge => "NoDominatingEdge",
            Route::GPrimeComplete => "GPrimeComplete",
            Route::GPrimeDisconnected => "GPrimeDisconnected",
            Route::Theorem1 => "Theorem1",
            Route::Theorem8Eligible => "Theorem8Eligible",
            Route::Fallback => "Fallback",
        }
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureReport {
    pub n: usize,
    pub alpha: usize,
    pub diameter: Diameter,
    pub connected: bool,
    pub dominating_edges: Vec<(usize, usize)>,
    pub has_incompatible_double_top: bool,
    pub has_supercycle: bool,
    pub route: Route,
    pub chosen_dominating_edge: Option<(usize, usize)>,
}

/// Routes `g` to the cover construction that applies to it. Checks run in
/// priority order and the lexicographically smallest qualifying dominating
/// edge is recorded.
pub fn classify(g: &Graph) -> Result<StructureReport> {
    let n = g.n();
    let alpha = g.independence_number()?;
    let diameter = g.diameter();
    let connected = diameter != Diameter::Disconnected;
    let dom = DominatingGraph::new(g);
    let dominating = dom.edges();
    let has_idt = has_incompatible_double_top(g, &dom);
    let has_sc = has_supercycle_with(g, &dom, SUPERCYCLE_BUDGET)?.is_some();

    let (route, chosen) = if n <= 3 || alpha <= 1 {
        (Route::Trivial, None)
    } else if !connected {
        (Route::Disconnected, None)
    } else if dominating.is_empty() {
        (Route::NoDominatingEdge, None)
    } else {
        let primes: Vec<((usize, usize), Graph)> = dominating
            .iter()
            .map(|&(u, v)| Ok(((u, v), g.without(&[u, v])?.graph)))
            .collect::<Result<_>>()?;
        let pick = |pred: &dyn Fn(&Graph) -> bool| primes.iter().find(|(_, gp)| pred(gp)).map(|p| p.0);
        if let Some(e) = pick(&|gp| gp.edge_count() == gp.n() * (gp.n() - 1) / 2) {
            (Route::GPrimeComplete, Some(e))
        } else if let Some(e) = pick(&|gp| !gp.is_connected()) {
            (Route::GPrimeDisconnected, Some(e))
        } else if let Some(e) = pick(&|gp| gp.diameter() == Diameter::Finite(3)) {
            (Route::Theorem1, Some(e))
        } else if !has_sc && !has_idt {
            (Route::Theorem8Eligible, None)
        } else {
            (Route::Fallback, None)
        }
    };

    Ok(StructureReport {
        n,
        alpha,
        diameter,
        connected,
        dominating_edges: dominating,
        has_incompatible_double_top: has_idt,
        has_supercycle: has_sc,
        route,
        chosen_dominating_edge: chosen,
    })
}
