//! Extension covers: the non-neighbourhood cliques grown along dominating
//! edges, followed by an elimination loop that covers the dominating edges
//! left over, one favourable vertex at a time.

use serde::{Deserialize, Serialize};

use crate::bits::VertexSet;
use crate::error::{EccError, Result};
use crate::graph::{Clique, CliqueCover, Graph};
use crate::structure::{has_incompatible_double_top, has_supercycle_with, DominatingGraph, SUPERCYCLE_BUDGET};

/// `N̄[x]` for every vertex. Empty sets are kept so indices match vertices.
pub fn base_cliques(g: &Graph) -> Result<Vec<Clique>> {
    if !g.is_alpha_two() {
        return Err(EccError::Precondition("base_cliques requires alpha(G) = 2".into()));
    }
    Ok((0..g.n()).map(|x| Clique::from_set(&g.non_neighborhood(x))).collect())
}

/// Result of extending a single non-neighbourhood.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Extension {
    pub clique: Clique,
    /// Candidates rejected because admitting them would break the clique.
    pub skipped: Vec<usize>,
}

/// Extends `N̄[x]` by every `y` with `xy` dominating and some dominating edge
/// from `y` into `N̄[x]`. Candidates are admitted in ascending order while
/// the set remains a clique.
pub fn extend_clique(g: &Graph, x: usize) -> Extension {
    extend_clique_with(g, &DominatingGraph::new(g), x)
}

pub fn extend_clique_with(g: &Graph, dom: &DominatingGraph, x: usize) -> Extension {
    let base = g.non_neighborhood(x);
    let mut clique = base.clone();
    let mut skipped = Vec::new();
    if base.is_empty() {
        return Extension { clique: Clique::from_set(&clique), skipped };
    }
    for y in dom.neighbors(x).iter() {
        if !dom.neighbors(y).intersects(&base) {
            continue;
        }
        if clique.is_subset(g.neighbors(y)) {
            clique.insert(y);
        } else {
            skipped.push(y);
        }
    }
    Extension { clique: Clique::from_set(&clique), skipped }
}

/// Dominating edges that lie inside none of `cliques`.
pub fn uncovered_dominating_edges(g: &Graph, cliques: &[Clique]) -> Vec<(usize, usize)> {
    uncovered_with(g, &DominatingGraph::new(g), cliques)
}

fn uncovered_with(g: &Graph, dom: &DominatingGraph, cliques: &[Clique]) -> Vec<(usize, usize)> {
    let n = g.n();
    let mut reach = vec![VertexSet::empty(n); n];
    for c in cliques {
        let set = c.to_set(n);
        for v in c.iter() {
            reach[v].union_with(&set);
        }
    }
    let mut out = Vec::new();
    for u in 0..n {
        let missing = dom.neighbors(u).difference(&reach[u]);
        out.extend(missing.iter().filter(|&v| v > u).map(|v| (u, v)));
    }
    out
}

/// A clique added by the elimination loop, labelled by the favourable vertex
/// `z` and its twin.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelledClique {
    pub clique: Clique,
    pub z: usize,
    pub twin: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtensionState {
    /// `N̄[x]` per vertex.
    pub d_cliques: Vec<Clique>,
    /// `C^x` per vertex.
    pub extended: Vec<Clique>,
    /// Dominating edges covered by neither `extended` nor `d_prime`.
    pub uncovered: Vec<(usize, usize)>,
    /// Dominating edges not covered by `extended` alone.
    pub initially_uncovered: Vec<(usize, usize)>,
    pub d_prime: Vec<LabelledClique>,
    pub used_labels: Vec<usize>,
    pub warnings: Vec<String>,
}

impl ExtensionState {
    /// Base and extended cliques for `g`, with nothing eliminated yet.
    pub fn new(g: &Graph) -> Result<ExtensionState> {
        Self::with_dominating(g, &DominatingGraph::new(g))
    }

    fn with_dominating(g: &Graph, dom: &DominatingGraph) -> Result<ExtensionState> {
        let d_cliques = base_cliques(g)?;
        let mut warnings = Vec::new();
        let extended: Vec<Clique> = (0..g.n())
            .map(|x| {
                let ext = extend_clique_with(g, dom, x);
                if !ext.skipped.is_empty() {
                    warnings.push(format!(
                        "C^{x}: skipped extension candidates {:?} to keep a clique",
                        ext.skipped
                    ));
                }
                ext.clique
            })
            .collect();
        let uncovered = uncovered_with(g, dom, &extended);
        Ok(ExtensionState {
            d_cliques,
            extended,
            initially_uncovered: uncovered.clone(),
            uncovered,
            d_prime: Vec::new(),
            used_labels: Vec::new(),
            warnings,
        })
    }

    fn uncovered_rows(&self, n: usize) -> Vec<VertexSet> {
        let mut rows = vec![VertexSet::empty(n); n];
        for &(a, b) in &self.uncovered {
            rows[a].insert(b);
            rows[b].insert(a);
        }
        rows
    }

    /// Vertices incident to at least one uncovered dominating edge.
    pub fn touched(&self) -> Vec<usize> {
        let mut vs: Vec<usize> = self.uncovered.iter().flat_map(|&(a, b)| [a, b]).collect();
        vs.sort_unstable();
        vs.dedup();
        vs
    }

    /// Nonempty `C^x` followed by the eliminated cliques.
    pub fn emitted_cover(&self) -> CliqueCover {
        CliqueCover::new(
            self.extended
                .iter()
                .cloned()
                .chain(self.d_prime.iter().map(|l| l.clique.clone())),
        )
    }
}

/// `C_z`: `z` together with the far ends of its uncovered dominating edges.
pub fn clique_at(g: &Graph, state: &ExtensionState, z: usize) -> Result<Clique> {
    let rows = state.uncovered_rows(g.n());
    let set = star_at(&rows, z)
        .ok_or_else(|| EccError::Precondition(format!("no uncovered dominating edge at {z}")))?;
    if let Some((a, b)) = first_non_adjacent(g, &set) {
        return Err(EccError::HypothesisViolation { z, a, b });
    }
    Ok(Clique::from_set(&set))
}

fn star_at(rows: &[VertexSet], z: usize) -> Option<VertexSet> {
    if rows[z].is_empty() {
        return None;
    }
    let mut set = rows[z].clone();
    set.insert(z);
    Some(set)
}

fn first_non_adjacent(g: &Graph, set: &VertexSet) -> Option<(usize, usize)> {
    for a in set.iter() {
        let mut rest = set.clone();
        rest.remove(a);
        if let Some(b) = rest.difference(g.neighbors(a)).iter().find(|&b| b > a) {
            return Some((a, b));
        }
    }
    None
}

/// Lowest `z` admitting a twin `w ∈ C_z \ {z}` whose uncovered dominating
/// edges all end inside `C_z`; the lowest such twin is returned with it.
pub fn find_favourable(state: &ExtensionState, g: &Graph) -> Option<(usize, usize)> {
    let rows = state.uncovered_rows(g.n());
    (0..g.n()).find_map(|z| {
        let cz = star_at(&rows, z)?;
        rows[z]
            .iter()
            .find(|&w| rows[w].is_subset(&cz))
            .map(|w| (z, w))
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Theorem2Options {
    /// Verify the absence of supercycles and incompatible double tops first.
    pub check_hypotheses: bool,
}

impl Default for Theorem2Options {
    fn default() -> Self {
        Theorem2Options { check_hypotheses: true }
    }
}

/// Cover of size at most `n + floor(n/2)` for `alpha(G) = 2` graphs without
/// supercycles or incompatible double tops.
///
/// Emits every nonempty `C^x`, then while dominating edges stay uncovered
/// picks a favourable vertex `z` with twin `w`, adds `C_z` labelled `(z, w)`
/// and recomputes the uncovered set. Labels never repeat, so at most `n/2`
/// cliques are added.
pub fn cover_theorem2(g: &Graph, opts: Theorem2Options) -> Result<(CliqueCover, ExtensionState)> {
    if !g.is_alpha_two() {
        return Err(EccError::Precondition("cover_theorem2 requires alpha(G) = 2".into()));
    }
    let dom = DominatingGraph::new(g);
    if opts.check_hypotheses {
        if has_incompatible_double_top(g, &dom) {
            return Err(EccError::Precondition("graph has an incompatible double top".into()));
        }
        if has_supercycle_with(g, &dom, SUPERCYCLE_BUDGET)?.is_some() {
            return Err(EccError::Precondition("graph has a supercycle".into()));
        }
    }
    let mut state = ExtensionState::with_dominating(g, &dom)?;
    while !state.uncovered.is_empty() {
        let Some((z, twin)) = find_favourable(&state, g) else {
            return Err(EccError::SupercyclePresent { remaining: state.uncovered.len() });
        };
        let cz = clique_at(g, &state, z)?;
        if state.used_labels.contains(&z) || state.used_labels.contains(&twin) {
            return Err(EccError::Precondition(format!("label ({z}, {twin}) reuses a vertex")));
        }
        let before = state.touched().len();
        state.d_prime.push(LabelledClique { clique: cz, z, twin });
        state.used_labels.extend([z, twin]);
        let all: Vec<Clique> = state
            .extended
            .iter()
            .cloned()
            .chain(state.d_prime.iter().map(|l| l.clique.clone()))
            .collect();
        state.uncovered = uncovered_with(g, &dom, &all);
        debug_assert!(state.touched().len() + 2 <= before);
    }
    Ok((state.emitted_cover(), state))
}

/// Count of vertices touched by dominating edges that the extended cliques
/// leave uncovered, computed from the local edge conditions alone.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FStat {
    pub f: usize,
    pub excluded_vertices: Vec<usize>,
}

/// A vertex `z` is excluded when each incident edge `zx` is
/// non-dominating, or sits in a dominating path `z x y` with `zy` missing,
/// or in a dominating path `x z y` with `xy` missing, or in a dominating
/// triangle `z x y` where both `z` and `x` have dominating edges into `N̄[y]`.
pub fn compute_f(g: &Graph) -> FStat {
    let dom = DominatingGraph::new(g);
    let n = g.n();
    let excluded: Vec<usize> = (0..n)
        .filter(|&z| g.neighbors(z).iter().all(|x| edge_covered_by_extension(g, &dom, z, x)))
        .collect();
    FStat { f: n - excluded.len(), excluded_vertices: excluded }
}

fn edge_covered_by_extension(g: &Graph, dom: &DominatingGraph, z: usize, x: usize) -> bool {
    if !dom.is_dominating(z, x) {
        return true;
    }
    let z_far = g.non_neighborhood(z);
    let x_far = g.non_neighborhood(x);
    // z x y dominating, zy not an edge.
    if dom.neighbors(x).intersects(&z_far) {
        return true;
    }
    // x z y dominating, xy not an edge.
    if dom.neighbors(z).intersects(&x_far) {
        return true;
    }
    // z x y a dominating triangle, zu and xv dominating with u, v in N̄[y].
    let apexes = dom.neighbors(z).intersection(dom.neighbors(x));
    apexes.iter().any(|y| {
        let far = g.non_neighborhood(y);
        dom.neighbors(z).intersects(&far) && dom.neighbors(x).intersects(&far)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{fixtures::*, verify_cover};

    #[test]
    fn base_cliques_of_fixtures() {
        let base = base_cliques(&c5()).unwrap();
        assert!(base.iter().all(|c| c.len() == 2));
        assert_eq!(uncovered_dominating_edges(&c5(), &base).len(), 0);
        let d = base_cliques(&diamond()).unwrap();
        assert_eq!(d, vec![Clique::new([3]), Clique::new([]), Clique::new([]), Clique::new([0])]);
        assert!(base_cliques(&k4()).is_err());
    }

    #[test]
    fn extensions_of_fixtures() {
        let e = extend_clique(&diamond(), 0);
        assert_eq!(e.clique, Clique::new([1, 2, 3]));
        assert!(e.skipped.is_empty());
        let e = extend_clique(&oct(), 0);
        assert_eq!(e.clique, Clique::new([1, 2, 3]));
        assert_eq!(e.skipped, vec![4, 5]);
        assert_eq!(extend_clique(&c5(), 0).clique, Clique::new([2, 3]));
    }

    #[test]
    fn uncovered_after_extension() {
        let state = ExtensionState::new(&diamond()).unwrap();
        assert!(state.uncovered.is_empty());
        let state = ExtensionState::new(&c5()).unwrap();
        assert!(state.uncovered.is_empty());
    }

    #[test]
    fn clique_at_and_favourable() {
        let g = diamond();
        let mut state = ExtensionState::new(&g).unwrap();
        assert!(find_favourable(&state, &g).is_none());
        assert!(matches!(clique_at(&g, &state, 1), Err(EccError::Precondition(_))));
        state.uncovered = vec![(1, 2)];
        assert_eq!(clique_at(&g, &state, 1).unwrap(), Clique::new([1, 2]));
        assert_eq!(find_favourable(&state, &g), Some((1, 2)));
        state.uncovered = vec![(0, 1), (1, 3)];
        assert!(matches!(
            clique_at(&g, &state, 1),
            Err(EccError::HypothesisViolation { z: 1, a: 0, b: 3 })
        ));
    }

    #[test]
    fn theorem2_on_fixtures() {
        let (cover, state) = cover_theorem2(&diamond(), Theorem2Options::default()).unwrap();
        assert_eq!(cover.cliques, vec![Clique::new([1, 2, 3]), Clique::new([0, 1, 2])]);
        assert!(state.d_prime.is_empty());
        assert!(verify_cover(&diamond(), &cover).valid);

        let (cover, state) = cover_theorem2(&c5(), Theorem2Options::default()).unwrap();
        assert_eq!(cover.len(), 5);
        assert!(state.d_prime.is_empty());

        assert!(matches!(
            cover_theorem2(&oct(), Theorem2Options::default()),
            Err(EccError::Precondition(_))
        ));
    }

    #[test]
    fn f_statistic_on_fixtures() {
        assert_eq!(compute_f(&diamond()).f, 0);
        assert_eq!(compute_f(&c5()).f, 0);
        assert_eq!(compute_f(&c5()).excluded_vertices, vec![0, 1, 2, 3, 4]);
    }
}
