//! Covers for the base cases of the typology (no dominating edge, `G'`
//! complete or disconnected), the distance-three cover, the vertex covers of
//! `G[W]`, and the full pipeline for a dominating edge whose removal leaves a
//! graph of diameter three.

use serde::{Deserialize, Serialize};

use crate::bits::VertexSet;
use crate::error::{EccError, Result};
use crate::exact::{exact_ecc, ExactConfig};
use crate::graph::{is_five_cycle, Clique, CliqueCover, Diameter, Graph};
use crate::structure::{dominating_edges, is_dominating_edge};

fn require_alpha_two(g: &Graph, what: &str) -> Result<()> {
    if g.is_alpha_two() {
        Ok(())
    } else {
        Err(EccError::Precondition(format!("{what} requires alpha(G) = 2")))
    }
}

#[inline]
pub(crate) fn ceil_half(x: usize) -> usize {
    x.div_ceil(2)
}

/// The family of non-neighbourhoods, which covers every edge when no edge dominates.
pub fn cover_no_dominating(g: &Graph) -> Result<CliqueCover> {
    require_alpha_two(g, "cover_no_dominating")?;
    if let Some((u, v)) = dominating_edges(g).first() {
        return Err(EccError::Precondition(format!("({u}, {v}) is a dominating edge")));
    }
    let mut cover = CliqueCover::default();
    for x in 0..g.n() {
        let c = Clique::from_set(&g.non_neighborhood(x));
        if !c.is_empty() && !cover.cliques.contains(&c) {
            cover.push(c);
        }
    }
    Ok(cover)
}

/// Split of `V \ {u, v}` relative to a dominating edge: `only_u` sees `u`
/// but not `v`, `only_v` the reverse, `both` sees both. Roles are swapped so
/// that `|only_u| >= |only_v|`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UvwPartition {
    pub u: usize,
    pub v: usize,
    pub only_u: Vec<usize>,
    pub only_v: Vec<usize>,
    pub both: Vec<usize>,
}

pub fn partition_uvw(g: &Graph, u: usize, v: usize) -> Result<UvwPartition> {
    if !is_dominating_edge(g, u, v).map_err(|e| EccError::Precondition(e.to_string()))? {
        return Err(EccError::Precondition(format!("({u}, {v}) is not a dominating edge")));
    }
    let (mut only_u, mut only_v, mut both) = (Vec::new(), Vec::new(), Vec::new());
    for w in (0..g.n()).filter(|&w| w != u && w != v) {
        match (g.has_edge(w, u), g.has_edge(w, v)) {
            (true, true) => both.push(w),
            (true, false) => only_u.push(w),
            (false, true) => only_v.push(w),
            (false, false) => unreachable!("dominating edge misses {w}"),
        }
    }
    let (u, v) = if only_u.len() >= only_v.len() {
        (u, v)
    } else {
        std::mem::swap(&mut only_u, &mut only_v);
        (v, u)
    };
    Ok(UvwPartition { u, v, only_u, only_v, both })
}

fn set_of(g: &Graph, vs: &[usize]) -> VertexSet {
    VertexSet::from_iter_in(g.n(), vs.iter().copied())
}

fn with(base: &[usize], extra: &[usize]) -> Clique {
    Clique::new(base.iter().chain(extra).copied())
}

fn is_complete(g: &Graph) -> bool {
    g.edge_count() == g.n() * (g.n() - 1) / 2
}

/// Four cliques `V(G')`, `{u,v}`, `U+W+u`, `V+W+v` for a dominating edge
/// whose removal leaves a complete graph.
pub fn cover_gprime_complete(g: &Graph, u: usize, v: usize) -> Result<CliqueCover> {
    let p = partition_uvw(g, u, v)?;
    let gp = g.without(&[u, v])?;
    if !is_complete(&gp.graph) {
        return Err(EccError::Precondition(format!("G \\ {{{u}, {v}}} is not complete")));
    }
    let uw: Vec<usize> = p.only_u.iter().chain(&p.both).copied().collect();
    let vw: Vec<usize> = p.only_v.iter().chain(&p.both).copied().collect();
    Ok(CliqueCover::new([
        Clique::new(gp.to_host.iter().copied()),
        Clique::new([p.u, p.v]),
        with(&uw, &[p.u]),
        with(&vw, &[p.v]),
    ]))
}

/// Cover for a dominating edge whose removal disconnects the graph into two
/// cliques. When `U` and `V` are both nonempty inside one component, that
/// component is emitted alone together with one clique per side and one for
/// the other component plus `{u, v}`.
pub fn cover_gprime_disconnected(g: &Graph, u: usize, v: usize) -> Result<CliqueCover> {
    let p = partition_uvw(g, u, v)?;
    let gp = g.without(&[u, v])?;
    let comps = gp.graph.connected_components();
    if comps.len() != 2 {
        return Err(EccError::Precondition(format!(
            "G \\ {{{u}, {v}}} has {} component(s), expected 2",
            comps.len()
        )));
    }
    let lift = |c: &Vec<usize>| -> Vec<usize> { c.iter().map(|&i| gp.to_host[i]).collect() };
    let (c1, c2) = (lift(&comps[0]), lift(&comps[1]));
    for c in [&c1, &c2] {
        if !g.is_clique(c.iter().copied()) {
            return Err(EccError::Precondition("a component of G' is not a clique".into()));
        }
    }
    let only_u = set_of(g, &p.only_u);
    let only_v = set_of(g, &p.only_v);
    let both = set_of(g, &p.both);
    let (s1, s2) = (set_of(g, &c1), set_of(g, &c2));

    // Orient so that the u-side component avoids V and the v-side avoids U.
    let oriented = if !s1.intersects(&only_v) && !s2.intersects(&only_u) {
        Some((s1.clone(), s2.clone()))
    } else if !s2.intersects(&only_v) && !s1.intersects(&only_u) {
        Some((s2.clone(), s1.clone()))
    } else {
        None
    };
    let (u, v) = (p.u, p.v);
    if let Some((cu, cv)) = oriented {
        let mut a = cu.clone();
        a.insert(u);
        let mut b = cv.clone();
        b.insert(v);
        let mut wu = both.intersection(&cu);
        wu.insert(v);
        let mut wv = both.intersection(&cv);
        wv.insert(u);
        return Ok(CliqueCover::new([
            Clique::from_set(&a),
            Clique::from_set(&b),
            Clique::from_set(&wu),
            Clique::from_set(&wv),
            Clique::new([u, v]),
        ]));
    }
    // U and V share a component; the other component lies inside W.
    let (shared, other) = if s1.intersects(&only_u) { (s1, s2) } else { (s2, s1) };
    let mut side_u = only_u.union(&both.intersection(&shared));
    side_u.insert(u);
    let mut side_v = only_v.union(&both.intersection(&shared));
    side_v.insert(v);
    let mut rest = other;
    rest.insert(u);
    rest.insert(v);
    Ok(CliqueCover::new([
        Clique::from_set(&shared),
        Clique::from_set(&side_u),
        Clique::from_set(&side_v),
        Clique::from_set(&rest),
    ]))
}

/// Cover of a graph with `alpha = 2` and diameter three using at most
/// `ceil((n+1)/2)` cliques.
///
/// For `a`, `b` at distance three the neighbourhoods `A = N(a)` and `B = N(b)`
/// partition the remaining vertices into two cliques. The cover is `A+a`,
/// `B+b`, and for every `x` on the smaller side the clique `x + (N(x) ∩ other side)`.
pub fn cover_diam3(g: &Graph) -> Result<CliqueCover> {
    require_alpha_two(g, "cover_diam3")?;
    let n = g.n();
    let mut far = None;
    'outer: for a in 0..n {
        for (b, d) in g.distances_from(a).into_iter().enumerate() {
            match d {
                Some(3) => {
                    far = Some((a, b));
                    break 'outer;
                }
                Some(d) if d > 3 => {
                    return Err(EccError::Precondition(format!("diameter exceeds 3 ({d})")))
                }
                None => return Err(EccError::Precondition("graph is disconnected".into())),
                _ => {}
            }
        }
    }
    let Some((a, b)) = far else {
        return Err(EccError::Precondition(format!("diameter is {}, expected 3", g.diameter())));
    };
    let side_a = g.neighbors(a).clone();
    let side_b = g.neighbors(b).clone();
    let mut rest = g.vertex_set();
    rest.remove(a);
    rest.remove(b);
    if side_a.intersects(&side_b)
        || side_a.union(&side_b) != rest
        || !g.is_clique_set(&side_a)
        || !g.is_clique_set(&side_b)
    {
        return Err(EccError::Precondition(
            "neighbourhoods of a distance-3 pair do not split into two cliques".into(),
        ));
    }
    let mut cover = CliqueCover::default();
    let mut a_clique = side_a.clone();
    a_clique.insert(a);
    let mut b_clique = side_b.clone();
    b_clique.insert(b);
    cover.push(Clique::from_set(&a_clique));
    cover.push(Clique::from_set(&b_clique));
    let (small, other) = if side_a.len() <= side_b.len() { (&side_a, &side_b) } else { (&side_b, &side_a) };
    for x in small.iter() {
        let across = g.neighbors(x).intersection(other);
        if !across.is_empty() {
            let mut c = across;
            c.insert(x);
            cover.push(Clique::from_set(&c));
        }
    }
    Ok(cover)
}

fn require_alpha_at_most_two(g: &Graph) -> Result<()> {
    if g.has_independent_triple() {
        Err(EccError::Precondition("vertex cover by cliques requires alpha <= 2".into()))
    } else {
        Ok(())
    }
}

/// Splits the vertices of `g` into two cliques by 2-colouring the complement.
/// Returns `None` when the complement is not bipartite.
fn two_clique_split(g: &Graph, members: &VertexSet) -> Option<Vec<VertexSet>> {
    let n = g.n();
    let mut color: Vec<Option<bool>> = vec![None; n];
    for s in members.iter() {
        if color[s].is_some() {
            continue;
        }
        color[s] = Some(false);
        let mut stack = vec![s];
        while let Some(x) = stack.pop() {
            let cx = color[x].unwrap();
            let mut non_adj = members.difference(g.neighbors(x));
            non_adj.remove(x);
            for y in non_adj.iter() {
                match color[y] {
                    None => {
                        color[y] = Some(!cx);
                        stack.push(y);
                    }
                    Some(cy) if cy == cx => return None,
                    _ => {}
                }
            }
        }
    }
    let mut parts = vec![VertexSet::empty(n), VertexSet::empty(n)];
    for v in members.iter() {
        parts[color[v].unwrap() as usize].insert(v);
    }
    Some(parts.into_iter().filter(|p| !p.is_empty()).collect())
}

fn components_within(g: &Graph, members: &VertexSet) -> Vec<VertexSet> {
    let mut left = members.clone();
    let mut out = Vec::new();
    while let Some(s) = left.first() {
        let mut comp = VertexSet::empty(g.n());
        comp.insert(s);
        let mut frontier = comp.clone();
        while !frontier.is_empty() {
            let mut next = VertexSet::empty(g.n());
            for x in frontier.iter() {
                next.union_with(&g.neighbors(x).intersection(members));
            }
            next.difference_with(&comp);
            comp.union_with(&next);
            frontier = next;
        }
        left.difference_with(&comp);
        out.push(comp);
    }
    out
}

/// Grows a clique from `seed` by ascending index within `members`.
fn grow_clique(g: &Graph, seed: &VertexSet, members: &VertexSet) -> VertexSet {
    let mut clique = seed.clone();
    let mut cand = members.difference(seed);
    for v in seed.iter() {
        cand.intersect_with(g.neighbors(v));
    }
    while let Some(v) = cand.first() {
        clique.insert(v);
        cand.remove(v);
        cand.intersect_with(g.neighbors(v));
    }
    clique
}

fn cover_vertices_from(g: &Graph, mut left: VertexSet, out: &mut Vec<Clique>) {
    while !left.is_empty() {
        if g.is_clique_set(&left) {
            out.push(Clique::from_set(&left));
            return;
        }
        let comps = components_within(g, &left);
        if comps.len() > 1 || left.len() <= 4 {
            let parts = if comps.len() > 1 {
                comps
            } else {
                two_clique_split(g, &left).expect("complement of a 4-vertex alpha<=2 graph is bipartite")
            };
            out.extend(parts.iter().map(Clique::from_set));
            return;
        }
        // Connected, at least five vertices: peel a clique through the lowest vertex.
        let w = left.first().unwrap();
        let clique = grow_clique(g, &VertexSet::from_iter_in(g.n(), [w]), &left);
        debug_assert!(clique.len() >= 2);
        left.difference_with(&clique);
        out.push(Clique::from_set(&clique));
    }
}

/// Covers the vertices of `gw` by at most `ceil((|W|+1)/2)` cliques.
pub fn cover_w_vertices(gw: &Graph) -> Result<Vec<Clique>> {
    require_alpha_at_most_two(gw)?;
    let mut out = Vec::new();
    cover_vertices_from(gw, gw.vertex_set(), &mut out);
    Ok(out)
}

/// Covers the vertices of `gw` by at most `ceil(|W|/2)` cliques when
/// `|W| >= 4` and `gw` is not a 5-cycle. A triangle is peeled first; one
/// exists since any five vertices with `alpha <= 2` other than a 5-cycle, and
/// any six such vertices, contain one.
pub fn cover_w_vertices_improved(gw: &Graph) -> Result<Vec<Clique>> {
    require_alpha_at_most_two(gw)?;
    let n = gw.n();
    if n < 4 {
        return Err(EccError::Precondition(format!("needs at least 4 vertices, got {n}")));
    }
    if is_five_cycle(gw) {
        return Err(EccError::Precondition("G[W] is a 5-cycle".into()));
    }
    let all = gw.vertex_set();
    let comps = components_within(gw, &all);
    if comps.len() > 1 {
        return Ok(comps.iter().map(Clique::from_set).collect());
    }
    if n == 4 {
        let parts = two_clique_split(gw, &all)
            .ok_or_else(|| EccError::Precondition("complement is not bipartite".into()))?;
        return Ok(parts.iter().map(Clique::from_set).collect());
    }
    let triangle = first_triangle(gw)
        .ok_or_else(|| EccError::Precondition("no triangle found in G[W]".into()))?;
    let clique = grow_clique(gw, &VertexSet::from_iter_in(n, triangle), &all);
    let mut out = vec![Clique::from_set(&clique)];
    cover_vertices_from(gw, all.difference(&clique), &mut out);
    Ok(out)
}

fn first_triangle(g: &Graph) -> Option<[usize; 3]> {
    for a in 0..g.n() {
        for b in g.neighbors(a).iter().filter(|&b| b > a) {
            let common = g.neighbors(a).intersection(g.neighbors(b));
            if let Some(c) = common.iter().find(|&c| c > b) {
                return Some([a, b, c]);
            }
        }
    }
    None
}

/// Bookkeeping of the diameter-three pipeline.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Theorem1Plan {
    pub partition: UvwPartition,
    /// Host labels of `G' = G \ {u, v}`.
    pub g_prime_vertices: Vec<usize>,
    /// Cover of the edges of `G'`, lifted to host labels.
    pub d_cliques: Vec<Clique>,
    /// Cliques of `G[W]` covering the vertices of `W`.
    pub w_cliques: Vec<Clique>,
    /// `w_cliques` with `u` and `v` added.
    pub b_cliques: Vec<Clique>,
    pub u_prime: Option<Clique>,
    pub v_prime: Option<Clique>,
    pub improved_w_cover: bool,
    /// `ceil((n-1)/2) + ceil((|W|+1)/2) + [U nonempty] + [V nonempty]`.
    pub budget_m: usize,
    pub used_fallback: bool,
}

/// Cover with at most `n` cliques for `alpha(G) = 2` and a dominating edge
/// `uv` such that `G \ {u, v}` has diameter three.
///
/// Assembles the distance-three cover of `G'`, the cliques `C^i + {u, v}`
/// over a vertex cover of `G[W]`, and `U + u`, `V + v`. The handful of small
/// configurations where the count still exceeds `n` are solved exactly.
pub fn cover_theorem1(g: &Graph, u: usize, v: usize) -> Result<(CliqueCover, Theorem1Plan)> {
    require_alpha_two(g, "cover_theorem1")?;
    let partition = partition_uvw(g, u, v)?;
    let n = g.n();
    let gp = g.without(&[u, v])?;
    if gp.graph.diameter() != Diameter::Finite(3) {
        return Err(EccError::Precondition(format!(
            "G \\ {{{u}, {v}}} has diameter {}, expected 3",
            gp.graph.diameter()
        )));
    }
    let (u, v) = (partition.u, partition.v);
    let d_cliques: Vec<Clique> = cover_diam3(&gp.graph)?.cliques.iter().map(|c| gp.lift(c)).collect();

    let (w_cliques, improved) = if partition.both.is_empty() {
        (Vec::new(), false)
    } else {
        let gw = g.induced_subgraph(&partition.both)?;
        let improved = gw.graph.n() >= 4 && !is_five_cycle(&gw.graph);
        let local = if improved {
            cover_w_vertices_improved(&gw.graph)?
        } else {
            cover_w_vertices(&gw.graph)?
        };
        (local.iter().map(|c| gw.lift(c)).collect::<Vec<_>>(), improved)
    };
    let b_cliques: Vec<Clique> = w_cliques.iter().map(|c| with(c.vertices(), &[u, v])).collect();
    let u_prime = (!partition.only_u.is_empty()).then(|| with(&partition.only_u, &[u]));
    let v_prime = (!partition.only_v.is_empty()).then(|| with(&partition.only_v, &[v]));
    let budget_m = ceil_half(n - 1)
        + ceil_half(partition.both.len() + 1)
        + usize::from(u_prime.is_some())
        + usize::from(v_prime.is_some());

    let mut cover = CliqueCover::new(d_cliques.iter().cloned());
    if b_cliques.is_empty() {
        cover.push(Clique::new([u, v]));
    }
    b_cliques.iter().cloned().for_each(|c| cover.push(c));
    if let Some(c) = &u_prime {
        cover.push(c.clone());
    }
    if let Some(c) = &v_prime {
        cover.push(c.clone());
    }

    let mut used_fallback = false;
    if cover.len() > n {
        let exact = exact_ecc(g, ExactConfig::default())?;
        if exact.ecc > n {
            return Err(EccError::Counterexample {
                size: exact.ecc,
                bound: n,
                context: "exact cover after diameter-3 pipeline".into(),
            });
        }
        cover = exact.witness;
        used_fallback = true;
    }

    let plan = Theorem1Plan {
        partition,
        g_prime_vertices: gp.to_host.clone(),
        d_cliques,
        w_cliques,
        b_cliques,
        u_prime,
        v_prime,
        improved_w_cover: improved,
        budget_m,
        used_fallback,
    };
    Ok((cover, plan))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;
    use crate::graph::verify_cover;

    fn sets(cover: &CliqueCover) -> Vec<Vec<usize>> {
        cover.cliques.iter().map(|c| c.vertices().to_vec()).collect()
    }

    #[test]
    fn no_dominating_cover() {
        let cover = cover_no_dominating(&c5()).unwrap();
        assert_eq!(sets(&cover), vec![vec![2, 3], vec![3, 4], vec![0, 4], vec![0, 1], vec![1, 2]]);
        assert!(verify_cover(&c5(), &cover).valid);
        assert!(matches!(cover_no_dominating(&Graph::cycle(7).unwrap()), Err(EccError::Precondition(_))));
        assert!(matches!(cover_no_dominating(&diamond()), Err(EccError::Precondition(_))));
    }

    #[test]
    fn gprime_complete_cover() {
        let g = Graph::new(5, &[(0, 1), (1, 2), (0, 2), (3, 0), (3, 1), (3, 2), (3, 4), (4, 1), (4, 2)]).unwrap();
        let cover = cover_gprime_complete(&g, 3, 4).unwrap();
        assert_eq!(sets(&cover), vec![vec![0, 1, 2], vec![3, 4], vec![0, 1, 2, 3], vec![1, 2, 4]]);
        assert!(verify_cover(&g, &cover).valid);
        let kc = cover_gprime_complete(&k4(), 0, 1).unwrap();
        assert!(verify_cover(&k4(), &kc).valid && kc.len() <= 4);
        assert!(cover_gprime_complete(&t1(), 4, 5).is_err());
    }

    #[test]
    fn gprime_disconnected_cover() {
        let g = Graph::from_fn(6, |a, b| (a, b) == (0, 1) || (a, b) == (2, 3) || b >= 4).unwrap();
        let cover = cover_gprime_disconnected(&g, 4, 5).unwrap();
        assert_eq!(
            sets(&cover),
            vec![vec![0, 1, 4], vec![2, 3, 5], vec![0, 1, 5], vec![2, 3, 4], vec![4, 5]]
        );
        assert!(verify_cover(&g, &cover).valid);
        assert!(cover_gprime_disconnected(&t1(), 4, 5).is_err());
        let joined = Graph::from_fn(6, |a, b| matches!((a, b), (0, 1) | (2, 3) | (1, 2)) || b >= 4).unwrap();
        assert!(cover_gprime_disconnected(&joined, 4, 5).is_err());
    }

    #[test]
    fn gprime_disconnected_with_u_and_v_together() {
        // G' = clique {0,1,2} + clique {3}; 0 sees only u=4, 1 sees only v=5.
        let g = Graph::from_fn(6, |a, b| {
            matches!((a, b), (0, 1) | (0, 2) | (1, 2) | (4, 5) | (0, 4) | (1, 5))
                || (b >= 4 && (a == 2 || a == 3))
        })
        .unwrap();
        let cover = cover_gprime_disconnected(&g, 4, 5).unwrap();
        assert!(verify_cover(&g, &cover).valid, "{cover:?}");
        assert!(cover.len() <= 5);
    }

    #[test]
    fn uvw_partitions() {
        let p = partition_uvw(&t1(), 4, 5).unwrap();
        assert!(p.only_u.is_empty() && p.only_v.is_empty());
        assert_eq!(p.both, vec![0, 1, 2, 3]);
        let p = partition_uvw(&diamond(), 1, 2).unwrap();
        assert_eq!(p.both, vec![0, 3]);
        assert!(p.only_u.is_empty() && p.only_v.is_empty());
        assert!(partition_uvw(&c5(), 0, 1).is_err());
    }

    #[test]
    fn diam3_covers() {
        let cover = cover_diam3(&p4()).unwrap();
        assert_eq!(cover.len(), 3);
        assert!(verify_cover(&p4(), &cover).valid);
        let chorded = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (0, 4), (1, 4), (2, 4)]).unwrap();
        let cover = cover_diam3(&chorded).unwrap();
        assert!(verify_cover(&chorded, &cover).valid && cover.len() <= 3);
        assert!(matches!(cover_diam3(&c5()), Err(EccError::Precondition(_))));
    }

    #[test]
    fn w_vertex_covers() {
        let single = Graph::complete(1).unwrap();
        assert_eq!(cover_w_vertices(&single).unwrap(), vec![Clique::new([0])]);
        assert_eq!(cover_w_vertices(&p4()).unwrap(), vec![Clique::new([0, 1]), Clique::new([2, 3])]);
        assert_eq!(
            cover_w_vertices(&c5()).unwrap(),
            vec![Clique::new([0, 1]), Clique::new([2, 3]), Clique::new([4])]
        );
        assert!(cover_w_vertices(&Graph::empty(3).unwrap()).is_err());
    }

    #[test]
    fn improved_w_vertex_covers() {
        assert_eq!(cover_w_vertices_improved(&p4()).unwrap().len(), 2);
        let oct_cover = cover_w_vertices_improved(&oct()).unwrap();
        assert!(oct_cover.len() <= 3);
        let covered: VertexSet = oct_cover.iter().fold(VertexSet::empty(6), |mut acc, c| {
            acc.union_with(&c.to_set(6));
            acc
        });
        assert_eq!(covered.len(), 6);
        assert!(cover_w_vertices_improved(&c5()).is_err());
        assert!(cover_w_vertices_improved(&Graph::path(3).unwrap()).is_err());
    }

    #[test]
    fn theorem1_on_t1() {
        let (cover, plan) = cover_theorem1(&t1(), 4, 5).unwrap();
        assert!(verify_cover(&t1(), &cover).valid);
        assert!(cover.len() <= 6);
        assert_eq!(plan.budget_m, 6);
        assert_eq!(plan.d_cliques.len(), 3);
        assert!(!plan.used_fallback);
        assert!(matches!(cover_theorem1(&diamond(), 1, 2), Err(EccError::Precondition(_))));
    }
}
