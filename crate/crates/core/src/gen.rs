//! Exhaustive enumeration and seeded generators of graphs with `alpha = 2`.
//!
//! All randomness comes from ChaCha8 (`rand_chacha::ChaCha8Rng`) seeded with
//! `seed_from_u64`, so a [`GenSpec`] maps to the same graph on every platform.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{EccError, Result};
use crate::graph::{Diameter, Graph};
use crate::structure::{
    has_incompatible_double_top, has_supercycle_with, is_dominating_edge, DominatingGraph,
    SUPERCYCLE_BUDGET,
};

/// Largest `n` for [`enumerate_alpha_two`].
pub const ENUMERATION_CAP: usize = 7;
pub const DEFAULT_RETRIES: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GenKind {
    Alpha2,
    Theorem1,
    Theorem8Eligible,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GenSpec {
    pub n: usize,
    /// Edge probability of the random complement before triangles are broken.
    pub density: f64,
    pub seed: u64,
    pub kind: GenKind,
}

impl GenSpec {
    pub fn new(kind: GenKind, n: usize, density: f64, seed: u64) -> GenSpec {
        GenSpec { n, density, seed, kind }
    }

    fn validate(&self, kind: GenKind) -> Result<()> {
        if self.kind != kind {
            return Err(EccError::Input(format!("generator expects kind {kind:?}, got {:?}", self.kind)));
        }
        if self.n < 2 {
            return Err(EccError::Input(format!("n must be at least 2, got {}", self.n)));
        }
        if !(0.0..=1.0).contains(&self.density) {
            return Err(EccError::Input(format!("density {} outside [0, 1]", self.density)));
        }
        Ok(())
    }
}

/// Every labeled graph on `n` vertices with `alpha` exactly 2, as complements
/// of the triangle-free graphs with at least one edge. Ordered by the
/// complement's edge bitmask over lexicographic pairs.
pub fn enumerate_alpha_two(n: usize) -> Result<AlphaTwoGraphs> {
    if n > ENUMERATION_CAP {
        return Err(EccError::Capacity { what: "enumerate_alpha_two", n, cap: ENUMERATION_CAP });
    }
    if n == 0 {
        return Err(EccError::Input("n must be at least 1".into()));
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut masks = Vec::new();
    let mut adj = vec![0u32; n];
    triangle_free(&pairs, 0, 0, &mut adj, &mut masks);
    masks.retain(|&m| m != 0);
    masks.sort_unstable();
    let mut index = vec![vec![0; n]; n];
    for (i, &(u, v)) in pairs.iter().enumerate() {
        index[u][v] = i;
    }
    Ok(AlphaTwoGraphs { n, index, masks, next: 0 })
}

fn triangle_free(pairs: &[(usize, usize)], i: usize, mask: u32, adj: &mut [u32], out: &mut Vec<u32>) {
    if i == pairs.len() {
        out.push(mask);
        return;
    }
    triangle_free(pairs, i + 1, mask, adj, out);
    let (u, v) = pairs[i];
    if adj[u] & adj[v] == 0 {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
        triangle_free(pairs, i + 1, mask | 1 << i, adj, out);
        adj[u] &= !(1 << v);
        adj[v] &= !(1 << u);
    }
}

/// Lazy stream over the enumerated graphs.
#[derive(Debug, Clone)]
pub struct AlphaTwoGraphs {
    n: usize,
    /// Bit position of pair `(u, v)`, `u < v`, in a complement mask.
    index: Vec<Vec<usize>>,
    masks: Vec<u32>,
    next: usize,
}

impl AlphaTwoGraphs {
    pub fn total(&self) -> usize {
        self.masks.len()
    }

    fn build(&self, complement_mask: u32) -> Graph {
        Graph::from_fn(self.n, |u, v| complement_mask >> self.index[u][v] & 1 == 0).unwrap()
    }
}

impl Iterator for AlphaTwoGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        let m = *self.masks.get(self.next)?;
        self.next += 1;
        Some(self.build(m))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = self.masks.len() - self.next;
        (left, Some(left))
    }
}

impl ExactSizeIterator for AlphaTwoGraphs {}

fn sample_alpha_two(n: usize, density: f64, rng: &mut ChaCha8Rng) -> Graph {
    let mut co = vec![vec![false; n]; n];
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(density) {
                co[u][v] = true;
                co[v][u] = true;
            }
        }
    }
    // Break triangles in lexicographic order by dropping their first edge.
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if co[a][b] && co[b][c] && co[a][c] {
                    co[a][b] = false;
                    co[b][a] = false;
                }
            }
        }
    }
    if !co.iter().flatten().any(|&e| e) {
        let pick = rng.gen_range(0..n * (n - 1) / 2);
        let (u, v) = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).nth(pick).unwrap();
        co[u][v] = true;
        co[v][u] = true;
    }
    Graph::from_fn(n, |u, v| !co[u][v]).unwrap()
}

/// A random graph with `alpha = 2`: random complement, triangles broken,
/// one edge added if empty, complemented back.
pub fn gen_alpha_two(spec: &GenSpec) -> Result<Graph> {
    spec.validate(GenKind::Alpha2)?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    Ok(sample_alpha_two(spec.n, spec.density, &mut rng))
}

/// A graph with a dominating edge `uv` such that `G \ {u, v}` has diameter 3.
///
/// `G'` is two cliques `A`, `B` with `a ∈ A` and `b ∈ B` kept free of
/// cross edges and random cross edges (probability `density`, at least one)
/// among the rest. `u` and `v` are joined to everything, then all labels
/// are shuffled.
pub fn gen_theorem1_instance(spec: &GenSpec) -> Result<(Graph, (usize, usize))> {
    spec.validate(GenKind::Theorem1)?;
    if spec.n < 6 {
        return Err(EccError::Input(format!("theorem-1 instances need n >= 6, got {}", spec.n)));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let n = spec.n;
    let m = n - 2;
    for _ in 0..DEFAULT_RETRIES {
        let split = rng.gen_range(2..=m - 2);
        let side = |x: usize| x < split;
        let mut cross = Vec::new();
        for x in 1..split {
            for y in split..m - 1 {
                if rng.gen_bool(spec.density) {
                    cross.push((x, y));
                }
            }
        }
        if cross.is_empty() {
            let x = rng.gen_range(1..split);
            let y = rng.gen_range(split..m - 1);
            cross.push((x, y));
        }
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut rng);
        let base = Graph::from_fn(n, |x, y| {
            y >= m || side(x) == side(y) || cross.contains(&(x, y))
        })?;
        let g = base.relabel(&perm)?;
        let (u, v) = (perm[m].min(perm[m + 1]), perm[m].max(perm[m + 1]));
        if satisfies_theorem1(&g, u, v) {
            return Ok((g, (u, v)));
        }
    }
    Err(EccError::Generation { attempts: DEFAULT_RETRIES, reason: "no diameter-3 instance".into() })
}

/// `alpha = 2`, `uv` dominating, and `G \ {u, v}` of diameter exactly 3.
pub fn satisfies_theorem1(g: &Graph, u: usize, v: usize) -> bool {
    g.is_alpha_two()
        && is_dominating_edge(g, u, v).unwrap_or(false)
        && g.without(&[u, v]).map(|s| s.graph.diameter() == Diameter::Finite(3)).unwrap_or(false)
}

/// Rejection-samples [`gen_alpha_two`]-style graphs until one has neither a
/// supercycle nor an incompatible double top. Samples whose supercycle
/// search runs out of budget are rejected.
pub fn gen_theorem8_instance(spec: &GenSpec) -> Result<Graph> {
    spec.validate(GenKind::Theorem8Eligible)?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    for _ in 0..DEFAULT_RETRIES {
        let g = sample_alpha_two(spec.n, spec.density, &mut rng);
        if is_theorem8_eligible(&g) {
            return Ok(g);
        }
    }
    Err(EccError::Generation {
        attempts: DEFAULT_RETRIES,
        reason: "every sample had a supercycle or an incompatible double top".into(),
    })
}

/// `alpha = 2` with no supercycle and no incompatible double top.
pub fn is_theorem8_eligible(g: &Graph) -> bool {
    if !g.is_alpha_two() {
        return false;
    }
    let dom = DominatingGraph::new(g);
    !has_incompatible_double_top(g, &dom)
        && matches!(has_supercycle_with(g, &dom, SUPERCYCLE_BUDGET), Ok(None))
}
