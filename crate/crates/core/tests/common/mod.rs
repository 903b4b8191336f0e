//! Brute-force reference implementations over boolean adjacency matrices.
//! Deliberately slow and share no code with the library.

#![allow(dead_code)]

use ecckit::Graph;

pub type Adj = Vec<Vec<bool>>;

pub fn adj(g: &Graph) -> Adj {
    (0..g.n()).map(|u| (0..g.n()).map(|v| g.has_edge(u, v)).collect()).collect()
}

pub fn alpha(a: &Adj) -> usize {
    let n = a.len();
    let mut best = 0;
    for mask in 0u32..1 << n {
        let vs: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        let indep = vs.iter().all(|&x| vs.iter().all(|&y| x == y || !a[x][y]));
        if indep {
            best = best.max(vs.len());
        }
    }
    best
}

/// Every labelled graph on `n` vertices with independence number two,
/// sorted by edge list.
pub fn all_alpha_two(n: usize) -> Vec<Vec<(usize, usize)>> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut out = Vec::new();
    for mask in 0u64..1 << pairs.len() {
        let mut a = vec![vec![false; n]; n];
        let mut edges = Vec::new();
        for (i, &(u, v)) in pairs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                a[u][v] = true;
                a[v][u] = true;
                edges.push((u, v));
            }
        }
        if alpha(&a) == 2 {
            out.push(edges);
        }
    }
    out.sort();
    out
}

pub fn dominating(a: &Adj, u: usize, v: usize) -> bool {
    a[u][v] && (0..a.len()).all(|w| w == u || w == v || a[w][u] || a[w][v])
}

pub fn is_clique(a: &Adj, s: &[usize]) -> bool {
    s.iter().all(|&x| s.iter().all(|&y| x == y || a[x][y]))
}

/// Double tops by testing every ordered 5-tuple of distinct vertices, kept
/// in the orientation not larger than its reverse.
pub fn double_tops(a: &Adj) -> Vec<([usize; 5], bool)> {
    let n = a.len();
    let mut out = Vec::new();
    let mut t = [0usize; 5];
    fn rec(a: &Adj, n: usize, k: usize, t: &mut [usize; 5], out: &mut Vec<([usize; 5], bool)>) {
        if k == 5 {
            let path_ok = (0..4).all(|i| dominating(a, t[i], t[i + 1]));
            if path_ok && !a[t[2]][t[0]] && !a[t[2]][t[4]] {
                let mut rev = *t;
                rev.reverse();
                if *t <= rev {
                    out.push((*t, !a[t[1]][t[3]]));
                }
            }
            return;
        }
        for x in 0..n {
            if !t[..k].contains(&x) {
                t[k] = x;
                rec(a, n, k + 1, t, out);
            }
        }
    }
    rec(a, n, 0, &mut t, &mut out);
    out.sort();
    out
}

/// Whether some cyclic sequence of at least four distinct vertices is a
/// supercycle, found by trying every arrangement.
pub fn has_supercycle(a: &Adj) -> bool {
    let n = a.len();
    fn ok(a: &Adj, c: &[usize]) -> bool {
        let k = c.len();
        (0..k).all(|i| {
            let prev = c[(i + k - 1) % k];
            let next = c[(i + 1) % k];
            dominating(a, c[i], next) && a[prev][next]
        })
    }
    fn rec(a: &Adj, n: usize, c: &mut Vec<usize>) -> bool {
        if c.len() >= 4 && ok(a, c) {
            return true;
        }
        if c.len() == n {
            return false;
        }
        for x in 0..n {
            if !c.contains(&x) {
                c.push(x);
                if rec(a, n, c) {
                    return true;
                }
                c.pop();
            }
        }
        false
    }
    rec(a, n, &mut Vec::new())
}

pub fn covers(a: &Adj, cliques: &[Vec<usize>]) -> bool {
    let n = a.len();
    cliques.iter().all(|c| is_clique(a, c))
        && (0..n).all(|u| (u + 1..n).all(|v| !a[u][v] || cliques.iter().any(|c| c.contains(&u) && c.contains(&v))))
}

pub fn maximal_cliques(a: &Adj) -> Vec<Vec<usize>> {
    let n = a.len();
    let mut out = Vec::new();
    for mask in 1u32..1 << n {
        let s: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        if is_clique(a, &s) && (0..n).all(|x| s.contains(&x) || !s.iter().all(|&y| a[x][y])) {
            out.push(s);
        }
    }
    out.sort();
    out
}

/// Minimum edge clique cover size by trying subsets of maximal cliques in
/// order of size.
pub fn ecc(a: &Adj) -> usize {
    let n = a.len();
    let edges: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| a[u][v]).collect();
    if edges.is_empty() {
        return 0;
    }
    let cl: Vec<u64> = maximal_cliques(a)
        .iter()
        .map(|c| {
            edges
                .iter()
                .enumerate()
                .filter(|(_, &(u, v))| c.contains(&u) && c.contains(&v))
                .fold(0u64, |m, (i, _)| m | 1 << i)
        })
        .filter(|&m| m != 0)
        .collect();
    let full = if edges.len() == 64 { u64::MAX } else { (1u64 << edges.len()) - 1 };
    for k in 1..=cl.len() {
        if choose(&cl, k, 0, 0, full) {
            return k;
        }
    }
    unreachable!("maximal cliques always cover")
}

fn choose(cl: &[u64], k: usize, start: usize, acc: u64, full: u64) -> bool {
    if acc == full {
        return true;
    }
    if k == 0 {
        return false;
    }
    (start..cl.len()).any(|i| choose(cl, k - 1, i + 1, acc | cl[i], full))
}

/// Independent diameter via Floyd–Warshall; `None` when disconnected.
pub fn diameter(a: &Adj) -> Option<usize> {
    let n = a.len();
    let inf = usize::MAX / 4;
    let mut d = vec![vec![inf; n]; n];
    for u in 0..n {
        d[u][u] = 0;
        for v in 0..n {
            if a[u][v] {
                d[u][v] = 1;
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    let m = d.iter().flatten().copied().max().unwrap_or(0);
    (m < inf).then_some(m)
}

pub fn ceil_half(x: usize) -> usize {
    x.div_ceil(2)
}
