//! Exhaustive verification over every `alpha = 2` graph up to a given order.

use std::collections::BTreeMap;
use std::path::PathBuf;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::dispatch::{cover_dispatch, route_bound};
use crate::error::{EccError, Result};
use crate::exact::{exact_ecc, ExactConfig};
use crate::gen::{enumerate_alpha_two, ENUMERATION_CAP};
use crate::graph::{verify_cover, Graph};
use crate::structure::Route;
use crate::VERSION;

use super::io::{format_graph, GraphFormat};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Checks {
    pub bounds: bool,
    pub oracle: bool,
}

impl Default for Checks {
    fn default() -> Self {
        Checks { bounds: true, oracle: true }
    }
}

impl Checks {
    /// Parses a comma list such as `bounds,oracle`.
    pub fn parse(list: &str) -> Result<Checks> {
        let mut c = Checks { bounds: false, oracle: false };
        for item in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            match item {
                "bounds" => c.bounds = true,
                "oracle" => c.oracle = true,
                other => return Err(EccError::Input(format!("unknown check '{other}'"))),
            }
        }
        Ok(c)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyOptions {
    pub n_max: usize,
    pub checks: Checks,
    /// Worker threads; 0 lets rayon decide.
    pub jobs: usize,
    /// Where to write the first failing graph, as an edge list.
    pub dump: Option<PathBuf>,
}

impl VerifyOptions {
    pub fn new(n_max: usize) -> Self {
        VerifyOptions { n_max, checks: Checks::default(), jobs: 0, dump: None }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub n: usize,
    /// Position of the graph in the enumeration order for its `n`.
    pub index: usize,
    pub kind: String,
    pub detail: String,
    pub edges: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifySummary {
    pub version: String,
    pub n_max: usize,
    pub checks: Checks,
    pub graphs_checked: usize,
    pub per_n: BTreeMap<usize, usize>,
    pub per_route: BTreeMap<String, usize>,
    /// Graphs per route whose cover came from the exact solver instead of the construction.
    pub exact_fallbacks: BTreeMap<String, usize>,
    /// Largest `cover_size - exact` seen, when the oracle ran.
    pub max_excess_over_exact: Option<usize>,
    pub violations: Vec<Violation>,
    pub counterexample_file: Option<String>,
}

impl VerifySummary {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

struct Outcome {
    route: Option<Route>,
    used_oracle: bool,
    excess: Option<usize>,
    violations: Vec<(String, String)>,
}

fn check_one(g: &Graph, checks: Checks) -> Outcome {
    let n = g.n();
    let mut out = Outcome { route: None, used_oracle: false, excess: None, violations: Vec::new() };
    let d = match cover_dispatch(g) {
        Ok(d) => d,
        Err(e) => {
            out.violations.push(("error".into(), e.to_string()));
            return out;
        }
    };
    let route = d.report.route;
    out.route = Some(route);
    out.used_oracle = d.used_oracle;
    let rep = verify_cover(g, &d.cover);
    if !rep.valid {
        out.violations.push((
            "invalid_cover".into(),
            format!(
                "uncovered edge {:?}, non-clique index {:?}",
                rep.first_uncovered_edge, rep.non_clique_index
            ),
        ));
    }
    if checks.bounds && route != Route::Fallback {
        let (bound, name) = route_bound(route, n, d.report.dominating_edges.len());
        if d.cover.len() > bound {
            out.violations.push((
                "bound".into(),
                format!("route {route}: cover {} > {name} = {bound}", d.cover.len()),
            ));
        }
    }
    if checks.oracle {
        let cfg = ExactConfig { max_n: ENUMERATION_CAP, ..ExactConfig::default() };
        match exact_ecc(g, cfg) {
            Ok(r) => {
                if r.ecc > d.cover.len() {
                    out.violations.push((
                        "oracle_above_cover".into(),
                        format!("exact {} > cover {}", r.ecc, d.cover.len()),
                    ));
                }
                if r.ecc > n {
                    out.violations.push(("ecc_above_n".into(), format!("exact {} > n = {n}", r.ecc)));
                }
                out.excess = Some(d.cover.len().saturating_sub(r.ecc));
            }
            Err(e) => out.violations.push(("oracle_error".into(), e.to_string())),
        }
    }
    out
}

/// Runs the dispatcher on every graph with `2 <= n <= n_max` and collects
/// any check that fails. Results are merged in enumeration order, so the
/// summary does not depend on `jobs`.
pub fn run_verify(opts: &VerifyOptions) -> Result<VerifySummary> {
    if opts.n_max > ENUMERATION_CAP {
        return Err(EccError::Capacity { what: "verify --enumerate", n: opts.n_max, cap: ENUMERATION_CAP });
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs)
        .build()
        .map_err(|e| EccError::Input(format!("thread pool: {e}")))?;
    let mut summary = VerifySummary {
        version: VERSION.to_string(),
        n_max: opts.n_max,
        checks: opts.checks,
        graphs_checked: 0,
        per_n: BTreeMap::new(),
        per_route: BTreeMap::new(),
        exact_fallbacks: BTreeMap::new(),
        max_excess_over_exact: None,
        violations: Vec::new(),
        counterexample_file: None,
    };
    let mut first_bad: Option<Graph> = None;
    for n in 2..=opts.n_max {
        let graphs: Vec<Graph> = enumerate_alpha_two(n)?.collect();
        let outcomes: Vec<Outcome> =
            pool.install(|| graphs.par_iter().map(|g| check_one(g, opts.checks)).collect());
        summary.per_n.insert(n, graphs.len());
        summary.graphs_checked += graphs.len();
        for (index, (g, o)) in graphs.iter().zip(outcomes).enumerate() {
            if let Some(r) = o.route {
                *summary.per_route.entry(r.to_string()).or_default() += 1;
                if o.used_oracle {
                    *summary.exact_fallbacks.entry(r.to_string()).or_default() += 1;
                }
            }
            if let Some(x) = o.excess {
                summary.max_excess_over_exact = Some(summary.max_excess_over_exact.unwrap_or(0).max(x));
            }
            if !o.violations.is_empty() && first_bad.is_none() {
                first_bad = Some(g.clone());
            }
            for (kind, detail) in o.violations {
                summary.violations.push(Violation { n, index, kind, detail, edges: g.edges() });
            }
        }
    }
    if let (Some(path), Some(g)) = (&opts.dump, &first_bad) {
        std::fs::write(path, format_graph(g, GraphFormat::Edgelist))?;
        summary.counterexample_file = Some(path.display().to_string());
    }
    Ok(summary)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_orders_pass() {
        let s = run_verify(&VerifyOptions::new(5)).unwrap();
        assert!(s.passed(), "{:?}", s.violations);
        assert_eq!(s.per_n.values().copied().collect::<Vec<_>>(), vec![1, 6, 40, 387]);
        assert_eq!(s.graphs_checked, 434);
        assert_eq!(s.per_route.values().sum::<usize>(), 434);
    }

    #[test]
    fn rejects_large_orders_and_bad_checks() {
        assert!(matches!(run_verify(&VerifyOptions::new(8)), Err(EccError::Capacity { .. })));
        assert!(Checks::parse("bounds,nope").is_err());
        assert_eq!(Checks::parse("oracle").unwrap(), Checks { bounds: false, oracle: true });
    }
}
