//! JSON and text reports emitted by the command-line front end.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::classical::{cover_diam3, cover_no_dominating, cover_theorem1, ceil_half};
use crate::dispatch::{cover_dispatch, cover_fallback, route_bound};
use crate::error::{EccError, Result};
use crate::exact::{exact_ecc, ExactConfig};
use crate::extension::{compute_f, cover_theorem2, ExtensionState, Theorem2Options};
use crate::graph::{verify_cover, Clique, CliqueCover, Diameter, Graph};
use crate::structure::{classify, dominating_edges, StructureReport};
use crate::classical::Theorem1Plan;
use crate::VERSION;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Method {
    #[default]
    Auto,
    NoDominating,
    Diam3,
    Theorem1,
    Theorem8,
    Fallback,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Auto => "auto",
            Method::NoDominating => "no-dominating",
            Method::Diam3 => "diam3",
            Method::Theorem1 => "theorem1",
            Method::Theorem8 => "theorem8",
            Method::Fallback => "fallback",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = EccError;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "auto" => Method::Auto,
            "no-dominating" => Method::NoDominating,
            "diam3" => Method::Diam3,
            "theorem1" => Method::Theorem1,
            "theorem8" => Method::Theorem8,
            "fallback" => Method::Fallback,
            other => return Err(EccError::Input(format!("unknown method '{other}'"))),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Theorem1Summary {
    pub u: usize,
    pub v: usize,
    pub u_size: usize,
    pub v_size: usize,
    pub w_size: usize,
    pub d_cliques: usize,
    pub b_cliques: usize,
    pub improved_w_cover: bool,
    pub budget_m: usize,
    pub used_fallback: bool,
}

impl From<&Theorem1Plan> for Theorem1Summary {
    fn from(p: &Theorem1Plan) -> Self {
        Theorem1Summary {
            u: p.partition.u,
            v: p.partition.v,
            u_size: p.partition.only_u.len(),
            v_size: p.partition.only_v.len(),
            w_size: p.partition.both.len(),
            d_cliques: p.d_cliques.len(),
            b_cliques: p.b_cliques.len(),
            improved_w_cover: p.improved_w_cover,
            budget_m: p.budget_m,
            used_fallback: p.used_fallback,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtensionSummary {
    /// Nonempty extended cliques emitted.
    pub d_part: usize,
    /// Cliques added by the elimination loop.
    pub d_prime_part: usize,
    pub initially_uncovered: usize,
    pub f: usize,
}

impl ExtensionSummary {
    fn new(state: &ExtensionState, f: usize) -> Self {
        ExtensionSummary {
            d_part: state.extended.iter().filter(|c| !c.is_empty()).count(),
            d_prime_part: state.d_prime.len(),
            initially_uncovered: state.initially_uncovered.len(),
            f,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverReport {
    pub version: String,
    pub method: String,
    pub route: String,
    pub n: usize,
    pub edge_count: usize,
    pub cover_size: usize,
    pub bound: usize,
    pub bound_name: String,
    pub valid: bool,
    pub f: Option<usize>,
    pub warnings: Vec<String>,
    pub oracle_ecc: Option<usize>,
    pub elapsed_ms: u64,
    pub cliques: Vec<Clique>,
    pub theorem1: Option<Theorem1Summary>,
    pub extension: Option<ExtensionSummary>,
}

impl CoverReport {
    pub fn within_bound(&self) -> bool {
        self.cover_size <= self.bound
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ReportOptions {
    /// Run the exact solver when `n` is within this configuration's cap.
    pub oracle: Option<ExactConfig>,
    /// Record wall-clock time; when false `elapsed_ms` is 0 so reports are reproducible.
    pub timing: bool,
}

fn theorem1_edge(g: &Graph) -> Result<(usize, usize)> {
    dominating_edges(g)
        .into_iter()
        .find(|&(u, v)| {
            g.without(&[u, v]).map(|s| s.graph.diameter() == Diameter::Finite(3)).unwrap_or(false)
        })
        .ok_or_else(|| {
            EccError::Precondition("no dominating edge uv with G \\ {u, v} of diameter 3".into())
        })
}

/// Builds a cover with `method` and reports it against the method's bound.
pub fn cover_report(
    g: &Graph,
    method: Method,
    edge: Option<(usize, usize)>,
    opts: ReportOptions,
) -> Result<CoverReport> {
    let start = Instant::now();
    let n = g.n();
    let mut warnings = Vec::new();
    let mut theorem1 = None;
    let mut extension: Option<(ExtensionState, usize)> = None;
    let mut f = None;

    let (cover, route, bound, bound_name): (CliqueCover, String, usize, String) = match method {
        Method::Auto => {
            let d = cover_dispatch(g)?;
            let (bound, name) = route_bound(d.report.route, n, d.report.dominating_edges.len());
            theorem1 = d.theorem1.as_ref().map(Theorem1Summary::from);
            if let Some(state) = d.extension {
                let fv = compute_f(g).f;
                f = Some(fv);
                extension = Some((state, fv));
            }
            if d.used_oracle {
                warnings.push("cover produced by the exact solver".to_string());
            }
            (d.cover, d.report.route.to_string(), bound, name.to_string())
        }
        Method::NoDominating => (cover_no_dominating(g)?, method.to_string(), n, "n".into()),
        Method::Diam3 => (cover_diam3(g)?, method.to_string(), ceil_half(n + 1), "ceil((n+1)/2)".into()),
        Method::Theorem1 => {
            let (u, v) = match edge {
                Some(e) => e,
                None => theorem1_edge(g)?,
            };
            let (cover, plan) = cover_theorem1(g, u, v)?;
            if plan.used_fallback {
                warnings.push("cover produced by the exact solver".to_string());
            }
            theorem1 = Some(Theorem1Summary::from(&plan));
            (cover, method.to_string(), n, "n".into())
        }
        Method::Theorem8 => {
            let (cover, state) = cover_theorem2(g, Theorem2Options::default())?;
            let fv = compute_f(g).f;
            f = Some(fv);
            extension = Some((state, fv));
            (cover, method.to_string(), n + n / 2, "n+floor(n/2)".into())
        }
        Method::Fallback => {
            let (cover, state) = cover_fallback(g)?;
            let fv = compute_f(g).f;
            f = Some(fv);
            extension = Some((state, fv));
            let dom = dominating_edges(g).len();
            (cover, method.to_string(), n + dom, "n+dominating_edges".into())
        }
    };
    if let Some((state, _)) = &extension {
        warnings.extend(state.warnings.iter().cloned());
    }
    let verification = verify_cover(g, &cover);
    let oracle_ecc = match opts.oracle {
        Some(cfg) if n <= cfg.max_n => Some(exact_ecc(g, cfg)?.ecc),
        _ => None,
    };
    let elapsed_ms = if opts.timing { start.elapsed().as_millis() as u64 } else { 0 };
    Ok(CoverReport {
        version: VERSION.to_string(),
        method: method.to_string(),
        route,
        n,
        edge_count: g.edge_count(),
        cover_size: cover.len(),
        bound,
        bound_name,
        valid: verification.valid,
        f,
        warnings,
        oracle_ecc,
        elapsed_ms,
        cliques: cover.cliques,
        theorem1,
        extension: extension.map(|(s, fv)| ExtensionSummary::new(&s, fv)),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyReport {
    pub version: String,
    #[serde(flatten)]
    pub structure: StructureReport,
}

pub fn classify_report(g: &Graph) -> Result<ClassifyReport> {
    Ok(ClassifyReport { version: VERSION.to_string(), structure: classify(g)? })
}

impl fmt::Display for CoverReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "route:      {} (method {})", self.route, self.method)?;
        writeln!(f, "graph:      n = {}, m = {}", self.n, self.edge_count)?;
        writeln!(
            f,
            "cover:      {} cliques, bound {} = {} ({})",
            self.cover_size,
            self.bound_name,
            self.bound,
            if self.within_bound() { "met" } else { "exceeded" }
        )?;
        writeln!(f, "valid:      {}", self.valid)?;
        if let Some(fv) = self.f {
            writeln!(f, "f:          {fv}")?;
        }
        if let Some(e) = self.oracle_ecc {
            writeln!(f, "exact ecc:  {e}")?;
        }
        for w in &self.warnings {
            writeln!(f, "warning:    {w}")?;
        }
        for c in &self.cliques {
            writeln!(f, "  {:?}", c.vertices())?;
        }
        Ok(())
    }
}

impl fmt::Display for ClassifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = &self.structure;
        writeln!(f, "n:                   {}", s.n)?;
        writeln!(f, "alpha:               {}", s.alpha)?;
        writeln!(f, "diameter:            {}", s.diameter)?;
        writeln!(f, "dominating edges:    {:?}", s.dominating_edges)?;
        writeln!(f, "incompatible top:    {}", s.has_incompatible_double_top)?;
        writeln!(f, "supercycle:          {}", s.has_supercycle)?;
        writeln!(f, "route:               {}", s.route)?;
        if let Some((u, v)) = s.chosen_dominating_edge {
            writeln!(f, "chosen edge:         ({u}, {v})")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;

    #[test]
    fn auto_report_for_t1() {
        let r = cover_report(&t1(), Method::Auto, None, ReportOptions::default()).unwrap();
        assert_eq!(r.route, "Theorem1");
        assert!(r.valid && r.within_bound());
        assert_eq!(r.theorem1.as_ref().unwrap().budget_m, 6);
        assert_eq!(r.elapsed_ms, 0);
    }

    #[test]
    fn explicit_methods() {
        let opts = ReportOptions { oracle: Some(ExactConfig::default()), timing: false };
        let r = cover_report(&p4(), Method::Diam3, None, opts).unwrap();
        assert_eq!((r.cover_size, r.bound), (3, 3));
        assert_eq!(r.oracle_ecc, Some(3));
        let r = cover_report(&oct(), Method::Fallback, None, opts).unwrap();
        assert!(r.valid);
        assert!(!r.warnings.is_empty());
        assert!(cover_report(&oct(), Method::Theorem8, None, opts).is_err());
        let r = cover_report(&t1(), Method::Theorem1, None, opts).unwrap();
        assert_eq!(r.theorem1.unwrap().u.min(5), 4);
        assert!("bogus".parse::<Method>().is_err());
    }
}
