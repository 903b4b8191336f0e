//! Picks and runs the cover construction matching a graph's structure.

use serde::{Deserialize, Serialize};

use crate::classical::{
    cover_gprime_complete, cover_gprime_disconnected, cover_no_dominating, cover_theorem1, Theorem1Plan,
};
use crate::error::{EccError, Result};
use crate::exact::{exact_ecc, ExactConfig};
use crate::extension::{cover_theorem2, ExtensionState, Theorem2Options};
use crate::graph::{Clique, CliqueCover, Graph};
use crate::structure::{classify, Route, StructureReport};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Dispatched {
    pub cover: CliqueCover,
    pub report: StructureReport,
    pub theorem1: Option<Theorem1Plan>,
    pub extension: Option<ExtensionState>,
    /// The exact solver produced the cover.
    pub used_oracle: bool,
}

/// Size guarantee for the cover produced on `route`.
pub fn route_bound(route: Route, n: usize, dominating_edges: usize) -> (usize, &'static str) {
    match route {
        Route::Theorem8Eligible => (n + n / 2, "n+floor(n/2)"),
        Route::Fallback => (n + dominating_edges, "n+dominating_edges"),
        _ => (n, "n"),
    }
}

/// Cliques `C^x` plus one 2-clique for each dominating edge they miss.
pub fn cover_fallback(g: &Graph) -> Result<(CliqueCover, ExtensionState)> {
    let state = ExtensionState::new(g)?;
    let mut cover = CliqueCover::new(state.extended.iter().cloned());
    for &(a, b) in &state.uncovered {
        cover.push(Clique::new([a, b]));
    }
    Ok((cover, state))
}

fn exact(g: &Graph) -> Result<CliqueCover> {
    Ok(exact_ecc(g, ExactConfig::default())?.witness)
}

/// Classifies `g` and runs the construction for its route. Graphs with
/// `alpha >= 3` are rejected.
pub fn cover_dispatch(g: &Graph) -> Result<Dispatched> {
    let report = classify(g)?;
    if report.alpha >= 3 {
        return Err(EccError::Unsupported(format!(
            "alpha(G) = {} (only alpha <= 2 is supported)",
            report.alpha
        )));
    }
    let n = g.n();
    let mut out = Dispatched {
        cover: CliqueCover::default(),
        report: report.clone(),
        theorem1: None,
        extension: None,
        used_oracle: false,
    };
    let chosen = report.chosen_dominating_edge;
    match report.route {
        Route::Trivial => {
            if report.alpha <= 1 && n >= 2 {
                out.cover = CliqueCover::new([Clique::new(0..n)]);
            } else {
                out.cover = exact(g)?;
                out.used_oracle = true;
            }
        }
        Route::Disconnected => {
            out.cover = CliqueCover::new(g.connected_components().into_iter().map(Clique::new));
        }
        Route::NoDominatingEdge => out.cover = cover_no_dominating(g)?,
        Route::GPrimeComplete => {
            let (u, v) = chosen.expect("route records its edge");
            out.cover = cover_gprime_complete(g, u, v)?;
        }
        Route::GPrimeDisconnected => {
            let (u, v) = chosen.expect("route records its edge");
            out.cover = cover_gprime_disconnected(g, u, v)?;
            if out.cover.len() > n {
                out.cover = exact(g)?;
                out.used_oracle = true;
            }
        }
        Route::Theorem1 => {
            let (u, v) = chosen.expect("route records its edge");
            let (cover, plan) = cover_theorem1(g, u, v)?;
            out.used_oracle = plan.used_fallback;
            out.cover = cover;
            out.theorem1 = Some(plan);
        }
        Route::Theorem8Eligible => {
            let (cover, state) = cover_theorem2(g, Theorem2Options { check_hypotheses: false })?;
            out.cover = cover;
            out.extension = Some(state);
        }
        Route::Fallback => {
            let (cover, state) = cover_fallback(g)?;
            out.cover = cover;
            out.extension = Some(state);
        }
    }
    Ok(out)
}
