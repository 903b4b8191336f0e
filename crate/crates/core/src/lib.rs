//! Edge clique covers for graphs with independence number two.
//!
//! The crate constructs covers along the structural cases of such graphs,
//! detects the predicates those constructions depend on (dominating edges,
//! double tops, supercycles), and checks results against exact minimum
//! covers on small inputs.

pub mod bits;
pub mod classical;
pub mod cli;
pub mod dispatch;
pub mod error;
pub mod exact;
pub mod extension;
pub mod gen;
pub mod graph;
pub mod structure;

pub use bits::VertexSet;
pub use classical::{
    cover_diam3, cover_gprime_complete, cover_gprime_disconnected, cover_no_dominating, cover_theorem1,
    cover_w_vertices, cover_w_vertices_improved, partition_uvw, Theorem1Plan, UvwPartition,
};
pub use dispatch::{cover_dispatch, cover_fallback, route_bound, Dispatched};
pub use error::{EccError, Result};
pub use exact::{exact_ecc, maximal_cliques, ExactConfig, ExactResult};
pub use extension::{
    base_cliques, clique_at, compute_f, cover_theorem2, extend_clique, find_favourable,
    uncovered_dominating_edges, ExtensionState, FStat, Theorem2Options,
};
pub use gen::{enumerate_alpha_two, gen_alpha_two, gen_theorem1_instance, gen_theorem8_instance, GenKind, GenSpec};
pub use graph::{fixtures, verify_cover, Clique, CliqueCover, Diameter, Graph, VerificationReport};
pub use structure::{
    classify, dominating_edges, find_double_tops, has_supercycle, is_dominating_edge, DoubleTop, Route,
    StructureReport, Supercycle,
};

/// Version string embedded in every JSON report.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
