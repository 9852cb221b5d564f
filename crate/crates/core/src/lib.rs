//! Exact decision procedures for fractional (g,f)-covered graphs.
//!
//! A graph G with integer degree windows g(x) <= f(x) is *fractional
//! (g,f)-covered* when every edge e admits a fractional factor using e at
//! full weight: an edge-weight function h: E -> [0, 1] with h(e) = 1 whose
//! weighted degrees satisfy g(x) <= sum over edges at x of h <= f(x) for
//! every vertex. It is *fractional (g,f,n)-critical covered* when it stays
//! covered after deleting any n vertices.
//!
//! The crate provides, all in exact integer/rational arithmetic:
//!
//! * [`coverage`] — a deterministic decision procedure built on the subset
//!   deficiency test: G is covered iff every vertex subset X satisfies
//!   f(X) + d_{G-X}(Y) - g(Y) >= eps(X), where Y collects the vertices
//!   outside X whose residual degree is at most their lower bound. Negative
//!   answers come with the lexicographically least violating subset.
//! * [`oracle`] — an independent brute-force search over discretized edge
//!   weights, used to cross-validate the structural test.
//! * [`theorem`] — checkable sufficient conditions: order, minimum-degree
//!   and independence-number thresholds in parameters (a, b, d, n), with
//!   exact rational margins.
//! * [`extremal`] — two graph families whose margins are exactly -1/(a+b-1)
//!   and 0, witnessing that the thresholds cannot be relaxed, plus a
//!   verifier that re-derives every claimed property.
//! * [`sweep`] — randomized agreement sweeps hunting for counterexamples to
//!   the sufficient conditions.
//! * [`io`] — plain-text graph files and degree-bound specifications.

pub mod bounds;
pub mod coverage;
pub mod error;
pub mod extremal;
pub mod frac;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod sweep;
pub mod theorem;

pub use bounds::DegreeBounds;
pub use coverage::{
    deficiency, epsilon, evaluate_subset, induced_y, is_covered, is_critical_covered,
    CheckerConfig, CoverageVerdict, CriticalVerdict, SubsetEvaluation, ViolationWitness,
    DEFAULT_MAX_VERTICES,
};
pub use error::{Error, Result};
pub use extremal::{
    build_remark1, build_remark2, verify_sharpness, ExtremalGraph, SharpnessReport,
    EXTREMAL_MAX_VERTICES,
};
pub use frac::Frac;
pub use graph::{Graph, RelabelMap, VertexSet, DEFAULT_INDEPENDENCE_LIMIT};
pub use io::{emit_graph, parse_bound_values, parse_graph, read_graph_file, write_graph_file};
pub use oracle::{
    covered_by_search, critical_covered_by_search, crosscheck_coverage, crosscheck_critical,
    has_fractional_factor, CriticalSearchVerdict, FactorCertificate, OracleConfig, SearchVerdict,
    DEFAULT_MAX_EDGES,
};
pub use sweep::{run_sweep, SweepCase, SweepConfig, SweepReport};
pub use theorem::{
    check_corollary_form, check_hypotheses, evaluate_thresholds, ConditionReport, HypothesesReport,
    Params, ThresholdReport,
};
