//! Independent brute-force oracle for fractional coverage.
//!
//! Instead of the structural subset test, this module searches directly for
//! edge-weight functions h: E -> {0, 1/q, ..., 1} whose weighted degrees land
//! inside [g, f] at every vertex. With q = 2 the discretization is exact for
//! existence questions: the feasible polytope has half-integral extreme
//! points, so a fractional assignment exists iff a half-integral one does.
//! Larger q only enlarges the searched grid and must never change verdicts,
//! which the test suite exploits as a consistency probe.
//!
//! The oracle shares nothing with the structural checker beyond the graph
//! type, so agreement between the two is meaningful evidence for both.

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::bounds::DegreeBounds;
use crate::coverage::{
    is_covered, is_critical_covered, CheckerConfig, CoverageVerdict, CriticalVerdict,
};
use crate::error::{Error, Result};
use crate::frac::Frac;
use crate::graph::{Graph, VertexSet};

/// Default edge cap: the assignment grid grows as `(q+1)^m`.
pub const DEFAULT_MAX_EDGES: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleConfig {
    /// Grid denominator q: edge weights range over multiples of 1/q.
    pub denominator: i64,
    /// Largest edge count accepted for the exhaustive search.
    pub max_edges: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            denominator: 2,
            max_edges: DEFAULT_MAX_EDGES,
        }
    }
}

/// A concrete edge-weight assignment certifying feasibility. Entry `i` is
/// the numerator of the weight of edge `i` (in the graph's canonical edge
/// order) over `denominator`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorCertificate {
    pub denominator: i64,
    pub numerators: Vec<i64>,
}

impl FactorCertificate {
    /// Edge weights as reduced fractions, in canonical edge order.
    pub fn weights(&self) -> Vec<Frac> {
        self.numerators
            .iter()
            .map(|&n| Frac::new(n, self.denominator))
            .collect()
    }

    /// Weighted degree of `v` under this assignment.
    pub fn weighted_degree(&self, graph: &Graph, v: usize) -> Frac {
        let total: i64 = graph
            .edges()
            .iter()
            .zip(&self.numerators)
            .filter(|(&(a, b), _)| a == v || b == v)
            .map(|(_, &n)| n)
            .sum();
        Frac::new(total, self.denominator)
    }

    /// Checks that the assignment actually satisfies the degree window at
    /// every vertex (and the forced edge, when one was requested).
    pub fn validate(
        &self,
        graph: &Graph,
        bounds: &DegreeBounds,
        forced_edge: Option<usize>,
    ) -> Result<()> {
        if self.numerators.len() != graph.edge_count() {
            return Err(Error::input(format!(
                "certificate covers {} edges but the graph has {}",
                self.numerators.len(),
                graph.edge_count()
            )));
        }
        if let Some(i) = forced_edge {
            if self.numerators.get(i) != Some(&self.denominator) {
                return Err(Error::input(format!(
                    "certificate does not give edge {i} full weight"
                )));
            }
        }
        for v in 0..graph.vertex_count() {
            let deg = self.weighted_degree(graph, v);
            if deg < Frac::from_int(bounds.g(v)) || deg > Frac::from_int(bounds.f(v)) {
                return Err(Error::input(format!(
                    "weighted degree {deg} of vertex {v} is outside [{}, {}]",
                    bounds.g(v),
                    bounds.f(v)
                )));
            }
        }
        Ok(())
    }
}

/// Outcome of the per-edge exhaustive coverage search.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchVerdict {
    pub covered: bool,
    /// First edge (canonical order) with no feasible assignment giving it
    /// full weight. `None` when covered, or when the failure is global
    /// (no feasible assignment exists at all, e.g. an isolated vertex).
    pub failing_edge: Option<(usize, usize)>,
}

/// Outcome of the exhaustive criticality search.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriticalSearchVerdict {
    pub critical_covered: bool,
    /// Lexicographically least removal set whose remainder fails.
    pub removed: Option<VertexSet>,
    /// Failing edge inside that remainder, in original labels.
    pub failing_edge: Option<(usize, usize)>,
}

fn validate_config(graph: &Graph, config: &OracleConfig) -> Result<()> {
    if config.denominator < 1 {
        return Err(Error::input(format!(
            "grid denominator must be at least 1, got {}",
            config.denominator
        )));
    }
    if graph.edge_count() > config.max_edges {
        return Err(Error::capacity(format!(
            "graph has {} edges, exhaustive search limit is {}; \
             raise max_edges if the grid walk is acceptable",
            graph.edge_count(),
            config.max_edges
        )));
    }
    Ok(())
}

// ============================================================================
// Grid search
// ============================================================================

struct GridSearch<'a> {
    graph: &'a Graph,
    bounds: &'a DegreeBounds,
    den: i64,
    forced: Option<usize>,
    /// Current weighted-degree numerators per vertex.
    sums: Vec<i64>,
    /// `den` times the number of still-unassigned edges at each vertex:
    /// the largest amount the vertex sum can still grow.
    slack: Vec<i64>,
    numerators: Vec<i64>,
}

impl<'a> GridSearch<'a> {
    fn new(graph: &'a Graph, bounds: &'a DegreeBounds, den: i64, forced: Option<usize>) -> Self {
        let p = graph.vertex_count();
        GridSearch {
            graph,
            bounds,
            den,
            forced,
            sums: vec![0; p],
            slack: (0..p)
                .map(|v| den * graph.neighbors(v).len() as i64)
                .collect(),
            numerators: vec![0; graph.edge_count()],
        }
    }

    /// Depth-first walk over assignments of edges `i..`, trying numerators
    /// in descending order. Upper-bound violations shrink with the value, so
    /// they `continue`; lower-bound infeasibility only worsens as the value
    /// drops, so it `break`s the whole level.
    fn assign(&mut self, i: usize) -> bool {
        let edges = self.graph.edges();
        if i == edges.len() {
            return (0..self.sums.len()).all(|v| self.sums[v] >= self.den * self.bounds.g(v));
        }
        let (u, v) = edges[i];
        self.slack[u] -= self.den;
        self.slack[v] -= self.den;
        let top = self.den;
        let bottom = if self.forced == Some(i) { self.den } else { 0 };
        for value in (bottom..=top).rev() {
            self.sums[u] += value;
            self.sums[v] += value;
            let over = self.sums[u] > self.den * self.bounds.f(u)
                || self.sums[v] > self.den * self.bounds.f(v);
            if !over {
                let dead = self.sums[u] + self.slack[u] < self.den * self.bounds.g(u)
                    || self.sums[v] + self.slack[v] < self.den * self.bounds.g(v);
                if dead {
                    self.sums[u] -= value;
                    self.sums[v] -= value;
                    break;
                }
                self.numerators[i] = value;
                if self.assign(i + 1) {
                    return true;
                }
            }
            self.sums[u] -= value;
            self.sums[v] -= value;
        }
        self.slack[u] += self.den;
        self.slack[v] += self.den;
        false
    }
}

/// Searches the grid for an edge-weight function with weighted degrees in
/// [g, f] everywhere, optionally forcing one edge to full weight. Returns
/// the first assignment found (a deterministic function of the canonical
/// edge order and the descending value order), or `None` if none exists.
pub fn has_fractional_factor(
    graph: &Graph,
    bounds: &DegreeBounds,
    forced_edge: Option<usize>,
    config: &OracleConfig,
) -> Result<Option<FactorCertificate>> {
    bounds.validate_for(graph)?;
    validate_config(graph, config)?;
    if let Some(i) = forced_edge {
        if i >= graph.edge_count() {
            return Err(Error::input(format!(
                "forced edge index {i} out of range for {} edges",
                graph.edge_count()
            )));
        }
    }
    // A vertex can collect at most its degree in weight, so g(v) > deg(v)
    // is hopeless; this also settles edgeless graphs immediately.
    for v in 0..graph.vertex_count() {
        if bounds.g(v) > graph.neighbors(v).len() as i64 {
            return Ok(None);
        }
    }
    let mut search = GridSearch::new(graph, bounds, config.denominator, forced_edge);
    if search.assign(0) {
        Ok(Some(FactorCertificate {
            denominator: config.denominator,
            numerators: search.numerators,
        }))
    } else {
        Ok(None)
    }
}

/// Decides coverage exhaustively: every edge must admit an assignment that
/// gives it full weight. On an edgeless graph this degenerates to plain
/// feasibility of the empty assignment, which fails whenever any vertex has
/// a positive lower bound — the same verdict the structural test reaches.
pub fn covered_by_search(
    graph: &Graph,
    bounds: &DegreeBounds,
    config: &OracleConfig,
) -> Result<SearchVerdict> {
    bounds.validate_for(graph)?;
    validate_config(graph, config)?;
    if graph.edge_count() == 0 {
        let feasible = has_fractional_factor(graph, bounds, None, config)?.is_some();
        return Ok(SearchVerdict {
            covered: feasible,
            failing_edge: None,
        });
    }
    for (i, &(u, v)) in graph.edges().iter().enumerate() {
        if has_fractional_factor(graph, bounds, Some(i), config)?.is_none() {
            return Ok(SearchVerdict {
                covered: false,
                failing_edge: Some((u, v)),
            });
        }
    }
    Ok(SearchVerdict {
        covered: true,
        failing_edge: None,
    })
}

/// Decides criticality exhaustively: the coverage search must succeed after
/// every possible deletion of `removals` vertices.
pub fn critical_covered_by_search(
    graph: &Graph,
    bounds: &DegreeBounds,
    removals: usize,
    config: &OracleConfig,
) -> Result<CriticalSearchVerdict> {
    bounds.validate_for(graph)?;
    validate_config(graph, config)?;
    let p = graph.vertex_count();
    if removals >= p {
        return Err(Error::input(format!(
            "removal count {removals} must be smaller than the vertex count {p}"
        )));
    }
    for combo in (0..p).combinations(removals) {
        let removed = VertexSet::from_sorted(combo);
        let (sub, map) = graph.delete_vertices(&removed)?;
        let sub_bounds = bounds.restrict(&map);
        let verdict = covered_by_search(&sub, &sub_bounds, config)?;
        if !verdict.covered {
            return Ok(CriticalSearchVerdict {
                critical_covered: false,
                removed: Some(removed),
                failing_edge: verdict
                    .failing_edge
                    .map(|(u, v)| (map.parent_of(u), map.parent_of(v))),
            });
        }
    }
    Ok(CriticalSearchVerdict {
        critical_covered: true,
        removed: None,
        failing_edge: None,
    })
}

// ============================================================================
// Cross-validation
// ============================================================================

/// Runs the structural coverage test and the exhaustive search side by side.
/// Disagreement is a hard error: it means one of the two implementations is
/// wrong, and neither verdict can be trusted.
pub fn crosscheck_coverage(
    graph: &Graph,
    bounds: &DegreeBounds,
    checker: &CheckerConfig,
    oracle: &OracleConfig,
) -> Result<CoverageVerdict> {
    let structural = is_covered(graph, bounds, checker)?;
    let search = covered_by_search(graph, bounds, oracle)?;
    if structural.covered != search.covered {
        return Err(Error::disagreement(format!(
            "structural test says covered = {}, exhaustive search says covered = {}",
            structural.covered, search.covered
        )));
    }
    Ok(structural)
}

/// Criticality counterpart of [`crosscheck_coverage`].
pub fn crosscheck_critical(
    graph: &Graph,
    bounds: &DegreeBounds,
    removals: usize,
    checker: &CheckerConfig,
    oracle: &OracleConfig,
) -> Result<CriticalVerdict> {
    let structural = is_critical_covered(graph, bounds, removals, checker)?;
    let search = critical_covered_by_search(graph, bounds, removals, oracle)?;
    if structural.critical_covered != search.critical_covered {
        return Err(Error::disagreement(format!(
            "structural test says critical covered = {}, exhaustive search says {}",
            structural.critical_covered, search.critical_covered
        )));
    }
    Ok(structural)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn constant(p: usize, g: i64, f: i64) -> DegreeBounds {
        DegreeBounds::constant(p, g, f).unwrap()
    }

    fn cfg() -> OracleConfig {
        OracleConfig::default()
    }

    #[test]
    fn triangle_factor_is_found_half_integral() {
        let k3 = Graph::complete(3);
        let b = constant(3, 1, 1);
        let cert = has_fractional_factor(&k3, &b, None, &cfg())
            .unwrap()
            .unwrap();
        assert_eq!(cert.denominator, 2);
        assert_eq!(cert.numerators, vec![1, 1, 1]);
        cert.validate(&k3, &b, None).unwrap();
        assert_eq!(cert.weighted_degree(&k3, 0), Frac::from_int(1));
        // No single edge can carry full weight, so the triangle is uncovered.
        let verdict = covered_by_search(&k3, &b, &cfg()).unwrap();
        assert!(!verdict.covered);
        assert_eq!(verdict.failing_edge, Some((0, 1)));
    }

    #[test]
    fn single_edge_and_square_are_covered() {
        let k2 = Graph::complete(2);
        let verdict = covered_by_search(&k2, &constant(2, 1, 1), &cfg()).unwrap();
        assert!(verdict.covered);
        assert_eq!(verdict.failing_edge, None);

        let c4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        assert!(
            covered_by_search(&c4, &constant(4, 1, 1), &cfg())
                .unwrap()
                .covered
        );
    }

    #[test]
    fn path_fails_at_its_first_edge() {
        let p3 = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        let verdict = covered_by_search(&p3, &constant(3, 1, 1), &cfg()).unwrap();
        assert!(!verdict.covered);
        assert_eq!(verdict.failing_edge, Some((0, 1)));
    }

    #[test]
    fn star_center_cannot_feed_every_leaf() {
        let star = Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let verdict = covered_by_search(&star, &constant(4, 1, 1), &cfg()).unwrap();
        assert!(!verdict.covered);
        assert_eq!(verdict.failing_edge, Some((0, 1)));
    }

    #[test]
    fn edgeless_graphs_fail_feasibility_outright() {
        let verdict = covered_by_search(&Graph::edgeless(3), &constant(3, 1, 1), &cfg()).unwrap();
        assert!(!verdict.covered);
        assert_eq!(verdict.failing_edge, None);
        // The empty graph is vacuously covered.
        let verdict = covered_by_search(
            &Graph::edgeless(0),
            &DegreeBounds::constant(0, 1, 1).unwrap(),
            &cfg(),
        )
        .unwrap();
        assert!(verdict.covered);
    }

    #[test]
    fn isolated_vertex_poisons_every_edge() {
        // A triangle plus an isolated vertex: feasibility is impossible.
        let g = Graph::new(4, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        let verdict = covered_by_search(&g, &constant(4, 1, 2), &cfg()).unwrap();
        assert!(!verdict.covered);
        assert_eq!(verdict.failing_edge, Some((0, 1)));
    }

    #[test]
    fn forced_edge_index_is_validated() {
        let k2 = Graph::complete(2);
        let b = constant(2, 1, 1);
        assert!(matches!(
            has_fractional_factor(&k2, &b, Some(1), &cfg()),
            Err(Error::Input(_))
        ));
    }

    #[test]
    fn config_limits_are_enforced() {
        let k2 = Graph::complete(2);
        let b = constant(2, 1, 1);
        let zero_den = OracleConfig {
            denominator: 0,
            ..cfg()
        };
        assert!(matches!(
            covered_by_search(&k2, &b, &zero_den),
            Err(Error::Input(_))
        ));
        let tiny = OracleConfig {
            max_edges: 0,
            ..cfg()
        };
        assert!(matches!(
            covered_by_search(&k2, &b, &tiny),
            Err(Error::Capacity(_))
        ));
    }

    #[test]
    fn critical_search_examples() {
        // K4 with unit bounds: removing any vertex leaves an uncovered K3.
        let verdict =
            critical_covered_by_search(&Graph::complete(4), &constant(4, 1, 1), 1, &cfg()).unwrap();
        assert!(!verdict.critical_covered);
        assert_eq!(verdict.removed, Some(VertexSet::new([0])));
        assert_eq!(verdict.failing_edge, Some((1, 2)));

        // K5 with the window [1, 2] survives any single removal.
        let verdict =
            critical_covered_by_search(&Graph::complete(5), &constant(5, 1, 2), 1, &cfg()).unwrap();
        assert!(verdict.critical_covered);
    }

    #[test]
    fn denominators_two_and_four_agree_on_random_graphs() {
        use rand::prelude::*;
        let mut rng = rand_chacha::ChaCha12Rng::seed_from_u64(7);
        let four = OracleConfig {
            denominator: 4,
            ..cfg()
        };
        let mut checked = 0;
        for _ in 0..60 {
            let p = rng.random_range(1..=5);
            let mut edges = Vec::new();
            for u in 0..p {
                for v in u + 1..p {
                    if rng.random_bool(0.6) {
                        edges.push((u, v));
                    }
                }
            }
            let graph = Graph::new(p, &edges).unwrap();
            let g = rng.random_range(1..=2);
            let bounds = constant(p, g, rng.random_range(g..=3));
            let coarse = covered_by_search(&graph, &bounds, &cfg()).unwrap();
            let fine = covered_by_search(&graph, &bounds, &four).unwrap();
            assert_eq!(coarse.covered, fine.covered);
            checked += 1;
        }
        assert_eq!(checked, 60);
    }

    #[test]
    fn search_agrees_with_structural_test_on_random_graphs() {
        use rand::prelude::*;
        let mut rng = rand_chacha::ChaCha12Rng::seed_from_u64(23);
        let checker = CheckerConfig {
            workers: 1,
            ..CheckerConfig::default()
        };
        for _ in 0..80 {
            let p = rng.random_range(1..=6);
            let mut edges = Vec::new();
            for u in 0..p {
                for v in u + 1..p {
                    if rng.random_bool(0.5) {
                        edges.push((u, v));
                    }
                }
            }
            let graph = Graph::new(p, &edges).unwrap();
            let g = rng.random_range(1..=2);
            let bounds = constant(p, g, rng.random_range(g..=3));
            // Panics with a disagreement error if the two paths diverge.
            crosscheck_coverage(&graph, &bounds, &checker, &cfg()).unwrap();
        }
    }

    #[test]
    fn certificates_from_random_searches_validate() {
        use rand::prelude::*;
        let mut rng = rand_chacha::ChaCha12Rng::seed_from_u64(101);
        for _ in 0..60 {
            let p = rng.random_range(2..=6);
            let mut edges = Vec::new();
            for u in 0..p {
                for v in u + 1..p {
                    if rng.random_bool(0.6) {
                        edges.push((u, v));
                    }
                }
            }
            let graph = Graph::new(p, &edges).unwrap();
            if graph.edge_count() == 0 {
                continue;
            }
            let bounds = constant(p, 1, 2);
            let forced = rng.random_range(0..graph.edge_count());
            if let Some(cert) =
                has_fractional_factor(&graph, &bounds, Some(forced), &cfg()).unwrap()
            {
                cert.validate(&graph, &bounds, Some(forced)).unwrap();
            }
        }
    }
}
