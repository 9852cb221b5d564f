//! Randomized agreement sweeps between the sufficient conditions and the
//! exact decision procedure.
//!
//! A sweep generates a deterministic family of candidate graphs with degree
//! windows sampled inside the parameter sandwich, keeps the candidates that
//! satisfy every hypothesis, and then decides criticality exactly for each
//! survivor. Any survivor that is *not* critical covered is a counterexample
//! to the sufficient conditions, so a healthy run reports zero.
//!
//! Candidates are derived from the seed alone (each sample owns a counter
//! keyed RNG), evaluation runs in parallel with an order-preserving collect,
//! and the report contains no timing data, so reports are byte-identical
//! across runs and worker counts.

use rand::prelude::*;
use rand_chacha::ChaCha12Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds::DegreeBounds;
use crate::coverage::{is_critical_covered, CheckerConfig};
use crate::error::{Error, Result};
use crate::graph::{Graph, DEFAULT_INDEPENDENCE_LIMIT};
use crate::theorem::{evaluate_thresholds, Params};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepConfig {
    pub vertex_count: usize,
    /// Number of random graphs drawn after the fixed dense family.
    pub samples: usize,
    /// Edge probability for the random graphs.
    pub edge_prob: f64,
    pub params: Params,
    pub seed: u64,
}

/// One hypothesis-passing candidate and its exact verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepCase {
    /// `dense-j` (complete graph minus a j-edge matching) or `random-i`.
    pub source: String,
    pub edge_count: usize,
    pub g: Vec<i64>,
    pub f: Vec<i64>,
    pub critical_covered: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepReport {
    pub vertex_count: usize,
    pub random_samples: usize,
    pub edge_prob: f64,
    pub params: Params,
    pub seed: u64,
    /// Total candidates generated (dense family plus random samples).
    pub candidates: usize,
    pub hypotheses_passed: usize,
    /// Passing candidates whose g or f is not a constant vector.
    pub non_constant_bounds: usize,
    /// Passing candidates that the exact check nevertheless rejects.
    pub counterexamples: usize,
    pub cases: Vec<SweepCase>,
}

/// RNG for candidate `index`, derived from the sweep seed alone.
fn case_rng(seed: u64, index: u64) -> ChaCha12Rng {
    ChaCha12Rng::seed_from_u64(seed ^ (index + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

/// Complete graph on `p` vertices minus a matching of `j` edges.
fn dense_graph(p: usize, j: usize) -> Graph {
    let edges: Vec<(usize, usize)> = Graph::complete(p)
        .edges()
        .iter()
        .copied()
        .filter(|&(u, v)| !(u % 2 == 0 && v == u + 1 && u / 2 < j))
        .collect();
    Graph::new(p, &edges).expect("filtered complete graph is simple")
}

fn random_graph(p: usize, edge_prob: f64, rng: &mut ChaCha12Rng) -> Graph {
    let mut edges = Vec::new();
    for u in 0..p {
        for v in u + 1..p {
            if rng.random_bool(edge_prob) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(p, &edges).expect("sampled edges are simple")
}

/// Degree windows sampled uniformly inside the sandwich
/// a <= g(x) <= f(x) - d <= b - d.
fn random_bounds(p: usize, params: &Params, rng: &mut ChaCha12Rng) -> DegreeBounds {
    let (a, b, d) = (params.a(), params.b(), params.d());
    let g: Vec<i64> = (0..p).map(|_| rng.random_range(a..=b - d)).collect();
    let f: Vec<i64> = g.iter().map(|&gv| rng.random_range(gv + d..=b)).collect();
    DegreeBounds::new(g, f).expect("sampled windows are valid")
}

struct Candidate {
    source: String,
    graph: Graph,
    bounds: DegreeBounds,
}

fn generate_candidates(config: &SweepConfig) -> Vec<Candidate> {
    let p = config.vertex_count;
    let dense_count = (p / 2).min(4) + 1;
    let mut candidates = Vec::with_capacity(dense_count + config.samples);
    for j in 0..dense_count {
        let mut rng = case_rng(config.seed, candidates.len() as u64);
        candidates.push(Candidate {
            source: format!("dense-{j}"),
            graph: dense_graph(p, j),
            bounds: random_bounds(p, &config.params, &mut rng),
        });
    }
    for i in 0..config.samples {
        let mut rng = case_rng(config.seed, candidates.len() as u64);
        // Edges are drawn before the windows so either stream stays stable.
        let graph = random_graph(p, config.edge_prob, &mut rng);
        candidates.push(Candidate {
            source: format!("random-{i}"),
            graph,
            bounds: random_bounds(p, &config.params, &mut rng),
        });
    }
    candidates
}

/// `Some(case)` when the candidate passes every hypothesis, `None` when it
/// is filtered out before the exact check.
fn evaluate_candidate(candidate: &Candidate, config: &SweepConfig) -> Result<Option<SweepCase>> {
    let graph = &candidate.graph;
    let min_degree = graph.min_degree()? as i64;
    let alpha = graph.independence_number_with_limit(DEFAULT_INDEPENDENCE_LIMIT)?;
    let thresholds = evaluate_thresholds(
        graph.vertex_count() as i64,
        min_degree,
        alpha as i64,
        &config.params,
    );
    if !thresholds.all_hold {
        return Ok(None);
    }
    // The sweep runs cases in parallel already; keep each check sequential.
    let checker = CheckerConfig {
        workers: 1,
        ..CheckerConfig::default()
    };
    let verdict = is_critical_covered(
        graph,
        &candidate.bounds,
        config.params.n() as usize,
        &checker,
    )?;
    Ok(Some(SweepCase {
        source: candidate.source.clone(),
        edge_count: graph.edge_count(),
        g: candidate.bounds.g_values().to_vec(),
        f: candidate.bounds.f_values().to_vec(),
        critical_covered: verdict.critical_covered,
    }))
}

pub fn run_sweep(config: &SweepConfig) -> Result<SweepReport> {
    let p = config.vertex_count;
    if p == 0 {
        return Err(Error::input("sweeps need at least one vertex"));
    }
    if !(0.0..=1.0).contains(&config.edge_prob) {
        return Err(Error::input(format!(
            "edge probability must lie in [0, 1], got {}",
            config.edge_prob
        )));
    }
    if config.params.n() as usize >= p {
        return Err(Error::input(format!(
            "removal count n = {} must be smaller than the vertex count {p}",
            config.params.n()
        )));
    }

    let candidates = generate_candidates(config);
    let evaluated: Vec<Option<SweepCase>> = candidates
        .par_iter()
        .map(|candidate| evaluate_candidate(candidate, config))
        .collect::<Result<_>>()?;

    let cases: Vec<SweepCase> = evaluated.into_iter().flatten().collect();
    let non_constant = |values: &[i64]| values.windows(2).any(|w| w[0] != w[1]);
    Ok(SweepReport {
        vertex_count: p,
        random_samples: config.samples,
        edge_prob: config.edge_prob,
        params: config.params,
        seed: config.seed,
        candidates: candidates.len(),
        hypotheses_passed: cases.len(),
        non_constant_bounds: cases
            .iter()
            .filter(|c| non_constant(&c.g) || non_constant(&c.f))
            .count(),
        counterexamples: cases.iter().filter(|c| !c.critical_covered).count(),
        cases,
    })
}
