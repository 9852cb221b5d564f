//! Exact decision procedure for fractional (g,f)-coveredness.
//!
//! A graph is fractional (g,f)-covered exactly when, for every vertex subset
//! X with induced low-degree set Y = {x in V - X : d_{G-X}(x) <= g(x)}, the
//! deficiency f(X) + d_{G-X}(Y) - g(Y) reaches the requirement eps(X). The
//! checker enumerates X in lexicographic order (compare subsets as their
//! ascending member vectors) and reports the first violating subset, so
//! witnesses are deterministic and stable across runs and worker counts.
//!
//! Apply the same test to every n-element removal set to decide fractional
//! (g,f,n)-critical coveredness.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use itertools::Itertools;

use crate::bounds::DegreeBounds;
use crate::error::{Error, Result};
use crate::graph::{Graph, RelabelMap, VertexSet};

/// Default vertex cap for full subset enumeration (cost grows as `2^p`).
pub const DEFAULT_MAX_VERTICES: usize = 26;

/// Below this size the parallel split is pure overhead.
const SEQUENTIAL_CUTOFF: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckerConfig {
    /// Largest vertex count accepted for enumeration.
    pub max_vertices: usize,
    /// Worker threads: 0 picks the ambient rayon pool for large instances,
    /// 1 forces the sequential path, k >= 2 runs a dedicated pool of k.
    pub workers: usize,
}

impl Default for CheckerConfig {
    fn default() -> Self {
        CheckerConfig {
            max_vertices: DEFAULT_MAX_VERTICES,
            workers: 0,
        }
    }
}

/// A subset X certifying that the coverage condition fails, together with
/// the quantities that witness the failure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ViolationWitness {
    pub x: VertexSet,
    pub y: VertexSet,
    pub gamma: i64,
    pub epsilon: i64,
    /// Minimum of d_{G-X} over Y; absent when Y is empty.
    pub h_min: Option<usize>,
}

impl ViolationWitness {
    /// Translates subgraph labels back to parent labels.
    pub fn lift(&self, map: &RelabelMap) -> ViolationWitness {
        ViolationWitness {
            x: map.lift(&self.x),
            y: map.lift(&self.y),
            gamma: self.gamma,
            epsilon: self.epsilon,
            h_min: self.h_min,
        }
    }
}

/// All derived quantities for one subset X.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsetEvaluation {
    pub y: VertexSet,
    pub gamma: i64,
    pub epsilon: i64,
    pub h_min: Option<usize>,
}

impl SubsetEvaluation {
    pub fn violates(&self) -> bool {
        self.gamma < self.epsilon
    }

    pub fn into_witness(self, x: &VertexSet) -> ViolationWitness {
        ViolationWitness {
            x: x.clone(),
            y: self.y,
            gamma: self.gamma,
            epsilon: self.epsilon,
            h_min: self.h_min,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverageVerdict {
    pub covered: bool,
    pub witness: Option<ViolationWitness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriticalVerdict {
    pub critical_covered: bool,
    /// Lexicographically least removal set whose remainder fails.
    pub removed: Option<VertexSet>,
    /// Violation inside that remainder, in original labels.
    pub witness: Option<ViolationWitness>,
}

// ============================================================================
// Reference evaluation of a single subset
// ============================================================================

/// Evaluates one subset from scratch. This is the reference semantics the
/// incremental enumerator must agree with; it recomputes every degree by
/// filtering adjacency lists.
pub fn evaluate_subset(
    graph: &Graph,
    bounds: &DegreeBounds,
    x: &VertexSet,
) -> Result<SubsetEvaluation> {
    bounds.validate_for(graph)?;
    let p = graph.vertex_count();
    if let Some(v) = x.iter().find(|&v| v >= p) {
        return Err(Error::input(format!(
            "vertex {v} out of range for {p} vertices"
        )));
    }
    let in_x: Vec<bool> = {
        let mut m = vec![false; p];
        x.iter().for_each(|v| m[v] = true);
        m
    };
    let residual_degree = |v: usize| graph.neighbors(v).iter().filter(|&&w| !in_x[w]).count();

    let mut y_members = Vec::new();
    let mut gamma: i64 = x.iter().map(|v| bounds.f(v)).sum();
    let mut h_min: Option<usize> = None;
    for v in 0..p {
        if in_x[v] {
            continue;
        }
        let deg = residual_degree(v);
        if (deg as i64) <= bounds.g(v) {
            y_members.push(v);
            gamma += deg as i64 - bounds.g(v);
            h_min = Some(h_min.map_or(deg, |m| m.min(deg)));
        }
    }
    let y = VertexSet::from_sorted(y_members);

    let epsilon = if x
        .iter()
        .any(|u| graph.neighbors(u).iter().any(|&w| w > u && in_x[w]))
    {
        2
    } else {
        let mut eps = 0;
        'scan: for u in x.iter() {
            for &w in graph.neighbors(u) {
                if in_x[w] {
                    continue;
                }
                // An edge from X either leaves X u Y entirely, or lands on a
                // Y-vertex whose residual degree meets g exactly.
                if !y.contains(w) || residual_degree(w) as i64 == bounds.g(w) {
                    eps = 1;
                    break 'scan;
                }
            }
        }
        eps
    };

    Ok(SubsetEvaluation {
        y,
        gamma,
        epsilon,
        h_min,
    })
}

/// The induced low-degree set Y for a subset X.
pub fn induced_y(graph: &Graph, bounds: &DegreeBounds, x: &VertexSet) -> Result<VertexSet> {
    Ok(evaluate_subset(graph, bounds, x)?.y)
}

/// The requirement eps(X) in {0, 1, 2}.
pub fn epsilon(graph: &Graph, bounds: &DegreeBounds, x: &VertexSet) -> Result<i64> {
    Ok(evaluate_subset(graph, bounds, x)?.epsilon)
}

/// The deficiency f(X) + d_{G-X}(Y) - g(Y), with Y as a byproduct.
pub fn deficiency(graph: &Graph, bounds: &DegreeBounds, x: &VertexSet) -> Result<(i64, VertexSet)> {
    let eval = evaluate_subset(graph, bounds, x)?;
    Ok((eval.gamma, eval.y))
}

// ============================================================================
// Incremental enumerator
// ============================================================================

/// Depth-first enumerator over subsets in lexicographic order, maintaining
/// residual degrees, the f-sum over X and the count of internal X edges
/// incrementally across push/pop.
struct Enumerator<'a> {
    graph: &'a Graph,
    bounds: &'a DegreeBounds,
    p: usize,
    in_x: Vec<bool>,
    /// Residual degree d_{G-X}(v); entries for members of X are stale.
    degree: Vec<i64>,
    x: Vec<usize>,
    x_edges: usize,
    f_sum: i64,
    // Scratch for evaluations, reused via stamping to stay allocation-free.
    y_stamp: Vec<u64>,
    stamp: u64,
    y_buf: Vec<usize>,
}

impl<'a> Enumerator<'a> {
    fn new(graph: &'a Graph, bounds: &'a DegreeBounds) -> Self {
        let p = graph.vertex_count();
        Enumerator {
            graph,
            bounds,
            p,
            in_x: vec![false; p],
            degree: (0..p).map(|v| graph.neighbors(v).len() as i64).collect(),
            x: Vec::with_capacity(p),
            x_edges: 0,
            f_sum: 0,
            y_stamp: vec![0; p],
            stamp: 0,
            y_buf: Vec::with_capacity(p),
        }
    }

    fn push(&mut self, v: usize) {
        self.in_x[v] = true;
        self.x.push(v);
        self.f_sum += self.bounds.f(v);
        for &w in self.graph.neighbors(v) {
            if self.in_x[w] {
                self.x_edges += 1;
            } else {
                self.degree[w] -= 1;
            }
        }
    }

    fn pop(&mut self, v: usize) {
        for &w in self.graph.neighbors(v) {
            if self.in_x[w] {
                self.x_edges -= 1;
            } else {
                self.degree[w] += 1;
            }
        }
        self.in_x[v] = false;
        self.x.pop();
        self.f_sum -= self.bounds.f(v);
    }

    /// Evaluates the current subset; returns a witness iff it violates.
    fn check_current(&mut self) -> Option<ViolationWitness> {
        self.stamp += 1;
        self.y_buf.clear();
        let mut gamma = self.f_sum;
        let mut h_min = i64::MAX;
        for v in 0..self.p {
            if !self.in_x[v] && self.degree[v] <= self.bounds.g(v) {
                self.y_buf.push(v);
                self.y_stamp[v] = self.stamp;
                gamma += self.degree[v] - self.bounds.g(v);
                h_min = h_min.min(self.degree[v]);
            }
        }

        let epsilon = if self.x_edges > 0 {
            2
        } else {
            let mut eps = 0;
            'scan: for i in 0..self.x.len() {
                let u = self.x[i];
                for &w in self.graph.neighbors(u) {
                    if self.in_x[w] {
                        continue;
                    }
                    if self.y_stamp[w] != self.stamp || self.degree[w] == self.bounds.g(w) {
                        eps = 1;
                        break 'scan;
                    }
                }
            }
            eps
        };

        if gamma < epsilon {
            Some(ViolationWitness {
                x: VertexSet::from_sorted(self.x.clone()),
                y: VertexSet::from_sorted(self.y_buf.clone()),
                gamma,
                epsilon,
                h_min: if self.y_buf.is_empty() {
                    None
                } else {
                    Some(h_min as usize)
                },
            })
        } else {
            None
        }
    }

    /// Checks the current subset, then all extensions by vertices >= start,
    /// in lexicographic order. Returns the first violation encountered.
    fn search(&mut self, start: usize) -> Option<ViolationWitness> {
        if let Some(found) = self.check_current() {
            return Some(found);
        }
        for v in start..self.p {
            self.push(v);
            let found = self.search(v + 1);
            self.pop(v);
            if found.is_some() {
                return found;
            }
        }
        None
    }
}

// ============================================================================
// Deterministic parallel search
// ============================================================================

/// Work items in exact lexicographic order: subsets shorter than the split
/// depth are single visits, subsets at the split depth own their whole
/// extension subtree. Searching items in order therefore yields the global
/// lexicographic minimum.
enum Task {
    Visit(Vec<usize>),
    Subtree(Vec<usize>),
}

fn build_tasks(p: usize, depth: usize) -> Vec<Task> {
    fn rec(p: usize, depth: usize, prefix: &mut Vec<usize>, start: usize, out: &mut Vec<Task>) {
        for v in start..p {
            prefix.push(v);
            if prefix.len() == depth {
                out.push(Task::Subtree(prefix.clone()));
            } else {
                out.push(Task::Visit(prefix.clone()));
                rec(p, depth, prefix, v + 1, out);
            }
            prefix.pop();
        }
    }
    let mut tasks = vec![Task::Visit(Vec::new())];
    let mut prefix = Vec::new();
    rec(p, depth, &mut prefix, 0, &mut tasks);
    tasks
}

fn run_task(graph: &Graph, bounds: &DegreeBounds, task: &Task) -> Option<ViolationWitness> {
    let mut enumerator = Enumerator::new(graph, bounds);
    match task {
        Task::Visit(prefix) => {
            prefix.iter().for_each(|&v| enumerator.push(v));
            enumerator.check_current()
        }
        Task::Subtree(prefix) => {
            prefix.iter().for_each(|&v| enumerator.push(v));
            let start = prefix.last().map_or(0, |&v| v + 1);
            enumerator.search(start)
        }
    }
}

/// First violating subset in lexicographic order, or None if covered.
fn first_violation(
    graph: &Graph,
    bounds: &DegreeBounds,
    config: &CheckerConfig,
) -> Option<ViolationWitness> {
    let p = graph.vertex_count();
    let sequential = config.workers == 1 || (config.workers == 0 && p <= SEQUENTIAL_CUTOFF);
    if sequential {
        return Enumerator::new(graph, bounds).search(0);
    }
    let depth = if p >= 20 { 3 } else { 2 };
    let tasks = build_tasks(p, depth);
    let scan = || {
        tasks
            .par_iter()
            .find_map_first(|task| run_task(graph, bounds, task))
    };
    if config.workers == 0 {
        scan()
    } else {
        match rayon::ThreadPoolBuilder::new()
            .num_threads(config.workers)
            .build()
        {
            Ok(pool) => pool.install(scan),
            // A pool failure only costs parallelism, never the verdict.
            Err(_) => Enumerator::new(graph, bounds).search(0),
        }
    }
}

// ============================================================================
// Public checks
// ============================================================================

fn check_enumeration_size(graph: &Graph, config: &CheckerConfig) -> Result<()> {
    let p = graph.vertex_count();
    if p > config.max_vertices {
        return Err(Error::capacity(format!(
            "graph has {p} vertices, subset enumeration limit is {}; \
             raise max_vertices if the 2^{p} walk is acceptable",
            config.max_vertices
        )));
    }
    Ok(())
}

/// Decides fractional (g,f)-coveredness by full subset enumeration.
///
/// Returns the verdict together with the lexicographically least violating
/// subset when the answer is negative.
pub fn is_covered(
    graph: &Graph,
    bounds: &DegreeBounds,
    config: &CheckerConfig,
) -> Result<CoverageVerdict> {
    bounds.validate_for(graph)?;
    check_enumeration_size(graph, config)?;
    let witness = first_violation(graph, bounds, config);
    Ok(CoverageVerdict {
        covered: witness.is_none(),
        witness,
    })
}

/// Decides fractional (g,f,n)-critical coveredness: the graph must stay
/// covered after deleting any `removals` vertices. Removal sets are scanned
/// in lexicographic order and the first failing one is reported with its
/// violation translated back to original labels.
pub fn is_critical_covered(
    graph: &Graph,
    bounds: &DegreeBounds,
    removals: usize,
    config: &CheckerConfig,
) -> Result<CriticalVerdict> {
    bounds.validate_for(graph)?;
    check_enumeration_size(graph, config)?;
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
        if let Some(witness) = first_violation(&sub, &sub_bounds, config) {
            return Ok(CriticalVerdict {
                critical_covered: false,
                removed: Some(removed),
                witness: Some(witness.lift(&map)),
            });
        }
    }
    Ok(CriticalVerdict {
        critical_covered: true,
        removed: None,
        witness: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn constant(p: usize, g: i64, f: i64) -> DegreeBounds {
        DegreeBounds::constant(p, g, f).unwrap()
    }

    fn star(leaves: usize) -> Graph {
        let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
        Graph::new(leaves + 1, &edges).unwrap()
    }

    fn cycle(p: usize) -> Graph {
        let edges: Vec<_> = (0..p).map(|v| (v, (v + 1) % p)).collect();
        Graph::new(p, &edges).unwrap()
    }

    fn seq() -> CheckerConfig {
        CheckerConfig {
            workers: 1,
            ..CheckerConfig::default()
        }
    }

    #[test]
    fn induced_y_examples() {
        // Star K_{1,3}, g = 1: removing the center isolates every leaf.
        let k13 = star(3);
        let b = constant(4, 1, 1);
        let y = induced_y(&k13, &b, &VertexSet::new([0])).unwrap();
        assert_eq!(y, VertexSet::new([1, 2, 3]));
        // With X empty and minimum degree 2, no vertex is low for g = 1.
        let c4 = cycle(4);
        let y = induced_y(&c4, &constant(4, 1, 1), &VertexSet::empty()).unwrap();
        assert!(y.is_empty());
    }

    #[test]
    fn epsilon_examples() {
        // Empty X never demands anything.
        let c4 = cycle(4);
        let b1 = constant(4, 1, 1);
        assert_eq!(epsilon(&c4, &b1, &VertexSet::empty()).unwrap(), 0);
        // Non-independent X demands 2.
        let r1 = Graph::complete(3).join(&Graph::matching(2));
        let b3 = constant(7, 3, 3);
        assert_eq!(epsilon(&r1, &b3, &VertexSet::new([0, 1, 2])).unwrap(), 2);
        // Independent X with an edge onto a tight Y-vertex demands 1.
        assert_eq!(epsilon(&c4, &b1, &VertexSet::new([0])).unwrap(), 1);
        // Independent X whose outgoing edges all reach slack Y-vertices: 0.
        let k13 = star(3);
        assert_eq!(
            epsilon(&k13, &constant(4, 1, 1), &VertexSet::new([0])).unwrap(),
            0
        );
    }

    #[test]
    fn deficiency_examples() {
        // K3 join 2K2 with g = f = 3 at the surviving clique: 9 + 4 - 12.
        let r1 = Graph::complete(3).join(&Graph::matching(2));
        let (gamma, y) = deficiency(&r1, &constant(7, 3, 3), &VertexSet::new([0, 1, 2])).unwrap();
        assert_eq!(gamma, 1);
        assert_eq!(y, VertexSet::new([3, 4, 5, 6]));
        // Star with unit bounds at the center: 1 + 0 - 3.
        let k13 = star(3);
        let (gamma, y) = deficiency(&k13, &constant(4, 1, 1), &VertexSet::new([0])).unwrap();
        assert_eq!(gamma, -2);
        assert_eq!(y, VertexSet::new([1, 2, 3]));
    }

    #[test]
    fn big_remark_clique_deficiency() {
        // K9 join (6K1 + 2K2), g = f = 3, X = clique: 27 + 4 - 30 = 1.
        let inner = Graph::edgeless(6).disjoint_union(&Graph::matching(2));
        let r2 = Graph::complete(9).join(&inner);
        let (gamma, y) = deficiency(&r2, &constant(19, 3, 3), &VertexSet::range(0, 9)).unwrap();
        assert_eq!(gamma, 1);
        assert_eq!(y, VertexSet::range(9, 19));
    }

    #[test]
    fn covered_examples() {
        // A single edge with g = f = 1 is covered.
        let k2 = Graph::complete(2);
        let verdict = is_covered(&k2, &constant(2, 1, 1), &seq()).unwrap();
        assert!(verdict.covered);
        assert!(verdict.witness.is_none());

        // C4 with g = f = 1 is covered.
        assert!(
            is_covered(&cycle(4), &constant(4, 1, 1), &seq())
                .unwrap()
                .covered
        );

        // The star is not: the center is the least violating subset.
        let verdict = is_covered(&star(3), &constant(4, 1, 1), &seq()).unwrap();
        assert!(!verdict.covered);
        let w = verdict.witness.unwrap();
        assert_eq!(w.x, VertexSet::new([0]));
        assert_eq!(w.y, VertexSet::new([1, 2, 3]));
        assert_eq!(w.gamma, -2);
        assert_eq!(w.epsilon, 0);
        assert_eq!(w.h_min, Some(0));
    }

    #[test]
    fn path_on_three_vertices_fails_at_the_inner_pair() {
        let p3 = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        let verdict = is_covered(&p3, &constant(3, 1, 1), &seq()).unwrap();
        assert!(!verdict.covered);
        let w = verdict.witness.unwrap();
        assert_eq!(w.x, VertexSet::new([0, 1]));
        assert_eq!(w.y, VertexSet::new([2]));
        assert_eq!((w.gamma, w.epsilon), (1, 2));
        assert_eq!(w.h_min, Some(0));
    }

    #[test]
    fn edgeless_graphs_fail_at_the_empty_subset() {
        let verdict = is_covered(&Graph::edgeless(3), &constant(3, 1, 1), &seq()).unwrap();
        assert!(!verdict.covered);
        let w = verdict.witness.unwrap();
        assert_eq!(w.x, VertexSet::empty());
        assert_eq!(w.y, VertexSet::new([0, 1, 2]));
        assert_eq!((w.gamma, w.epsilon), (-3, 0));
        assert_eq!(w.h_min, Some(0));
    }

    #[test]
    fn order_zero_graph_is_trivially_covered() {
        let verdict = is_covered(
            &Graph::edgeless(0),
            &DegreeBounds::constant(0, 1, 1).unwrap(),
            &seq(),
        )
        .unwrap();
        assert!(verdict.covered);
    }

    #[test]
    fn remark_style_join_fails_exactly_at_the_clique() {
        let r1 = Graph::complete(3).join(&Graph::matching(2));
        let verdict = is_covered(&r1, &constant(7, 3, 3), &seq()).unwrap();
        assert!(!verdict.covered);
        let w = verdict.witness.unwrap();
        assert_eq!(w.x, VertexSet::new([0, 1, 2]));
        assert_eq!((w.gamma, w.epsilon), (1, 2));
        assert_eq!(w.h_min, Some(1));
    }

    #[test]
    fn critical_examples() {
        // K4 with unit bounds dies when any vertex is removed: K3 is not
        // covered because fixing one triangle edge starves the third vertex.
        let verdict =
            is_critical_covered(&Graph::complete(4), &constant(4, 1, 1), 1, &seq()).unwrap();
        assert!(!verdict.critical_covered);
        assert_eq!(verdict.removed, Some(VertexSet::new([0])));
        let w = verdict.witness.unwrap();
        assert_eq!(w.x, VertexSet::new([1, 2]));
        assert_eq!((w.gamma, w.epsilon), (1, 2));

        // K5 with g = 1, f = 2 survives any single removal.
        let verdict =
            is_critical_covered(&Graph::complete(5), &constant(5, 1, 2), 1, &seq()).unwrap();
        assert!(verdict.critical_covered);

        // K7 with g = 1, f = 2 survives any single removal as well.
        let verdict =
            is_critical_covered(&Graph::complete(7), &constant(7, 1, 2), 1, &seq()).unwrap();
        assert!(verdict.critical_covered);
    }

    #[test]
    fn zero_removals_reduces_to_plain_coverage() {
        let g = cycle(4);
        let b = constant(4, 1, 1);
        let critical = is_critical_covered(&g, &b, 0, &seq()).unwrap();
        let plain = is_covered(&g, &b, &seq()).unwrap();
        assert_eq!(critical.critical_covered, plain.covered);
    }

    #[test]
    fn removal_count_must_be_below_vertex_count() {
        let g = Graph::complete(3);
        let b = constant(3, 1, 1);
        assert!(matches!(
            is_critical_covered(&g, &b, 3, &seq()),
            Err(Error::Input(_))
        ));
    }

    #[test]
    fn oversized_graphs_are_rejected() {
        let g = Graph::edgeless(27);
        let b = constant(27, 1, 1);
        assert!(matches!(
            is_covered(&g, &b, &seq()),
            Err(Error::Capacity(_))
        ));
        let lifted = CheckerConfig {
            max_vertices: 27,
            workers: 1,
        };
        assert!(!is_covered(&g, &b, &lifted).unwrap().covered);
    }

    #[test]
    fn incremental_enumerator_matches_reference_evaluation() {
        use rand::prelude::*;
        let mut rng = rand_chacha::ChaCha12Rng::seed_from_u64(41);
        for _ in 0..60 {
            let p = rng.random_range(1..=8);
            let mut edges = Vec::new();
            for u in 0..p {
                for v in u + 1..p {
                    if rng.random_bool(0.5) {
                        edges.push((u, v));
                    }
                }
            }
            let graph = Graph::new(p, &edges).unwrap();
            let g: Vec<i64> = (0..p).map(|_| rng.random_range(1..=3)).collect();
            let f: Vec<i64> = g.iter().map(|&gv| rng.random_range(gv..=3)).collect();
            let bounds = DegreeBounds::new(g, f).unwrap();

            let mut enumerator = Enumerator::new(&graph, &bounds);
            for mask in 0u32..(1 << p) {
                let members: Vec<usize> = (0..p).filter(|&v| mask & (1 << v) != 0).collect();
                let x = VertexSet::from_sorted(members.clone());
                members.iter().for_each(|&v| enumerator.push(v));
                let incremental = enumerator.check_current();
                members.iter().rev().for_each(|&v| enumerator.pop(v));

                let reference = evaluate_subset(&graph, &bounds, &x).unwrap();
                match incremental {
                    Some(w) => {
                        assert!(reference.violates());
                        assert_eq!(w, reference.into_witness(&x));
                    }
                    None => assert!(!reference.violates()),
                }
            }
        }
    }

    #[test]
    fn parallel_search_agrees_with_sequential() {
        use rand::prelude::*;
        let mut rng = rand_chacha::ChaCha12Rng::seed_from_u64(99);
        for trial in 0..30 {
            let p = rng.random_range(2..=10);
            let mut edges = Vec::new();
            for u in 0..p {
                for v in u + 1..p {
                    if rng.random_bool(0.35) {
                        edges.push((u, v));
                    }
                }
            }
            let graph = Graph::new(p, &edges).unwrap();
            let bounds = DegreeBounds::constant(p, 1, 2).unwrap();
            let sequential = is_covered(&graph, &bounds, &seq()).unwrap();
            for workers in [2, 8] {
                let cfg = CheckerConfig {
                    max_vertices: DEFAULT_MAX_VERTICES,
                    workers,
                };
                let parallel = is_covered(&graph, &bounds, &cfg).unwrap();
                assert_eq!(sequential, parallel, "trial {trial}, workers {workers}");
            }
        }
    }
}
