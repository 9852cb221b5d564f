//! Property-based invariants tying the independent implementations together.

use fraccover::{
    covered_by_search, crosscheck_coverage, emit_graph, evaluate_subset, has_fractional_factor,
    is_covered, is_critical_covered, parse_graph, CheckerConfig, DegreeBounds, Frac, Graph,
    OracleConfig, VertexSet,
};
use num_rational::Ratio;
use proptest::prelude::*;

// ----------------------------------------------------------------------------
// Strategies
// ----------------------------------------------------------------------------

/// A graph on 1..=max_p vertices with each possible edge flipped on
/// independently (mask bits in the canonical pair order).
fn graph_strategy(max_p: usize) -> impl Strategy<Value = Graph> {
    (1..=max_p).prop_flat_map(|p| {
        prop::collection::vec(any::<bool>(), p * (p - 1) / 2).prop_map(move |mask| {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..p {
                for v in u + 1..p {
                    if mask[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::new(p, &edges).unwrap()
        })
    })
}

/// Per-vertex windows with 1 <= g <= f <= 4.
fn bounds_for(p: usize) -> impl Strategy<Value = DegreeBounds> {
    prop::collection::vec((1i64..=4, 0i64..=3), p).prop_map(|pairs| {
        let g: Vec<i64> = pairs.iter().map(|&(g, _)| g).collect();
        let f: Vec<i64> = pairs.iter().map(|&(g, extra)| (g + extra).min(4)).collect();
        DegreeBounds::new(g, f).unwrap()
    })
}

fn graph_with_bounds(max_p: usize) -> impl Strategy<Value = (Graph, DegreeBounds)> {
    graph_strategy(max_p).prop_flat_map(|graph| {
        let p = graph.vertex_count();
        (Just(graph), bounds_for(p))
    })
}

/// A subset of 0..p as a membership mask.
fn subset_of(p: usize) -> impl Strategy<Value = VertexSet> {
    prop::collection::vec(any::<bool>(), p)
        .prop_map(|mask| (0..mask.len()).filter(|&v| mask[v]).collect())
}

/// All subsets of 0..p in lexicographic order of their sorted member lists
/// (prefix extension): {}, {0}, {0,1}, ..., {p-1}. The reference order for
/// witness determinism.
fn lex_subsets(p: usize) -> Vec<VertexSet> {
    fn rec(p: usize, prefix: &mut Vec<usize>, start: usize, out: &mut Vec<VertexSet>) {
        out.push(VertexSet::new(prefix.iter().copied()));
        for v in start..p {
            prefix.push(v);
            rec(p, prefix, v + 1, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(p, &mut Vec::new(), 0, &mut out);
    out
}

fn seq() -> CheckerConfig {
    CheckerConfig {
        workers: 1,
        ..CheckerConfig::default()
    }
}

// ----------------------------------------------------------------------------
// Graph-structure invariants
// ----------------------------------------------------------------------------

proptest! {
    #[test]
    fn handshake_lemma(graph in graph_strategy(9)) {
        let degree_sum: usize = (0..graph.vertex_count())
            .map(|v| graph.degree(v).unwrap())
            .sum();
        prop_assert_eq!(degree_sum, 2 * graph.edge_count());
    }

    #[test]
    fn independence_laws_for_join_and_union(
        g in graph_strategy(5),
        h in graph_strategy(5),
    ) {
        let alpha_g = g.independence_number().unwrap();
        let alpha_h = h.independence_number().unwrap();
        prop_assert_eq!(
            g.join(&h).independence_number().unwrap(),
            alpha_g.max(alpha_h)
        );
        prop_assert_eq!(
            g.disjoint_union(&h).independence_number().unwrap(),
            alpha_g + alpha_h
        );
    }

    #[test]
    fn graph_files_round_trip(graph in graph_strategy(9)) {
        prop_assert_eq!(parse_graph(&emit_graph(&graph)).unwrap(), graph);
    }

    #[test]
    fn deleted_vertices_preserve_adjacency_under_lifting(
        graph in graph_strategy(8),
        removed in subset_of(7),
    ) {
        let removed: VertexSet = removed.iter()
            .filter(|&v| v < graph.vertex_count())
            .collect();
        let (sub, map) = graph.delete_vertices(&removed).unwrap();
        for u in 0..sub.vertex_count() {
            for v in 0..sub.vertex_count() {
                prop_assert_eq!(
                    sub.has_edge(u, v),
                    graph.has_edge(map.parent_of(u), map.parent_of(v))
                );
            }
        }
    }
}

// ----------------------------------------------------------------------------
// Subset-evaluation invariants
// ----------------------------------------------------------------------------

proptest! {
    #[test]
    fn epsilon_never_exceeds_two_or_the_subset_size(
        (graph, bounds) in graph_with_bounds(8),
        raw in subset_of(8),
    ) {
        let x: VertexSet = raw.iter().filter(|&v| v < graph.vertex_count()).collect();
        let eval = evaluate_subset(&graph, &bounds, &x).unwrap();
        prop_assert!(eval.epsilon <= 2);
        prop_assert!(eval.epsilon as usize <= x.len());
        prop_assert!(eval.epsilon >= 0);
        // h_min is present exactly when Y is non-empty.
        prop_assert_eq!(eval.h_min.is_some(), !eval.y.is_empty());
    }

    #[test]
    fn induced_y_grows_with_g(
        (graph, bounds) in graph_with_bounds(8),
        raw in subset_of(8),
    ) {
        let p = graph.vertex_count();
        let x: VertexSet = raw.iter().filter(|&v| v < p).collect();
        let raised = DegreeBounds::new(
            bounds.g_values().iter().map(|&g| g + 1).collect(),
            bounds.f_values().iter().map(|&f| f + 1).collect(),
        ).unwrap();
        let small = evaluate_subset(&graph, &bounds, &x).unwrap();
        let large = evaluate_subset(&graph, &raised, &x).unwrap();
        for v in small.y.iter() {
            prop_assert!(large.y.contains(v));
        }
    }

    #[test]
    fn gamma_is_additive_in_f_over_x(
        (graph, bounds) in graph_with_bounds(8),
        raw in subset_of(8),
        bump in 1i64..=3,
    ) {
        let p = graph.vertex_count();
        let x: VertexSet = raw.iter().filter(|&v| v < p).collect();
        let bumped = DegreeBounds::new(
            bounds.g_values().to_vec(),
            bounds.f_values().iter().enumerate()
                .map(|(v, &f)| if x.contains(v) { f + bump } else { f })
                .collect(),
        ).unwrap();
        let base = evaluate_subset(&graph, &bounds, &x).unwrap();
        let more = evaluate_subset(&graph, &bumped, &x).unwrap();
        prop_assert_eq!(more.gamma, base.gamma + bump * x.len() as i64);
        // Y depends only on g, so it is unchanged.
        prop_assert_eq!(more.y, base.y);
    }
}

// ----------------------------------------------------------------------------
// Witness determinism: the checker returns the lexicographically least
// violating subset, for any worker count.
// ----------------------------------------------------------------------------

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]
    #[test]
    fn witness_is_the_lex_least_violation(
        (graph, bounds) in graph_with_bounds(8),
    ) {
        let expected = lex_subsets(graph.vertex_count())
            .into_iter()
            .find(|x| evaluate_subset(&graph, &bounds, x).unwrap().violates());
        for workers in [1, 2, 8] {
            let config = CheckerConfig { workers, ..CheckerConfig::default() };
            let verdict = is_covered(&graph, &bounds, &config).unwrap();
            prop_assert_eq!(verdict.covered, expected.is_none());
            match (&verdict.witness, &expected) {
                (None, None) => {}
                (Some(w), Some(x)) => {
                    prop_assert_eq!(&w.x, x);
                    // The witness fields match a from-scratch evaluation.
                    let eval = evaluate_subset(&graph, &bounds, x).unwrap();
                    prop_assert!(eval.violates());
                    prop_assert_eq!(w.clone(), eval.into_witness(x));
                }
                _ => prop_assert!(false, "witness presence mismatch"),
            }
        }
    }

    #[test]
    fn criticality_agrees_with_removal_by_removal_coverage(
        (graph, bounds) in graph_with_bounds(6),
        removals in 0usize..=2,
    ) {
        prop_assume!(removals < graph.vertex_count());
        let verdict = is_critical_covered(&graph, &bounds, removals, &seq()).unwrap();

        // Brute force: try every removal set in lexicographic order.
        let mut first_failure = None;
        for x in lex_subsets(graph.vertex_count()) {
            if x.len() != removals {
                continue;
            }
            let (sub, map) = graph.delete_vertices(&x).unwrap();
            let sub_verdict = is_covered(&sub, &bounds.restrict(&map), &seq()).unwrap();
            if !sub_verdict.covered {
                first_failure = Some((x, sub_verdict.witness.unwrap().lift(&map)));
                break;
            }
        }
        match (first_failure, verdict.critical_covered) {
            (None, true) => {
                prop_assert_eq!(verdict.removed, None);
                prop_assert_eq!(verdict.witness, None);
            }
            (Some((removed, witness)), false) => {
                prop_assert_eq!(verdict.removed, Some(removed));
                prop_assert_eq!(verdict.witness, Some(witness));
            }
            (found, reported) => prop_assert!(
                false,
                "criticality mismatch: brute force {found:?}, reported {reported}"
            ),
        }
    }
}

// ----------------------------------------------------------------------------
// Checker vs oracle
// ----------------------------------------------------------------------------

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]
    #[test]
    fn structural_and_search_verdicts_agree(
        (graph, bounds) in graph_with_bounds(6),
    ) {
        prop_assume!(graph.edge_count() <= 12);
        // Errors (including disagreements) fail the property.
        crosscheck_coverage(&graph, &bounds, &seq(), &OracleConfig::default()).unwrap();
    }

    #[test]
    fn oracle_grid_refinement_is_verdict_stable(
        (graph, bounds) in graph_with_bounds(5),
    ) {
        let coarse = covered_by_search(&graph, &bounds, &OracleConfig::default()).unwrap();
        let fine = covered_by_search(
            &graph,
            &bounds,
            &OracleConfig { denominator: 4, ..OracleConfig::default() },
        ).unwrap();
        prop_assert_eq!(coarse.covered, fine.covered);
        prop_assert_eq!(coarse.failing_edge, fine.failing_edge);
    }

    #[test]
    fn oracle_certificates_validate(
        (graph, bounds) in graph_with_bounds(5),
        pick in any::<prop::sample::Index>(),
    ) {
        prop_assume!(graph.edge_count() > 0);
        let forced = pick.index(graph.edge_count());
        let config = OracleConfig::default();
        if let Some(cert) = has_fractional_factor(&graph, &bounds, Some(forced), &config).unwrap() {
            cert.validate(&graph, &bounds, Some(forced)).unwrap();
        }
    }
}

// ----------------------------------------------------------------------------
// Exact arithmetic
// ----------------------------------------------------------------------------

proptest! {
    #[test]
    fn frac_matches_an_independent_rational_library(
        a in -1000i64..=1000,
        b in prop::sample::select(vec![-60i64, -7, -2, -1, 1, 2, 3, 12, 1000]),
        c in -1000i64..=1000,
        d in prop::sample::select(vec![-60i64, -7, -2, -1, 1, 2, 3, 12, 1000]),
    ) {
        let ours = (Frac::new(a, b), Frac::new(c, d));
        let reference = (
            Ratio::<i128>::new(a as i128, b as i128),
            Ratio::<i128>::new(c as i128, d as i128),
        );
        // Same canonical form (reduced, positive denominator)...
        prop_assert_eq!(ours.0.num() as i128, *reference.0.numer());
        prop_assert_eq!(ours.0.den() as i128, *reference.0.denom());
        // ...and the same ordering.
        prop_assert_eq!(ours.0.cmp(&ours.1), reference.0.cmp(&reference.1));
    }

    #[test]
    fn frac_serialization_round_trips(
        num in -500i64..=500,
        den in 1i64..=40,
    ) {
        let frac = Frac::new(num, den);
        let json = serde_json::to_string(&frac).unwrap();
        let back: Frac = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(frac, back);
    }
}
