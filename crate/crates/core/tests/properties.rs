mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;
use reconf::colouring::{enumerate_colourings, frozen_vertices, kempe_swap};
use reconf::constructions::{mycielskian, verify_same_reconfig};
use reconf::reconfig::{build, build_kempe, build_single, build_token, strip};
use reconf::reconstruct::{reconstruct_kempe, reconstruct_single, reconstruct_tar1, reconstruct_tj2, Tj2Outcome};
use reconf::harness::{canonical_code, Algorithm};
use reconf::{chromatic_number, is_isomorphic, Colouring, Config, Graph, ReconfigGraph, ReconfigKind, TokenRule};

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let slots = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), slots).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut i = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[i] {
                        edges.push((u, v));
                    }
                    i += 1;
                }
            }
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

fn cfg() -> Config {
    Config::default()
}

proptest! {
    #![proptest_config(ProptestConfig {
        cases: 64,
        failure_persistence: None,
        ..ProptestConfig::default()
    })]

    #[test]
    fn kempe_swap_is_an_involution(g in graph(6), pick in any::<prop::sample::Index>(), v in 0usize..6, j in 1usize..=4) {
        let cs = enumerate_colourings(&g, 4, &cfg()).unwrap();
        prop_assume!(!cs.is_empty() && v < g.n());
        let c = &cs[pick.index(cs.len())];
        let d = kempe_swap(&g, c, v, j).unwrap();
        prop_assert!(d.is_proper(&g));
        let back = kempe_swap(&g, &d, v, c.colour(v)).unwrap();
        prop_assert_eq!(&back, c);
    }

    #[test]
    fn single_moves_are_kempe_moves(g in graph(5), k in 1usize..=4) {
        let s = build_single(&g, k, &cfg()).unwrap();
        let t = build_kempe(&g, k, &cfg()).unwrap();
        prop_assert_eq!(&s.labels, &t.labels);
        let kempe: BTreeSet<_> = t.graph.edges().collect();
        prop_assert!(s.graph.edges().all(|e| kempe.contains(&e)));
    }

    #[test]
    fn colouring_count_is_the_chromatic_polynomial(g in graph(6), k in 0usize..=4) {
        let edges: BTreeSet<(usize, usize)> = g.edges().collect();
        let count = enumerate_colourings(&g, k, &cfg()).unwrap().len() as i128;
        prop_assert_eq!(count, common::chromatic_polynomial(g.n(), &edges, k as i128));
    }

    #[test]
    fn chromatic_number_matches_brute_force(g in graph(6)) {
        prop_assert_eq!(chromatic_number(&g, &cfg()).unwrap(), common::brute_chromatic(&g));
    }

    #[test]
    fn no_frozen_vertex_above_the_degree_bound(g in graph(6)) {
        let k = (g.n().min(2 * g.max_degree()) + 1).max(2);
        prop_assert!(frozen_vertices(&g, k, &cfg()).unwrap().is_empty());
    }

    #[test]
    fn strip_is_an_isomorphic_relabelling(g in graph(4), seed in any::<u64>()) {
        let r = build_single(&g, 3, &cfg()).unwrap();
        let s = strip(&r, seed);
        prop_assert_eq!(&s, &strip(&r, seed));
        prop_assert!(is_isomorphic(&s, &r.graph).is_some());
    }

    #[test]
    fn json_round_trips(g in graph(4), kind_index in 0usize..5, k in 0usize..=3, seed in any::<u64>()) {
        let kind = ReconfigKind::ALL[kind_index];
        let r = build(&g, kind, k, &cfg()).unwrap();
        prop_assert_eq!(&ReconfigGraph::from_json(&r.to_json()).unwrap(), &r);
        let s = r.stripped(seed);
        prop_assert_eq!(&ReconfigGraph::from_json(&s.to_json()).unwrap(), &s);
    }

    #[test]
    fn sequential_and_parallel_builds_agree(g in graph(6), kind_index in 0usize..5, k in 1usize..=3) {
        let kind = ReconfigKind::ALL[kind_index];
        let a = build(&g, kind, k, &cfg()).unwrap();
        let b = build(&g, kind, k, &Config::sequential()).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn isomorphism_agrees_with_brute_force(g in graph(6), h in graph(6)) {
        prop_assert_eq!(is_isomorphic(&g, &h).is_some(), common::brute_isomorphic(&g, &h));
        if let Some(w) = is_isomorphic(&g, &h) {
            prop_assert!(w.verify(&g, &h));
        }
    }

    #[test]
    fn canonical_code_is_a_class_invariant(g in graph(6), seed in any::<u64>()) {
        let perm = reconf::reconfig::strip_permutation(g.n(), seed);
        prop_assert_eq!(canonical_code(&g), canonical_code(&g.permute(&perm)));
    }

    #[test]
    fn single_vertex_reconstruction_above_chi(g in graph(6), seed in any::<u64>()) {
        let chi = chromatic_number(&g, &cfg()).unwrap();
        let r = strip(&build_single(&g, chi + 1, &cfg()).unwrap(), seed);
        let h = reconstruct_single(&r, &cfg()).unwrap();
        prop_assert!(is_isomorphic(&h, &g).is_some());
    }

    #[test]
    fn kempe_reconstruction_above_chi_plus_one(g in graph(5), seed in any::<u64>()) {
        let chi = chromatic_number(&g, &cfg()).unwrap();
        let r = strip(&build_kempe(&g, chi + 2, &cfg()).unwrap(), seed);
        let h = reconstruct_kempe(&r, &cfg()).unwrap();
        prop_assert!(is_isomorphic(&h, &g).is_some());
    }

    #[test]
    fn tar1_reconstruction(g in graph(7), seed in any::<u64>()) {
        prop_assume!(g.n() > 0);
        let r = strip(&build_token(&g, 1, TokenRule::AdditionRemoval, &cfg()).unwrap(), seed);
        let h = reconstruct_tar1(&r, &cfg()).unwrap();
        prop_assert!(is_isomorphic(&h, &g).is_some());
    }

    #[test]
    fn tj2_reconstruction(g in graph(7), seed in any::<u64>()) {
        let chi = chromatic_number(&g, &cfg()).unwrap();
        prop_assume!(Algorithm::Jumping2.guaranteed(&g, chi, 2));
        let r = strip(&build_token(&g, 2, TokenRule::Jumping, &cfg()).unwrap(), seed);
        match reconstruct_tj2(&r, &cfg()).unwrap() {
            Tj2Outcome::UniqueGraph(h) => prop_assert!(is_isomorphic(&h, &g).is_some()),
            other => prop_assert!(false, "{:?}", other),
        }
    }

    #[test]
    fn tj2_graph_is_line_graph_of_complement(g in graph(6)) {
        let r = build_token(&g, 2, TokenRule::Jumping, &cfg()).unwrap();
        prop_assert!(is_isomorphic(&r.graph, &g.complement().line_graph().0).is_some());
    }

    #[test]
    fn mycielskian_adds_one_colour(g in graph(4)) {
        prop_assume!(g.m() > 0);
        let chi = chromatic_number(&g, &cfg()).unwrap();
        let m = mycielskian(&g);
        prop_assert_eq!(m.n(), 2 * g.n() + 1);
        prop_assert_eq!(chromatic_number(&m, &cfg()).unwrap(), chi + 1);
    }

    #[test]
    fn same_reconfig_is_reflexive(g in graph(4), k in 1usize..=3) {
        let report = verify_same_reconfig(&g, &g, ReconfigKind::SingleVertex, k, &cfg()).unwrap();
        prop_assert!(report.verdict.same());
    }
}

#[test]
fn colourings_are_listed_lexicographically() {
    let cs = enumerate_colourings(&Graph::path(3), 3, &cfg()).unwrap();
    let raw: Vec<Vec<u8>> = cs.iter().map(|c| c.colours().to_vec()).collect();
    let mut sorted = raw.clone();
    sorted.sort();
    assert_eq!(raw, sorted);
    assert_eq!(raw.len(), 12);
    assert!(Colouring::new(3, vec![1, 4, 1]).is_err());
}
