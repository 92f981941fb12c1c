//! Property tests on random trivalent graphs.

use graphcone::cone::in_cone;
use graphcone::graph::{
    caterpillar_normal_form, caterpillar_with_loops, cut_edge, glue_leaves, inverse_step,
    is_isomorphic, mutate, random_trivalent_graph,
};
use graphcone::hilbert::{hilbert_brute, hilbert_compose};
use graphcone::semigroup::{points_of_degree, Decomposer};
use graphcone::{ConeElement, MutationStep, TrivalentGraph, Variant};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn graph(seed: u64, inner: usize, leaves: usize) -> TrivalentGraph {
    let leaves = leaves + (3 * inner + leaves) % 2;
    random_trivalent_graph(&mut ChaCha8Rng::seed_from_u64(seed), inner, leaves)
}

fn arb_graph(max_inner: usize, max_leaves: usize) -> impl Strategy<Value = TrivalentGraph> {
    (any::<u64>(), 1..=max_inner, 0..=max_leaves).prop_map(|(s, i, l)| graph(s, i, l))
}

fn connected(max_inner: usize, max_leaves: usize) -> impl Strategy<Value = TrivalentGraph> {
    arb_graph(max_inner, max_leaves).prop_filter("connected", |g| g.is_connected())
}

fn point(g: &TrivalentGraph, m: u32, pick: usize) -> ConeElement {
    let pts = points_of_degree(g, m).unwrap();
    pts[pick % pts.len()].clone()
}

proptest! {
    #![proptest_config(ProptestConfig {
        cases: 64,
        failure_persistence: None,
        ..ProptestConfig::default()
    })]

    #[test]
    fn euler_characteristic(g in arb_graph(8, 6)) {
        let i = g.invariants();
        prop_assert_eq!(i.betti + i.num_vertices, i.num_edges + i.num_components);
        prop_assert_eq!(i.num_leaves, g.leaves().count());
        prop_assert_eq!(2 * i.num_edges, 3 * (i.num_vertices - i.num_leaves) + i.num_leaves);
    }

    #[test]
    fn mutation_keeps_invariants_and_inverts(g in arb_graph(6, 4), e in any::<prop::sample::Index>(), two in any::<bool>()) {
        let edge = g.edge_id(e.index(g.num_edges())).clone();
        let step = MutationStep::new(edge, if two { Variant::Two } else { Variant::One });
        if let Ok(h) = mutate(&g, &step) {
            let (a, b) = (g.invariants(), h.invariants());
            prop_assert_eq!((a.num_leaves, a.betti, a.num_components), (b.num_leaves, b.betti, b.num_components));
            let back = inverse_step(&g, &step).unwrap();
            prop_assert!(is_isomorphic(&mutate(&h, &back).unwrap(), &g).unwrap().is_some());
        }
    }

    #[test]
    fn normal_form_is_the_caterpillar(g in connected(8, 4)) {
        let i = g.invariants();
        let nf = caterpillar_normal_form(&g).unwrap();
        prop_assert!(is_isomorphic(&nf.graph, &caterpillar_with_loops(i.num_leaves, i.betti)).unwrap().is_some());
        let again = caterpillar_normal_form(&nf.graph).unwrap();
        prop_assert!(again.steps.is_empty());
    }

    #[test]
    fn cut_then_glue_is_isomorphic(g in arb_graph(5, 3), e in any::<prop::sample::Index>()) {
        let internal: Vec<usize> = (0..g.num_edges()).filter(|&i| !g.is_petiole(i)).collect();
        prop_assume!(!internal.is_empty());
        let id = g.edge_id(internal[e.index(internal.len())]).clone();
        let cut = cut_edge(&g, id.as_str()).unwrap();
        prop_assert_eq!(cut.graph.leaves().count(), g.leaves().count() + 2);
        let glued = glue_leaves(&cut.graph, cut.leaves[0].as_str(), cut.leaves[1].as_str()).unwrap();
        prop_assert!(is_isomorphic(&glued.graph, &g).unwrap().is_some());
    }

    #[test]
    fn cone_is_closed_under_addition(g in arb_graph(4, 3), m1 in 0u32..3, m2 in 0u32..3, p1: usize, p2: usize) {
        let w = point(&g, m1, p1).plus(&point(&g, m2, p2));
        prop_assert!(in_cone(&g, &w));
    }

    #[test]
    fn element_text_round_trips(g in arb_graph(4, 3), m in 0u32..4, pick: usize) {
        let w = point(&g, m, pick);
        prop_assert_eq!(ConeElement::parse(&g, &w.to_text(&g)).unwrap(), w);
    }

    #[test]
    fn decomposition_resums_into_generators(
        g in arb_graph(5, 4).prop_filter("betti at most one", |g| g.betti() <= 1),
        m in 0u32..5,
        pick: usize,
    ) {
        let w = point(&g, m, pick);
        let d = Decomposer::new(&g).unwrap().decompose(&w).unwrap();
        prop_assert_eq!(ConeElement::sum(&g, &d.parts), w);
        let cap = if g.betti() == 0 { 1 } else { 2 };
        for p in &d.parts {
            prop_assert!(p.degree <= cap && in_cone(&g, p));
        }
    }

    #[test]
    fn compose_matches_brute(g in connected(4, 3), m in 1u32..4) {
        let leaves: Vec<String> = g.leaves().map(|v| g.vertex_id(v).to_string()).collect();
        let leaves: Vec<&str> = leaves.iter().map(String::as_str).collect();
        prop_assert_eq!(hilbert_compose(&g, m, &leaves).unwrap(), hilbert_brute(&g, m, &leaves).unwrap());
    }

    #[test]
    fn marginalizing_drops_the_grading(g in connected(4, 3), m in 1u32..4) {
        let leaves: Vec<String> = g.leaves().map(|v| g.vertex_id(v).to_string()).collect();
        prop_assume!(!leaves.is_empty());
        let all: Vec<&str> = leaves.iter().map(String::as_str).collect();
        let full = hilbert_brute(&g, m, &all).unwrap();
        let fewer = hilbert_brute(&g, m, &all[1..]).unwrap();
        prop_assert_eq!(full.marginalize(all[0]).unwrap(), fewer);
    }

    #[test]
    fn hilbert_function_is_monotone(g in connected(5, 3)) {
        // Adding the empty network maps degree m injectively into m + 1.
        let t = hilbert_brute(&g, 4, &[]).unwrap().totals();
        prop_assert!(t.windows(2).all(|w| w[0] <= w[1]));
    }
}
