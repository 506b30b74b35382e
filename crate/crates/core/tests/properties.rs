use std::collections::BTreeSet;

use proptest::prelude::*;

use fracramsey::chromatic::{chromatic_number, DEFAULT_CHROMATIC_CAP};
use fracramsey::clique::{arrows_clique, exact_number_small, upper_bound_recursive, DEFAULT_CLIQUE_BUDGET};
use fracramsey::cyclicity::{find_minimal_subgraph, is_member, is_minimal_member, verify_colouring, witness_colouring};
use fracramsey::generators::gen_odd_cycle_family;
use fracramsey::graph::{Graph, Vertex};
use fracramsey::graph6::{decode_edge_list, decode_graph, encode_edge_list, encode_graph6};
use fracramsey::oracle::{canonical_code, oracle_density_witness};
use fracramsey::sparsity::{check_forests, forest_decomposition};
use fracramsey::surgery::contract_shortest_cycle;

fn arb_graph(max_v: usize) -> impl Strategy<Value = Graph> {
    (1..=max_v).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut g = Graph::empty(n);
            let mut k = 0;
            for u in 0..n as Vertex {
                for v in u + 1..n as Vertex {
                    if bits[k] {
                        g.add_edge(u, v).unwrap();
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

proptest! {
    #[test]
    fn graph6_round_trip(g in arb_graph(12)) {
        let text = encode_graph6(&g);
        prop_assert_eq!(decode_graph(&text).unwrap(), g.clone());
        let list = encode_edge_list(&g);
        let back = decode_edge_list(&list).unwrap();
        prop_assert_eq!(back.edges().collect::<Vec<_>>(), g.edges().collect::<Vec<_>>());
    }

    #[test]
    fn membership_is_monotone(g in arb_graph(9), r in 2usize..=4, u in 0u32..9, v in 0u32..9) {
        if is_member(&g, r).unwrap() && u != v && g.contains_vertex(u) && g.contains_vertex(v) {
            let mut h = g.clone();
            if !h.has_edge(u, v) {
                h.add_edge(u, v).unwrap();
            }
            prop_assert!(is_member(&h, r).unwrap());
        }
    }

    #[test]
    fn membership_matches_density(g in arb_graph(9), r in 2usize..=4) {
        prop_assert_eq!(is_member(&g, r).unwrap(), oracle_density_witness(&g, r).unwrap().is_some());
    }

    #[test]
    fn certificates_check_out(g in arb_graph(11), r in 2usize..=4) {
        match forest_decomposition(&g, r) {
            Ok(cert) => {
                check_forests(&g, &cert).unwrap();
                let c = witness_colouring(&g, r).unwrap();
                prop_assert!(verify_colouring(&g, &c).unwrap().is_none());
            }
            Err(fracramsey::Error::Member { witness, .. }) => {
                prop_assert!(r * witness.e() + r >= (r + 1) * witness.v());
                let m = find_minimal_subgraph(&g, r).unwrap();
                prop_assert!(is_minimal_member(&m, r).unwrap());
            }
            Err(e) => prop_assert!(false, "{e}"),
        }
    }

    #[test]
    fn contraction_counts(g in arb_graph(10)) {
        if let Ok(c) = contract_shortest_cycle(&g) {
            let cyc: BTreeSet<Vertex> = c.cycle.vertices.iter().copied().collect();
            let merged: usize = g
                .vertices()
                .filter(|x| !cyc.contains(x))
                .map(|x| g.neighbors(x).filter(|y| cyc.contains(y)).count().saturating_sub(1))
                .sum();
            prop_assert_eq!(c.graph.v(), g.v() - cyc.len() + 1);
            prop_assert_eq!(c.graph.e(), g.e() - cyc.len() - merged);
            prop_assert_eq!(c.parallels_merged, merged > 0);
            prop_assert!(!c.loops_removed);
        }
    }

    #[test]
    fn recursion_is_symmetric(a in 2usize..=5, b in 2usize..=5, c in 2usize..=5, d in 2usize..=4) {
        let x = upper_bound_recursive(2, &[a, b, c]).unwrap();
        prop_assert_eq!(x, upper_bound_recursive(2, &[c, a, b]).unwrap());
        prop_assert_eq!(x, upper_bound_recursive(2, &[b, c, a]).unwrap());
        let y = upper_bound_recursive(3, &[a, b, c, d]).unwrap();
        prop_assert_eq!(y, upper_bound_recursive(3, &[d, c, b, a]).unwrap());
    }

    #[test]
    fn canonical_code_ignores_labels(g in arb_graph(8), seed in any::<u64>()) {
        let n = g.v();
        let mut perm: Vec<Vertex> = (0..n as Vertex).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let mut h = Graph::empty(n);
        for e in g.edges() {
            h.add_edge(perm[e.0 as usize], perm[e.1 as usize]).unwrap();
        }
        prop_assert_eq!(canonical_code(&g), canonical_code(&h));
    }
}

#[test]
fn arrowing_is_monotone_on_supergraphs() {
    // K5 arrows K3 for r = 2, so every graph containing it does too
    let mut g = Graph::complete(5);
    g.add_vertex(5);
    for u in [0, 2, 4] {
        g.add_edge(u, 5).unwrap();
    }
    assert!(arrows_clique(&g, 2, 3, DEFAULT_CLIQUE_BUDGET).unwrap().arrows);
    assert!(!arrows_clique(&Graph::cycle(6), 2, 3, DEFAULT_CLIQUE_BUDGET).unwrap().arrows);
}

#[test]
fn chromatic_obstruction() {
    let r3 = exact_number_small(2, 3, DEFAULT_CLIQUE_BUDGET).unwrap().exact.unwrap();
    for g in [Graph::complete(5), Graph::complete(6), gen_odd_cycle_family(1).unwrap()] {
        assert!(arrows_clique(&g, 2, 3, DEFAULT_CLIQUE_BUDGET).unwrap().arrows);
        assert!(chromatic_number(&g, DEFAULT_CHROMATIC_CAP).unwrap() as u64 >= r3);
    }
}

#[test]
fn chromatic_at_least_clique_number() {
    for k in 1..=3 {
        let g = gen_odd_cycle_family(k).unwrap();
        let chi = chromatic_number(&g, DEFAULT_CHROMATIC_CAP).unwrap();
        assert!(chi >= g.clique_number());
        assert!(chi >= 5);
    }
}
