mod common;

use common::{arb_graph, graph_from_mask};
use letgraph::letters::lettericity;
use letgraph::partition::{
    ap_grid_search, check_partition, gamma, lambda, linked_chain, sigma, Colouring, Level, PartitionCertificate,
};
use letgraph::{Budget, Graph, Permutation};
use proptest::prelude::*;

fn arb_perm(max: usize) -> impl Strategy<Value = Permutation> {
    (1..=max).prop_flat_map(|n| Just((1..=n).collect::<Vec<_>>()).prop_shuffle()).prop_map(|v| Permutation::new(v).unwrap())
}

/// Random graph with a random ordered partition into at most four bags.
fn arb_certified() -> impl Strategy<Value = (Graph, PartitionCertificate)> {
    (1usize..=8, any::<u64>())
        .prop_flat_map(|(n, mask)| {
            (Just(graph_from_mask(n, mask)), proptest::collection::vec(0usize..4, n), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
        })
        .prop_map(|(g, bag_of, order)| {
            let mut bags = vec![Vec::new(); 4];
            for v in order {
                bags[bag_of[v]].push(v);
            }
            bags.retain(|b: &Vec<usize>| !b.is_empty());
            (g, PartitionCertificate::new(bags))
        })
}

fn naive_ap_grid(c: &Colouring, k: usize) -> bool {
    let n = c.size();
    let aps: Vec<Vec<usize>> = (1..=n)
        .flat_map(|s| (1..=n).map(move |d| (s, d)))
        .map(|(s, d)| (0..k).map(|i| s + i * d).collect::<Vec<_>>())
        .filter(|t| t.iter().all(|&x| x <= n))
        .collect();
    aps.iter().any(|xs| {
        aps.iter().any(|ys| {
            let first = &c.cells[xs[0] - 1][ys[0] - 1];
            xs.iter().all(|&x| ys.iter().all(|&y| &c.cells[x - 1][y - 1] == first))
        })
    })
}

proptest! {
    #[test]
    fn levels_are_nested((g, cert) in arb_certified()) {
        let proper = check_partition(&g, &cert, Level::Proper).unwrap();
        let semi = check_partition(&g, &cert, Level::Semi).unwrap();
        let chain = check_partition(&g, &cert, Level::Chain).unwrap();
        prop_assert!(!proper || semi);
        prop_assert!(!semi || chain);
    }

    #[test]
    fn parameters_are_ordered(g in arb_graph(7)) {
        let mut b = Budget::unlimited();
        let (c, s, l) = (gamma(&g, &mut b).unwrap(), sigma(&g, &mut b).unwrap(), lambda(&g, &mut b).unwrap());
        prop_assert!(c.value <= s.value && s.value <= l.value);
        prop_assert!(check_partition(&g, &c.certificate, Level::Chain).unwrap());
        prop_assert!(check_partition(&g, &s.certificate, Level::Semi).unwrap());
        prop_assert!(check_partition(&g, &l.certificate, Level::Proper).unwrap());
        prop_assert_eq!(l.certificate.bags.len(), l.value);
        let lett = lettericity(&g, &mut b).unwrap();
        prop_assert!(l.value <= lett.value.max(1));
    }

    #[test]
    fn letter_classes_are_proper(g in arb_graph(7)) {
        let rep = lettericity(&g, &mut Budget::unlimited()).unwrap().witness;
        let cert = PartitionCertificate::from_letters(&rep, g.n()).unwrap();
        prop_assert!(check_partition(&g, &cert, Level::Proper).unwrap());
    }

    #[test]
    fn linked_chains_have_three_chain_parts(pi in arb_perm(7)) {
        let lcg = linked_chain(&pi);
        prop_assert_eq!(lcg.graph.n(), 3 * pi.len());
        prop_assert!(check_partition(&lcg.graph, &lcg.canonical_certificate(), Level::Chain).unwrap());
        prop_assert!(gamma(&lcg.graph, &mut Budget::unlimited()).unwrap().value <= 3);
    }

    #[test]
    fn pattern_containment_gives_induced_linked_chains(pi in arb_perm(6), sigma in arb_perm(3)) {
        if pi.contains(&sigma) {
            let host = linked_chain(&pi).graph;
            prop_assert!(host.contains_induced(&linked_chain(&sigma).graph).is_some());
        }
    }

    #[test]
    fn ap_grid_matches_naive(n in 1usize..8, k in 1usize..4, colours in 1u8..4, seed in any::<u64>()) {
        let c = Colouring::from_fn(n, |i, j| {
            let h = seed.wrapping_mul(31 * i as u64 + 7).wrapping_add(j as u64 * 0x9e37_79b9) >> 13;
            (h % colours as u64).to_string()
        });
        let found = ap_grid_search(&c, k);
        prop_assert_eq!(found.is_some(), naive_ap_grid(&c, k));
        if let Some(w) = found {
            for x in w.x.terms() {
                for y in w.y.terms() {
                    prop_assert_eq!(&c.cells[x - 1][y - 1], &w.colour);
                }
            }
        }
    }
}

#[test]
fn certificate_text_round_trip() {
    let lcg = linked_chain(&"2413".parse().unwrap());
    let cert = lcg.canonical_certificate();
    assert_eq!(PartitionCertificate::parse(&cert.to_text(), lcg.graph.n()).unwrap(), cert);
}

#[test]
fn edgeless_and_complete_graphs_need_one_bag() {
    let mut b = Budget::unlimited();
    for g in [Graph::empty(5), Graph::complete(5)] {
        assert_eq!(lambda(&g, &mut b).unwrap().value, 1);
    }
}
