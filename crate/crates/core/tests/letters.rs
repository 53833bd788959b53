mod common;

use common::arb_graph;
use letgraph::graph::is_isomorphic;
use letgraph::letters::{
    cochromatic_number, decode, decode_indices, lettericity, recognize, subword_leq, trivial_representation,
};
use letgraph::{Budget, Decoder, Graph, Word};
use proptest::prelude::*;

fn arb_decoder(k: usize) -> impl Strategy<Value = Decoder> {
    proptest::collection::vec(any::<bool>(), k * k).prop_map(move |bits| {
        let arcs = (0..k * k).filter(|&i| bits[i]).map(|i| (i / k, i % k));
        Decoder::from_indices(k, arcs)
    })
}

fn arb_instance() -> impl Strategy<Value = (Decoder, Vec<usize>)> {
    (1usize..=3).prop_flat_map(|k| (arb_decoder(k), proptest::collection::vec(0..k, 0..=12)))
}

proptest! {
    #[test]
    fn subwords_give_induced_subgraphs((d, w) in arb_instance(), keep in any::<u16>()) {
        let sub: Vec<usize> = (0..w.len()).filter(|&i| keep >> i & 1 == 1).collect();
        let w2: Vec<usize> = sub.iter().map(|&i| w[i]).collect();
        let emb = subword_leq(&w2, &w).unwrap();
        let g = decode_indices(&d, &w);
        let h = decode_indices(&d, &w2);
        prop_assert_eq!(&g.induced_subgraph(&emb).unwrap(), &h);
        prop_assert_eq!(&g.induced_subgraph(&sub).unwrap(), &h);
    }

    #[test]
    fn same_letter_positions_are_homogeneous((d, w) in arb_instance()) {
        let g = decode_indices(&d, &w);
        for l in 0..d.len() {
            let pos: Vec<usize> = (0..w.len()).filter(|&i| w[i] == l).collect();
            prop_assert!(g.is_homogeneous(&pos).unwrap());
        }
    }

    #[test]
    fn recognition_is_hereditary((d, w) in arb_instance(), drop in any::<u16>()) {
        let g = decode_indices(&d, &w);
        let keep: Vec<usize> = (0..g.n()).filter(|&i| drop >> i & 1 == 0).collect();
        let h = g.induced_subgraph(&keep).unwrap();
        let found = recognize(&d, &h, &mut Budget::unlimited()).unwrap();
        prop_assert!(found.is_some());
        prop_assert!(is_isomorphic(&decode(&d, &found.unwrap()).unwrap(), &h));
    }

    #[test]
    fn lettericity_bounds(g in arb_graph(7)) {
        let l = lettericity(&g, &mut Budget::unlimited()).unwrap();
        let (chi, parts) = cochromatic_number(&g, &mut Budget::unlimited()).unwrap();
        prop_assert_eq!(l.cochromatic, chi);
        prop_assert!(l.value >= chi);
        prop_assert!(l.value <= g.n().max(1));
        prop_assert!(l.witness.verify(&g).unwrap());
        prop_assert_eq!(parts.len(), chi);
        for p in &parts {
            prop_assert!(letgraph::graph::is_clique(&g, p) || letgraph::graph::is_independent(&g, p));
        }
    }

    #[test]
    fn trivial_representation_is_valid(g in arb_graph(9)) {
        prop_assert!(trivial_representation(&g).verify(&g).unwrap());
    }
}

#[test]
fn four_letter_example() {
    let d = Decoder::new(
        ["a", "b", "c", "d"],
        &[("a", "a"), ("b", "b"), ("a", "b"), ("a", "c"), ("a", "d"), ("d", "a"), ("b", "d"), ("d", "c")],
    )
    .unwrap();
    let w: Word = "a c d b a d".parse().unwrap();
    let g = decode(&d, &w).unwrap();
    let edges: Vec<(usize, usize)> = g.edges().collect();
    assert_eq!(edges, vec![(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (2, 4), (3, 5), (4, 5)]);
}

#[test]
fn matchings_and_paths() {
    for n in 1..=3 {
        let l = lettericity(&Graph::matching(n), &mut Budget::unlimited()).unwrap();
        assert_eq!(l.value, n, "nK2, n={n}");
    }
    assert_eq!(lettericity(&Graph::path(4), &mut Budget::unlimited()).unwrap().value, 2);
}

#[test]
fn unknown_letters_are_rejected() {
    let d = Decoder::with_letters(["a"]).unwrap();
    assert!(decode(&d, &"a b".parse().unwrap()).is_err());
}
