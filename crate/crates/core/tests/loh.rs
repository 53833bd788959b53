use std::collections::BTreeMap;

use letgraph::circuit::{generate_ckl, random_circuit};
use letgraph::loh::{from_chain_circuit, random_loh};
use letgraph::{Budget, Loh};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

fn loh(seed: u64) -> Loh {
    random_loh(&mut StdRng::seed_from_u64(seed), 8, 4)
}

fn names(h: &Loh, arcs: impl Iterator<Item = (usize, usize)>) -> Vec<(String, String)> {
    arcs.map(|(a, b)| (h.elements()[a].clone(), h.elements()[b].clone())).collect()
}

/// Smallest number of splits found by trying every split sequence up to
/// `depth`, or `None` if none of them reaches consistency.
fn shallow_inconsistency(h: &Loh, depth: usize) -> Option<usize> {
    if h.is_globally_consistent().is_ok() {
        return Some(0);
    }
    if depth == 0 {
        return None;
    }
    (0..h.elements().len())
        .filter_map(|x| shallow_inconsistency(&h.split(x).unwrap(), depth - 1).map(|d| d + 1))
        .min()
}

proptest! {
    #[test]
    fn splitting_only_removes_conflicts(seed in any::<u64>(), pick in any::<usize>()) {
        let h = loh(seed);
        let x = pick % h.elements().len();
        let s = h.split(x).unwrap();
        let before = names(&h, h.conflict().arcs());
        for arc in names(&s, s.conflict().arcs()) {
            prop_assert!(before.contains(&arc));
        }
        prop_assert!(!s.elements().contains(&h.elements()[x]));
    }

    #[test]
    fn consistency_agrees_with_zero_inconsistency(seed in any::<u64>()) {
        let h = loh(seed);
        let (value, set) = h.global_inconsistency(&mut Budget::unlimited()).unwrap();
        prop_assert_eq!(value == 0, h.is_globally_consistent().is_ok());
        prop_assert_eq!(set.len(), value);
        let mut after = h.clone();
        for name in set.iter().map(|&x| h.elements()[x].clone()) {
            let idx = after.element_index(&name).unwrap();
            after = after.split(idx).unwrap();
        }
        prop_assert!(after.is_globally_consistent().is_ok());
    }

    #[test]
    fn consistent_orders_restrict_to_every_edge(seed in any::<u64>()) {
        let h = loh(seed);
        if let Ok(order) = h.is_globally_consistent() {
            let rank: BTreeMap<usize, usize> = order.iter().enumerate().map(|(i, &x)| (x, i)).collect();
            for e in h.edges() {
                prop_assert!(e.members.windows(2).all(|w| rank[&w[0]] < rank[&w[1]]));
            }
        }
    }

    #[test]
    fn text_round_trip(seed in any::<u64>()) {
        let h = loh(seed);
        prop_assert_eq!(h.to_text().parse::<Loh>().unwrap(), h);
    }
}

#[test]
fn circuits_without_short_cycles_are_consistent() {
    let mut rng = StdRng::seed_from_u64(7);
    let mut checked = 0;
    for i in 0..300 {
        let cc = random_circuit(&mut rng, 3 + i % 3, 12, false);
        let mut b = Budget::unlimited();
        if cc.find_cycle_subgraph(1, &mut b).unwrap().is_some()
            || cc.complement().find_cycle_subgraph(1, &mut b).unwrap().is_some()
        {
            continue;
        }
        let h = from_chain_circuit(&cc).unwrap();
        assert_eq!(h.global_inconsistency(&mut b).unwrap().0, 0);
        checked += 1;
    }
    assert!(checked > 0);
}

#[test]
fn circuits_without_double_cycles_have_small_inconsistency() {
    let mut rng = StdRng::seed_from_u64(8);
    let mut worst = 0;
    for i in 0..200 {
        let cc = random_circuit(&mut rng, 3 + i % 2, 10, false);
        let mut b = Budget::unlimited();
        if cc.find_cycle_subgraph(2, &mut b).unwrap().is_some() {
            continue;
        }
        let h = from_chain_circuit(&cc).unwrap();
        worst = worst.max(h.global_inconsistency(&mut b).unwrap().0);
    }
    println!("largest inconsistency without a doubled cycle: {worst}");
    assert!(worst <= 10);
}

#[test]
fn doubled_four_cycle_matches_split_sequences() {
    let h = from_chain_circuit(&generate_ckl(4, 2).unwrap()).unwrap();
    let (value, _) = h.global_inconsistency(&mut Budget::unlimited()).unwrap();
    assert_eq!(shallow_inconsistency(&h, 2), Some(value));
}

#[test]
fn single_cycles_need_one_split() {
    for k in 3..=6 {
        let h = from_chain_circuit(&generate_ckl(k, 1).unwrap()).unwrap();
        assert_eq!(h.global_inconsistency(&mut Budget::unlimited()).unwrap().0, 1);
    }
}
