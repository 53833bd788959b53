//! Shared generators for the integration tests.

#![allow(dead_code)]

use letgraph::Graph;
use proptest::prelude::*;

/// Graph on `n` vertices from the low bits of `mask`, one bit per pair.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut g = Graph::empty(n);
    let mut bit = 0;
    for u in 0..n {
        for v in u + 1..n {
            if mask >> bit & 1 == 1 {
                g.set_edge(u, v, true);
            }
            bit += 1;
        }
    }
    g
}

pub fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n, any::<u64>()).prop_map(|(n, m)| graph_from_mask(n, m))
}

/// All vertex subsets of `0..n` as sorted vectors.
pub fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u32..1 << n).map(move |m| (0..n).filter(|&i| m >> i & 1 == 1).collect())
}
