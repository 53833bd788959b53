//! Directed graphs used as conflict digraphs.

use std::cmp::Reverse;
use std::collections::{BTreeSet, BinaryHeap};

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Digraph {
    n: usize,
    succ: Vec<BTreeSet<usize>>,
}

impl Digraph {
    pub fn new(n: usize) -> Self {
        Digraph {
            n,
            succ: vec![BTreeSet::new(); n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Adds `u -> v`; returns false if it was already present.
    pub fn add_arc(&mut self, u: usize, v: usize) -> bool {
        self.succ[u].insert(v)
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.succ[u].contains(&v)
    }

    pub fn successors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.succ[u].iter().copied()
    }

    /// Arcs in lexicographic order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.succ
            .iter()
            .enumerate()
            .flat_map(|(u, s)| s.iter().map(move |&v| (u, v)))
    }

    pub fn arc_count(&self) -> usize {
        self.succ.iter().map(|s| s.len()).sum()
    }

    /// Topological order, always taking the smallest available vertex.
    /// On failure returns a directed cycle `c` with arcs `c[i] -> c[i+1]` and
    /// `c[last] -> c[0]`.
    pub fn topological_sort(&self) -> Result<Vec<usize>, Vec<usize>> {
        let mut indeg = vec![0usize; self.n];
        for (_, v) in self.arcs() {
            indeg[v] += 1;
        }
        let mut heap: BinaryHeap<Reverse<usize>> =
            (0..self.n).filter(|&v| indeg[v] == 0).map(Reverse).collect();
        let mut order = Vec::with_capacity(self.n);
        while let Some(Reverse(u)) = heap.pop() {
            order.push(u);
            for &v in &self.succ[u] {
                indeg[v] -= 1;
                if indeg[v] == 0 {
                    heap.push(Reverse(v));
                }
            }
        }
        if order.len() == self.n {
            return Ok(order);
        }
        Err(self.cycle_among(|v| indeg[v] > 0))
    }

    pub fn is_acyclic(&self) -> bool {
        self.topological_sort().is_ok()
    }

    /// Walks backwards inside a set where every vertex has an in-arc from the
    /// set, which must close a cycle.
    fn cycle_among(&self, inside: impl Fn(usize) -> bool) -> Vec<usize> {
        let mut preds: Vec<Vec<usize>> = vec![Vec::new(); self.n];
        for (u, v) in self.arcs() {
            if inside(u) && inside(v) {
                preds[v].push(u);
            }
        }
        let start = (0..self.n).find(|&v| inside(v)).expect("non-empty residue");
        let mut pos = vec![usize::MAX; self.n];
        let mut walk = Vec::new();
        let mut v = start;
        while pos[v] == usize::MAX {
            pos[v] = walk.len();
            walk.push(v);
            v = preds[v][0];
        }
        let mut cycle = walk[pos[v]..].to_vec();
        cycle.reverse();
        cycle
    }

    /// Checks that `cycle` is a closed directed walk of distinct vertices.
    pub fn is_cycle(&self, cycle: &[usize]) -> bool {
        if cycle.is_empty() {
            return false;
        }
        let distinct: BTreeSet<_> = cycle.iter().collect();
        distinct.len() == cycle.len()
            && (0..cycle.len()).all(|i| self.has_arc(cycle[i], cycle[(i + 1) % cycle.len()]))
    }

    /// Checks that `order` is a permutation of the vertices respecting every arc.
    pub fn is_topological_order(&self, order: &[usize]) -> bool {
        if order.len() != self.n {
            return false;
        }
        let mut pos = vec![usize::MAX; self.n];
        for (i, &v) in order.iter().enumerate() {
            if v >= self.n || pos[v] != usize::MAX {
                return false;
            }
            pos[v] = i;
        }
        self.arcs().all(|(u, v)| pos[u] < pos[v])
    }
}
