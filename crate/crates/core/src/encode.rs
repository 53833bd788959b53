//! Letter-graph encoding of chain circuits.
//!
//! Vertices are grouped into classes, each inside one bag, and every class
//! becomes a letter. Between a class `X` in bag `i` and a class `Y` in bag
//! `i+1` the decoder has both arcs if `X` is complete to `Y`, no arc if it is
//! anticomplete, and only `(X, Y)` otherwise; in the last case the word must
//! put `u` before `w` exactly when `u ~ w`. Classes come from recursive splits
//! at blue and red cycles with the middle part cut along the spiral, so only
//! boundedly many classes are needed when the circuit avoids long cycles.

use std::collections::BTreeSet;

use crate::budget::Budget;
use crate::circuit::{
    cc_complement_parts, conflict_of, find_cycle, layout, red_blue_split_parts, ChainCircuit, CyclicWord, Encoding,
};
use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::letters::Decoder;

/// Encodes a chain circuit's graph as a letter graph.
///
/// Acyclic conflict digraphs use the cyclic word with one letter per bag.
/// Otherwise the circuit (or its complement, whose encoding is turned back by
/// flipping arcs between consecutive bags) is split recursively.
pub fn encode(cc: &ChainCircuit, budget: &mut Budget) -> Result<Encoding> {
    if let CyclicWord::Word(enc) = cc.cyclic_word() {
        return Ok(enc);
    }
    let g = cc.graph();
    let bags = cc.bags();
    let enc = if find_cycle(g, bags, 1, budget)?.is_some() {
        let classes = split_classes(g, bags, budget)?;
        realize(g, bags, classes, budget)?
    } else {
        let (h, hb) = cc_complement_parts(g, bags);
        if find_cycle(&h, &hb, 1, budget)?.is_none() {
            return Err(Error::Invariant(
                "conflict digraph is cyclic but neither side contains a k-cycle".into(),
            ));
        }
        let classes = split_classes(&h, &hb, budget)?;
        let inner = realize(&h, &hb, classes, budget)?;
        flip_consecutive(inner, cc)
    };
    if !enc.verify(g)? {
        return Err(Error::Invariant("encoding does not reproduce the circuit".into()));
    }
    Ok(enc)
}

/// Swaps presence and absence of both arcs between letters of consecutive
/// bags. The word is unchanged.
fn flip_consecutive(enc: Encoding, cc: &ChainCircuit) -> Encoding {
    let k = cc.k();
    let bag = cc.bag_of();
    let resolved = enc.decoder.resolve(&enc.word).expect("word uses decoder letters");
    let mut letter_bag = vec![usize::MAX; enc.decoder.len()];
    for (p, &l) in resolved.iter().enumerate() {
        letter_bag[l] = bag[enc.order[p]];
    }
    let mut d = enc.decoder.clone();
    let m = d.len();
    for x in 0..m {
        for y in 0..m {
            if letter_bag[x] != usize::MAX && letter_bag[y] != usize::MAX && (letter_bag[x] + 1) % k == letter_bag[y] {
                for (a, b) in [(x, y), (y, x)] {
                    if enc.decoder.has_arc(a, b) {
                        d.remove_arc(a, b);
                    } else {
                        d.add_arc(a, b);
                    }
                }
            }
        }
    }
    Encoding { decoder: d, ..enc }
}

/// Vertex classes for the (sub)circuit given by `bags`, each inside one bag.
fn split_classes(g: &Graph, bags: &[Vec<usize>], budget: &mut Budget) -> Result<Vec<Vec<usize>>> {
    if bags.iter().all(Vec::is_empty) {
        return Ok(Vec::new());
    }
    if conflict_of_sub(g, bags).is_acyclic() {
        return Ok(bags.iter().filter(|b| !b.is_empty()).cloned().collect());
    }
    if let Some(seed) = find_cycle(g, bags, 1, budget)? {
        let split = red_blue_split_parts(g, bags, &seed[0])?;
        let mut classes = split_classes(g, &split.left, budget)?;
        classes.extend(middle_classes(g, bags, &split.middle, &split.blue, &split.spiral));
        classes.extend(split_classes(g, &split.right, budget)?);
        return Ok(classes);
    }
    let (h, hb) = cc_complement_parts(g, bags);
    if find_cycle(&h, &hb, 1, budget)?.is_some() {
        // Class structure is preserved by complementing consecutive pairs.
        return split_classes(&h, &hb, budget);
    }
    Err(Error::Invariant("cyclic part without a k-cycle on either side".into()))
}

/// Conflict digraph restricted to the vertices in `bags`.
fn conflict_of_sub(g: &Graph, bags: &[Vec<usize>]) -> Digraph {
    let full = conflict_of(g, bags);
    let verts: Vec<usize> = bags.iter().flatten().copied().collect();
    let mut idx = vec![usize::MAX; g.n()];
    for (i, &v) in verts.iter().enumerate() {
        idx[v] = i;
    }
    let mut d = Digraph::new(verts.len());
    for (u, v) in full.arcs() {
        d.add_arc(idx[u], idx[v]);
    }
    d
}

/// Blue and spiral vertices are singletons. The rest of each middle bag is
/// cut into runs at every singleton and at the boundary of every singleton's
/// neighbourhood in the adjacent bags.
fn middle_classes(
    g: &Graph,
    bags: &[Vec<usize>],
    middle: &[Vec<usize>],
    blue: &[usize],
    spiral: &[usize],
) -> Vec<Vec<usize>> {
    let k = bags.len();
    let lay = layout(g.n(), bags);
    let singles: BTreeSet<usize> = blue.iter().chain(spiral).copied().collect();
    // cut_before[v]: a new run starts at v.
    let mut cut_before = vec![false; g.n()];
    for &s in &singles {
        let i = lay.bag[s];
        let next = &middle[(i + 1) % k];
        if let Some(&w) = next.iter().find(|&&w| g.has_edge(s, w)) {
            cut_before[w] = true;
        }
        let prev = &middle[(i + k - 1) % k];
        if let Some(p) = prev.iter().rposition(|&w| g.has_edge(s, w)) {
            if let Some(&w) = prev.get(p + 1) {
                cut_before[w] = true;
            }
        }
    }
    let mut classes = Vec::new();
    for b in middle {
        let mut run: Vec<usize> = Vec::new();
        for &v in b {
            if singles.contains(&v) {
                if !run.is_empty() {
                    classes.push(std::mem::take(&mut run));
                }
                classes.push(vec![v]);
                continue;
            }
            if cut_before[v] && !run.is_empty() {
                classes.push(std::mem::take(&mut run));
            }
            run.push(v);
        }
        if !run.is_empty() {
            classes.push(run);
        }
    }
    classes
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum PairKind {
    Complete,
    Empty,
    Mixed,
}

/// Builds decoder and word from classes, splitting classes into singletons
/// along any ordering cycle until the ordering constraints are acyclic.
fn realize(g: &Graph, bags: &[Vec<usize>], mut classes: Vec<Vec<usize>>, budget: &mut Budget) -> Result<Encoding> {
    let k = bags.len();
    let n = g.n();
    let lay = layout(n, bags);
    loop {
        budget.tick()?;
        let m = classes.len();
        let mut class_of = vec![usize::MAX; n];
        for (c, members) in classes.iter().enumerate() {
            for &v in members {
                class_of[v] = c;
            }
        }
        if let Some(v) = (0..n).find(|&v| class_of[v] == usize::MAX) {
            return Err(Error::Invariant(format!("vertex {v} has no class")));
        }
        let class_bag: Vec<usize> = classes.iter().map(|c| lay.bag[c[0]]).collect();
        let mut arcs = Vec::new();
        let mut order_dg = Digraph::new(n);
        for x in 0..m {
            for y in 0..m {
                if (class_bag[x] + 1) % k != class_bag[y] {
                    continue;
                }
                let kind = pair_kind(g, &classes[x], &classes[y]);
                match kind {
                    PairKind::Complete => arcs.extend([(x, y), (y, x)]),
                    PairKind::Empty => {}
                    PairKind::Mixed => {
                        arcs.push((x, y));
                        for &u in &classes[x] {
                            for &w in &classes[y] {
                                if g.has_edge(u, w) {
                                    order_dg.add_arc(u, w);
                                } else {
                                    order_dg.add_arc(w, u);
                                }
                            }
                        }
                    }
                }
            }
        }
        match order_dg.topological_sort() {
            Ok(order) => {
                let decoder = Decoder::from_indices(m, arcs);
                let letters: Vec<usize> = order.iter().map(|&v| class_of[v]).collect();
                return Ok(Encoding {
                    word: decoder.word_from_indices(&letters),
                    letters_used: m,
                    decoder,
                    order,
                });
            }
            Err(cycle) => {
                let on_cycle: BTreeSet<usize> = cycle.iter().map(|&v| class_of[v]).collect();
                let mut next = Vec::with_capacity(m + cycle.len());
                for (c, members) in classes.into_iter().enumerate() {
                    if on_cycle.contains(&c) && members.len() > 1 {
                        next.extend(members.into_iter().map(|v| vec![v]));
                    } else {
                        next.push(members);
                    }
                }
                if next.len() == m {
                    return Err(Error::Invariant("ordering cycle among singleton classes".into()));
                }
                classes = next;
            }
        }
    }
}

fn pair_kind(g: &Graph, x: &[usize], y: &[usize]) -> PairKind {
    let mut any = false;
    let mut all = true;
    for &u in x {
        for &w in y {
            if g.has_edge(u, w) {
                any = true;
            } else {
                all = false;
            }
        }
    }
    match (any, all) {
        (_, true) => PairKind::Complete,
        (false, _) => PairKind::Empty,
        _ => PairKind::Mixed,
    }
}
