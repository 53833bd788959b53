//! Chain circuits: `k >= 3` independent bags arranged in a cycle, with chain
//! graphs between consecutive bags and a bag order that is decreasing in
//! neighbourhoods toward the next bag and increasing toward the previous one.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::budget::{Budget, Exhausted};
use crate::digraph::Digraph;
use crate::error::{parse_err, CircuitError, Error, Result};
use crate::graph::{is_skippable, parse_num, Graph};
use crate::letters::{Decoder, Word};
use crate::partition::{PartitionCertificate, Sign};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "CircuitRepr", try_from = "CircuitRepr")]
pub struct ChainCircuit {
    graph: Graph,
    bags: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct CircuitRepr {
    graph: Graph,
    /// 1-based vertices, in bag order.
    bags: Vec<Vec<usize>>,
}

impl From<ChainCircuit> for CircuitRepr {
    fn from(c: ChainCircuit) -> Self {
        CircuitRepr {
            bags: c.bags.iter().map(|b| b.iter().map(|v| v + 1).collect()).collect(),
            graph: c.graph,
        }
    }
}

impl TryFrom<CircuitRepr> for ChainCircuit {
    type Error = Error;
    fn try_from(r: CircuitRepr) -> Result<Self> {
        let mut bags = Vec::with_capacity(r.bags.len());
        for b in r.bags {
            let mut out = Vec::with_capacity(b.len());
            for v in b {
                if v == 0 {
                    return Err(Error::VertexOutOfRange { vertex: 0, n: r.graph.n() });
                }
                out.push(v - 1);
            }
            bags.push(out);
        }
        ChainCircuit::validate(r.graph, bags)
    }
}

/// Where each vertex sits: bag index and position within the bag order.
#[derive(Debug, Clone)]
pub(crate) struct Layout {
    pub bag: Vec<usize>,
    pub pos: Vec<usize>,
}

pub(crate) fn layout(n: usize, bags: &[Vec<usize>]) -> Layout {
    let mut bag = vec![usize::MAX; n];
    let mut pos = vec![usize::MAX; n];
    for (i, b) in bags.iter().enumerate() {
        for (p, &v) in b.iter().enumerate() {
            bag[v] = i;
            pos[v] = p;
        }
    }
    Layout { bag, pos }
}

impl ChainCircuit {
    /// Checks every defining condition; bags may be empty.
    pub fn validate(graph: Graph, bags: Vec<Vec<usize>>) -> Result<Self> {
        let k = bags.len();
        let n = graph.n();
        if k < 3 {
            return Err(CircuitError::TooFewBags(k).into());
        }
        let mut seen = vec![false; n];
        for &v in bags.iter().flatten() {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(CircuitError::NotPartition(v).into());
            }
        }
        if let Some(v) = seen.iter().position(|&s| !s) {
            return Err(CircuitError::NotPartition(v).into());
        }
        let lay = layout(n, &bags);
        for (i, b) in bags.iter().enumerate() {
            if !crate::graph::is_independent(&graph, b) {
                return Err(CircuitError::BagNotIndependent(i).into());
            }
        }
        for (u, v) in graph.edges() {
            let (a, b) = (lay.bag[u], lay.bag[v]);
            if (a + 1) % k != b && (b + 1) % k != a {
                return Err(CircuitError::StrayEdge(u, v).into());
            }
        }
        for i in 0..k {
            let j = (i + 1) % k;
            if !graph.is_chain_pair(&bags[i], &bags[j])? {
                return Err(CircuitError::NonChainPair(i, j).into());
            }
        }
        for i in 0..k {
            let next = &bags[(i + 1) % k];
            let prev = &bags[(i + k - 1) % k];
            let ok = bags[i].windows(2).all(|w| {
                let (a, b) = (w[0], w[1]);
                next.iter().all(|&x| !graph.has_edge(b, x) || graph.has_edge(a, x))
                    && prev.iter().all(|&x| !graph.has_edge(a, x) || graph.has_edge(b, x))
            });
            if !ok {
                return Err(CircuitError::OrderViolation(i).into());
            }
        }
        Ok(ChainCircuit { graph, bags })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn bags(&self) -> &[Vec<usize>] {
        &self.bags
    }

    pub fn k(&self) -> usize {
        self.bags.len()
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn bag_of(&self) -> Vec<usize> {
        layout(self.n(), &self.bags).bag
    }

    /// Sub-circuit on the given bags (subsets of the original bags, in
    /// order), relabelled ascending; also returns new-to-old labels.
    pub fn restrict(&self, bags: &[Vec<usize>]) -> (ChainCircuit, Vec<usize>) {
        let verts: Vec<usize> = bags.iter().flatten().copied().sorted().collect();
        let mut new = vec![usize::MAX; self.n()];
        for (i, &v) in verts.iter().enumerate() {
            new[v] = i;
        }
        let graph = self.graph.induced_ordered(&verts);
        let bags = bags.iter().map(|b| b.iter().map(|&v| new[v]).collect()).collect();
        (ChainCircuit { graph, bags }, verts)
    }

    /// Complements the edges between consecutive bags and reverses every bag
    /// order, which restores the order condition.
    pub fn complement(&self) -> ChainCircuit {
        let (graph, bags) = cc_complement_parts(&self.graph, &self.bags);
        ChainCircuit { graph, bags }
    }

    pub fn conflict(&self) -> Digraph {
        conflict_of(&self.graph, &self.bags)
    }

    /// Letters `a_1 .. a_k` (one per bag) with arcs `(a_i, a_{i+1})`, and a
    /// word read along a topological order of the conflict digraph.
    pub fn cyclic_word(&self) -> CyclicWord {
        let k = self.k();
        match self.conflict().topological_sort() {
            Ok(order) => {
                let bag = self.bag_of();
                let decoder = cyclic_decoder(k);
                let letters: Vec<usize> = order.iter().map(|&v| bag[v]).collect();
                CyclicWord::Word(Encoding {
                    word: decoder.word_from_indices(&letters),
                    letters_used: letters.iter().collect::<BTreeSet<_>>().len(),
                    decoder,
                    order,
                })
            }
            Err(cycle) => CyclicWord::Cycle(cycle),
        }
    }

    /// A bag-respecting induced copy of `C_{k,p}`: `layers[m][i]` lies in bag
    /// `i`, and layer `m` of bag `i` is adjacent to layer `n` of bag `i+1`
    /// iff `m <= n`. The first copy in lexicographic order of bag positions.
    pub fn find_cycle_subgraph(&self, p: usize, budget: &mut Budget) -> Result<Option<Vec<Vec<usize>>>, Exhausted> {
        find_cycle(&self.graph, &self.bags, p, budget)
    }

    pub fn to_text(&self) -> String {
        let mut s = self.graph.to_text();
        for (i, b) in self.bags.iter().enumerate() {
            s.push_str(&format!("bag {} :", i + 1));
            for v in b {
                s.push_str(&format!(" {}", v + 1));
            }
            s.push('\n');
        }
        s
    }
}

impl FromStr for ChainCircuit {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let lines: Vec<(usize, &str)> = s.lines().enumerate().map(|(i, l)| (i + 1, l)).collect();
        let (graph, used) = Graph::parse_lines(&lines)?;
        let bags = parse_bag_lines(&lines[used..], graph.n())?;
        let k = bags.len();
        let mut ordered: Vec<Option<Vec<usize>>> = vec![None; k];
        for (lineno, name, members) in bags {
            let idx: usize = name
                .parse()
                .ok()
                .filter(|&b| b >= 1 && b <= k)
                .ok_or_else(|| parse_err(lineno, format!("bag label must be 1..{k}, got `{name}`")))?;
            if ordered[idx - 1].replace(members).is_some() {
                return Err(parse_err(lineno, format!("bag {idx} given twice")));
            }
        }
        ChainCircuit::validate(graph, ordered.into_iter().map(Option::unwrap).collect())
    }
}

impl fmt::Display for ChainCircuit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Parses `bag <name> : v1 v2 ...` lines (1-based). Other non-blank lines are errors.
pub(crate) fn parse_bag_lines<'a>(lines: &[(usize, &'a str)], n: usize) -> Result<Vec<(usize, &'a str, Vec<usize>)>> {
    let mut out = Vec::new();
    for &(lineno, line) in lines {
        if is_skippable(line) || line.trim_start().starts_with("sign") {
            continue;
        }
        let (head, tail) = line
            .split_once(':')
            .ok_or_else(|| parse_err(lineno, "expected `bag <name> : <vertices>`"))?;
        let mut h = head.split_whitespace();
        if h.next() != Some("bag") {
            return Err(parse_err(lineno, "expected `bag <name> : <vertices>`"));
        }
        let name = h.next().ok_or_else(|| parse_err(lineno, "missing bag name"))?;
        let mut members = Vec::new();
        for tok in tail.split_whitespace() {
            let v: usize = parse_num(lineno, Some(tok))?;
            if v == 0 || v > n {
                return Err(parse_err(lineno, format!("vertex {v} out of range 1..{n}")));
            }
            members.push(v - 1);
        }
        out.push((lineno, name, members));
    }
    Ok(out)
}

pub(crate) fn cc_complement_parts(g: &Graph, bags: &[Vec<usize>]) -> (Graph, Vec<Vec<usize>>) {
    let k = bags.len();
    let mut h = g.clone();
    for i in 0..k {
        for &u in &bags[i] {
            for &w in &bags[(i + 1) % k] {
                h.set_edge(u, w, !g.has_edge(u, w));
            }
        }
    }
    let rev = bags.iter().map(|b| b.iter().rev().copied().collect()).collect();
    (h, rev)
}

/// For `u` in bag `i` and `w` in bag `i+1`: arc `u -> w` on an edge and
/// `w -> u` on a non-edge.
pub(crate) fn conflict_of(g: &Graph, bags: &[Vec<usize>]) -> Digraph {
    let k = bags.len();
    let mut d = Digraph::new(g.n());
    for i in 0..k {
        for &u in &bags[i] {
            for &w in &bags[(i + 1) % k] {
                if g.has_edge(u, w) {
                    d.add_arc(u, w);
                } else {
                    d.add_arc(w, u);
                }
            }
        }
    }
    d
}

pub fn cyclic_decoder(k: usize) -> Decoder {
    Decoder::from_indices(k, (0..k).map(|i| (i, (i + 1) % k)))
}

pub(crate) fn find_cycle(g: &Graph, bags: &[Vec<usize>], p: usize, budget: &mut Budget) -> Result<Option<Vec<Vec<usize>>>, Exhausted> {
    let k = bags.len();
    if p == 0 || bags.iter().any(|b| b.len() < p) {
        return Ok(None);
    }
    fn fits(g: &Graph, a: &[usize], b: &[usize]) -> bool {
        a.iter()
            .enumerate()
            .all(|(m, &u)| b.iter().enumerate().all(|(n, &w)| g.has_edge(u, w) == (m <= n)))
    }
    fn rec(
        g: &Graph,
        bags: &[Vec<usize>],
        p: usize,
        chosen: &mut Vec<Vec<usize>>,
        budget: &mut Budget,
    ) -> Result<bool, Exhausted> {
        let i = chosen.len();
        if i == bags.len() {
            return Ok(fits(g, &chosen[i - 1], &chosen[0]));
        }
        for combo in bags[i].iter().copied().combinations(p) {
            budget.tick()?;
            if i > 0 && !fits(g, &chosen[i - 1], &combo) {
                continue;
            }
            chosen.push(combo);
            if rec(g, bags, p, chosen, budget)? {
                return Ok(true);
            }
            chosen.pop();
        }
        Ok(false)
    }
    let mut chosen = Vec::with_capacity(k);
    if rec(g, bags, p, &mut chosen, budget)? {
        Ok(Some((0..p).map(|m| chosen.iter().map(|c| c[m]).collect()).collect()))
    } else {
        Ok(None)
    }
}

/// `C_{k,l}`: vertex `v_{i,m}` is `i*l + m` (0-based), bags `(v_{i,0}, ..,
/// v_{i,l-1})`, and `v_{i,m} ~ v_{i+1,n}` iff `m <= n`, indices mod `k`.
pub fn generate_ckl(k: usize, l: usize) -> Result<ChainCircuit> {
    if k < 3 {
        return Err(CircuitError::TooFewBags(k).into());
    }
    if l == 0 {
        return Err(Error::InvalidArgument("l must be at least 1".into()));
    }
    let mut g = Graph::empty(k * l);
    for i in 0..k {
        let j = (i + 1) % k;
        for m in 0..l {
            for n in m..l {
                g.set_edge(i * l + m, j * l + n, true);
            }
        }
    }
    let bags = (0..k).map(|i| (i * l..(i + 1) * l).collect()).collect();
    ChainCircuit::validate(g, bags)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum CyclicWord {
    Word(Encoding),
    Cycle(Vec<usize>),
}

/// A letter-graph representation of a circuit's graph: decoding `word`
/// gives the graph with vertex `order[p]` at position `p`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Encoding {
    pub decoder: Decoder,
    pub word: Word,
    pub order: Vec<usize>,
    pub letters_used: usize,
}

impl Encoding {
    /// Label-level check against `g`.
    pub fn verify(&self, g: &Graph) -> Result<bool> {
        let rep = crate::letters::LetterRepresentation {
            decoder: self.decoder.clone(),
            word: self.word.clone(),
            order: self.order.clone(),
        };
        rep.verify(g)
    }
}

/// Result of splitting at the blue and red cycles; all sets use the
/// circuit's own labels and keep bag order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Split {
    pub left: Vec<Vec<usize>>,
    pub middle: Vec<Vec<usize>>,
    pub right: Vec<Vec<usize>>,
    /// `blue[i]` lies in bag `i`.
    pub blue: Vec<usize>,
    pub red: Vec<usize>,
    /// The rightward spiral from the blue vertex of the last bag, in visiting
    /// order, ending with one full turn on the red cycle.
    pub spiral: Vec<usize>,
}

impl ChainCircuit {
    /// Blue cycle by leftmost next-bag neighbours from `seed[0]`; the spiral
    /// by rightmost previous-bag neighbours from the blue vertex of the last
    /// bag; the red cycle is where the spiral becomes periodic.
    pub fn red_blue_split(&self, seed: &[usize]) -> Result<Split> {
        red_blue_split_parts(&self.graph, &self.bags, seed)
    }

    /// Checks the four cross-adjacency properties of a split.
    pub fn split_structure_holds(&self, s: &Split) -> bool {
        split_structure(&self.graph, s)
    }
}

pub(crate) fn red_blue_split_parts(g: &Graph, bags: &[Vec<usize>], seed: &[usize]) -> Result<Split> {
    let k = bags.len();
    let lay = layout(g.n(), bags);
    let seed_ok = seed.len() == k
        && seed.iter().enumerate().all(|(i, &v)| v < g.n() && lay.bag[v] == i)
        && (0..k).all(|i| g.has_edge(seed[i], seed[(i + 1) % k]));
    if !seed_ok {
        return Err(Error::InvalidArgument("seed is not a bag-respecting k-cycle".into()));
    }
    let leftmost_next = |v: usize| {
        let b = (lay.bag[v] + 1) % k;
        bags[b].iter().copied().find(|&w| g.has_edge(v, w))
    };
    let rightmost_prev = |v: usize| {
        let b = (lay.bag[v] + k - 1) % k;
        bags[b].iter().rev().copied().find(|&w| g.has_edge(v, w))
    };
    let blue = periodic_walk(seed[0], k, leftmost_next)?;
    let blue = rotate_to_bags(&blue, &lay.bag, k);
    let spiral_walk = walk_until_repeat(blue[k - 1], rightmost_prev)?;
    // The periodic part of the spiral is one turn: the red cycle.
    let last = *spiral_walk.last().unwrap();
    let first_rep = spiral_walk.iter().position(|&v| v == last).unwrap();
    let red_turn: Vec<usize> = spiral_walk[first_rep..spiral_walk.len() - 1].to_vec();
    if red_turn.len() != k {
        return Err(Error::Invariant("spiral did not close after one turn".into()));
    }
    let red = rotate_to_bags(&red_turn, &lay.bag, k);
    let spiral = spiral_walk[..spiral_walk.len() - 1].to_vec();
    let mut left = vec![Vec::new(); k];
    let mut middle = vec![Vec::new(); k];
    let mut right = vec![Vec::new(); k];
    for i in 0..k {
        let (lo, hi) = (lay.pos[blue[i]], lay.pos[red[i]]);
        if lo > hi {
            return Err(Error::Invariant("red cycle left of blue cycle".into()));
        }
        for &v in &bags[i] {
            let p = lay.pos[v];
            if p < lo {
                left[i].push(v);
            } else if p > hi {
                right[i].push(v);
            } else {
                middle[i].push(v);
            }
        }
    }
    Ok(Split {
        left,
        middle,
        right,
        blue,
        red,
        spiral,
    })
}

fn walk_until_repeat(start: usize, step: impl Fn(usize) -> Option<usize>) -> Result<Vec<usize>> {
    let mut walk = vec![start];
    let mut seen = BTreeSet::from([start]);
    loop {
        let v = step(*walk.last().unwrap()).ok_or_else(|| Error::Invariant("walk reached a vertex without neighbours".into()))?;
        walk.push(v);
        if !seen.insert(v) {
            return Ok(walk);
        }
    }
}

/// The cycle that a deterministic walk from `start` falls into.
fn periodic_walk(start: usize, k: usize, step: impl Fn(usize) -> Option<usize>) -> Result<Vec<usize>> {
    let walk = walk_until_repeat(start, step)?;
    let last = *walk.last().unwrap();
    let from = walk.iter().position(|&v| v == last).unwrap();
    let cycle = walk[from..walk.len() - 1].to_vec();
    if cycle.len() != k {
        return Err(Error::Invariant("walk did not close after one turn".into()));
    }
    Ok(cycle)
}

fn rotate_to_bags(cycle: &[usize], bag: &[usize], k: usize) -> Vec<usize> {
    let mut out = vec![usize::MAX; k];
    for &v in cycle {
        out[bag[v]] = v;
    }
    out
}

fn split_structure(g: &Graph, s: &Split) -> bool {
    let k = s.left.len();
    let all = |a: &[usize], b: &[usize], want: bool| a.iter().all(|&u| b.iter().all(|&w| g.has_edge(u, w) == want));
    (0..k).all(|i| {
        let nx = (i + 1) % k;
        let pv = (i + k - 1) % k;
        all(&s.right[i], &s.middle[nx], false)
            && all(&s.right[i], &s.left[nx], false)
            && all(&s.left[i], &s.middle[pv], false)
            && all(&s.left[i], &s.right[pv], false)
            && all(&s.left[i], &s.middle[nx], true)
            && all(&s.left[i], &s.right[nx], true)
            && all(&s.right[i], &s.middle[pv], true)
            && all(&s.right[i], &s.left[pv], true)
    })
}

/// Random chain circuit: bag sizes drawn so the total is at most `max_n`
/// (each bag may be empty only if `allow_empty`), each consecutive pair a
/// random chain graph given by non-decreasing thresholds, then vertex labels
/// shuffled.
pub fn random_circuit<R: Rng + ?Sized>(rng: &mut R, k: usize, max_n: usize, allow_empty: bool) -> ChainCircuit {
    assert!(k >= 3);
    let min = if allow_empty { 0 } else { 1 };
    assert!(max_n >= k * min);
    let total = rng.gen_range(k * min..=max_n);
    let mut sizes = vec![min; k];
    for _ in 0..(total - k * min) {
        sizes[rng.gen_range(0..k)] += 1;
    }
    let n: usize = sizes.iter().sum();
    let mut labels: Vec<usize> = (0..n).collect();
    labels.shuffle(rng);
    let mut bags = Vec::with_capacity(k);
    let mut next = 0;
    for &s in &sizes {
        bags.push(labels[next..next + s].to_vec());
        next += s;
    }
    let mut g = Graph::empty(n);
    for i in 0..k {
        let a = &bags[i];
        let b = &bags[(i + 1) % k];
        let mut thresholds: Vec<usize> = (0..a.len()).map(|_| rng.gen_range(0..=b.len())).collect();
        thresholds.sort_unstable();
        for (p, &u) in a.iter().enumerate() {
            for &w in &b[thresholds[p]..] {
                g.set_edge(u, w, true);
            }
        }
    }
    ChainCircuit::validate(g, bags).expect("threshold construction is a chain circuit")
}

/// `k` bags of `l` vertices (vertex `r*l + p` is position `p` of bag `r`)
/// where position `p` of bag `r` sees positions `x <= p` of bag `r+1`,
/// except that bags 1 and 2 (0-based) are joined by `p + x <= l-1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwistedCycle {
    pub graph: Graph,
    pub bags: Vec<Vec<usize>>,
    pub twisted_pair: (usize, usize),
}

impl TwistedCycle {
    /// The displayed orders with explicit signs: every bag is increasing
    /// toward its successor and decreasing toward its predecessor, except
    /// that the bag before the twist is decreasing toward it.
    pub fn certificate(&self) -> PartitionCertificate {
        let k = self.bags.len();
        let mut signs = Vec::new();
        for r in 0..k {
            let next = (r + 1) % k;
            let prev = (r + k - 1) % k;
            let toward_next = if r == self.twisted_pair.0 { Sign::Minus } else { Sign::Plus };
            signs.push(((r, next), toward_next));
            signs.push(((r, prev), Sign::Minus));
        }
        PartitionCertificate::new(self.bags.clone()).with_signs(signs)
    }
}

pub fn generate_twisted(k: usize, l: usize) -> Result<TwistedCycle> {
    if k < 3 {
        return Err(CircuitError::TooFewBags(k).into());
    }
    if l == 0 {
        return Err(Error::InvalidArgument("l must be at least 1".into()));
    }
    let mut g = Graph::empty(k * l);
    for r in 0..k {
        let s = (r + 1) % k;
        for p in 0..l {
            for x in 0..l {
                let adjacent = if r == 1 { p + x < l } else { x <= p };
                if adjacent {
                    g.set_edge(r * l + p, s * l + x, true);
                }
            }
        }
    }
    Ok(TwistedCycle {
        graph: g,
        bags: (0..k).map(|r| (r * l..(r + 1) * l).collect()).collect(),
        twisted_pair: (1, 2),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_isomorphic;
    use crate::letters::decode;

    fn uvw() -> ChainCircuit {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        ChainCircuit::validate(g, vec![vec![0], vec![1], vec![2]]).unwrap()
    }

    #[test]
    fn validation() {
        let c4 = Graph::cycle(4).unwrap();
        assert!(ChainCircuit::validate(c4.clone(), vec![vec![0], vec![1], vec![2], vec![3]]).is_ok());
        let c42 = generate_ckl(4, 2).unwrap();
        let mut bags = c42.bags().to_vec();
        bags[1].reverse();
        assert_eq!(
            ChainCircuit::validate(c42.graph().clone(), bags),
            Err(Error::Circuit(CircuitError::OrderViolation(1)))
        );
        assert!(ChainCircuit::validate(c4.clone(), vec![vec![0, 2], vec![1], vec![3]]).is_ok());
        let chord = Graph::from_edges(4, &[(0, 2)]).unwrap();
        assert_eq!(
            ChainCircuit::validate(chord, vec![vec![0], vec![1], vec![2], vec![3]]),
            Err(Error::Circuit(CircuitError::StrayEdge(0, 2)))
        );
        assert_eq!(
            ChainCircuit::validate(c4, vec![vec![0, 1], vec![2], vec![3]]),
            Err(Error::Circuit(CircuitError::BagNotIndependent(0)))
        );
    }

    #[test]
    fn ckl_sizes() {
        let c41 = generate_ckl(4, 1).unwrap();
        assert!(is_isomorphic(c41.graph(), &Graph::cycle(4).unwrap()));
        let c44 = generate_ckl(4, 4).unwrap();
        assert_eq!((c44.n(), c44.graph().edge_count()), (16, 40));
        let c32 = generate_ckl(3, 2).unwrap();
        assert_eq!((c32.n(), c32.graph().edge_count()), (6, 9));
        assert!(generate_ckl(2, 2).is_err());
    }

    #[test]
    fn complements() {
        let c = generate_ckl(4, 1).unwrap().complement();
        assert_eq!((c.n(), c.graph().edge_count()), (4, 0));
        let c32 = generate_ckl(3, 2).unwrap();
        assert_eq!(c32.complement().complement(), c32);
        let c43 = generate_ckl(4, 3).unwrap().complement();
        assert!(ChainCircuit::validate(c43.graph().clone(), c43.bags().to_vec()).is_ok());
    }

    #[test]
    fn conflicts() {
        let d = generate_ckl(3, 1).unwrap().conflict();
        assert_eq!(d.arcs().collect::<Vec<_>>(), vec![(0, 1), (1, 2), (2, 0)]);
        let d = uvw().conflict();
        assert_eq!(d.arcs().collect::<Vec<_>>(), vec![(0, 1), (0, 2), (1, 2)]);
        let e = ChainCircuit::validate(Graph::empty(3), vec![vec![0], vec![1], vec![2]]).unwrap();
        assert_eq!(e.conflict().arcs().collect::<Vec<_>>(), vec![(0, 2), (1, 0), (2, 1)]);
    }

    #[test]
    fn cyclic_words() {
        match uvw().cyclic_word() {
            CyclicWord::Word(enc) => {
                assert_eq!(enc.word.to_string(), "a b c");
                assert!(enc.verify(uvw().graph()).unwrap());
                assert_eq!(decode(&enc.decoder, &enc.word).unwrap(), *uvw().graph());
            }
            CyclicWord::Cycle(_) => panic!("acyclic"),
        }
        let c31 = generate_ckl(3, 1).unwrap();
        match c31.cyclic_word() {
            CyclicWord::Cycle(c) => assert!(c31.conflict().is_cycle(&c)),
            CyclicWord::Word(_) => panic!("cyclic"),
        }
    }

    #[test]
    fn cycle_copies() {
        let mut b = Budget::unlimited();
        let c43 = generate_ckl(4, 3).unwrap();
        let copy = c43.find_cycle_subgraph(2, &mut b).unwrap().unwrap();
        let verts: Vec<usize> = copy.iter().flatten().copied().collect();
        let h = c43.graph().induced_subgraph(&verts).unwrap();
        assert!(is_isomorphic(&h, generate_ckl(4, 2).unwrap().graph()));
        assert!(generate_ckl(4, 1).unwrap().find_cycle_subgraph(2, &mut b).unwrap().is_none());
        assert!(uvw().find_cycle_subgraph(1, &mut b).unwrap().is_none());
    }

    #[test]
    fn splits() {
        let c41 = generate_ckl(4, 1).unwrap();
        let s = c41.red_blue_split(&[0, 1, 2, 3]).unwrap();
        assert!(s.left.iter().chain(&s.right).all(Vec::is_empty));
        let c43 = generate_ckl(4, 3).unwrap();
        let s = c43.red_blue_split(&[0, 3, 6, 9]).unwrap();
        assert!(s.left.iter().all(Vec::is_empty));
        assert!(s.middle.iter().all(|b| !b.is_empty()));
        assert!(c43.split_structure_holds(&s));
        let c42 = generate_ckl(4, 2).unwrap();
        let s = c42.red_blue_split(&[1, 3, 5, 7]).unwrap();
        assert!(s.left.iter().any(|b| !b.is_empty()));
        assert!(c42.split_structure_holds(&s));
    }

    #[test]
    fn twisted_family() {
        use crate::partition::{check_partition, partition_failure, Failure, Level};
        let t = generate_twisted(4, 1).unwrap();
        assert_eq!(t.graph.n(), 4);
        for l in 1..=3 {
            let t = generate_twisted(4, l).unwrap();
            let cert = t.certificate();
            assert!(check_partition(&t.graph, &cert, Level::Semi).unwrap());
            assert_eq!(
                partition_failure(&t.graph, &cert, Level::Proper).unwrap(),
                Some(Failure::NotProper(1, 2))
            );
        }
    }

    #[test]
    fn text_round_trip() {
        let c = generate_ckl(3, 2).unwrap();
        let back: ChainCircuit = c.to_text().parse().unwrap();
        assert_eq!(back, c);
    }

    #[test]
    fn random_circuits_are_valid() {
        use rand::SeedableRng;
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for _ in 0..50 {
            let c = random_circuit(&mut rng, 4, 12, true);
            assert!(ChainCircuit::validate(c.graph().clone(), c.bags().to_vec()).is_ok());
        }
    }
}
