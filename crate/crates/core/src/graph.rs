//! Finite simple graphs.
//!
//! Vertices are `0..n` in the API. The text format (`graph <n>` followed by
//! `e <i> <j>` lines) and the serde form are 1-based.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{parse_err, Error, Result};

const WORD: usize = 64;

fn words_for(n: usize) -> usize {
    n.div_ceil(WORD)
}

/// Simple undirected graph stored as bitset adjacency rows.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "GraphRepr", try_from = "GraphRepr")]
pub struct Graph {
    n: usize,
    rows: Vec<Vec<u64>>,
}

#[derive(Serialize, Deserialize)]
struct GraphRepr {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl From<Graph> for GraphRepr {
    fn from(g: Graph) -> Self {
        GraphRepr {
            n: g.n,
            edges: g.edges().map(|(u, v)| (u + 1, v + 1)).collect(),
        }
    }
}

impl TryFrom<GraphRepr> for Graph {
    type Error = Error;
    fn try_from(r: GraphRepr) -> Result<Self> {
        let mut g = Graph::empty(r.n);
        for (u, v) in r.edges {
            if u == 0 || v == 0 {
                return Err(Error::VertexOutOfRange { vertex: 0, n: r.n });
            }
            g.try_add_edge(u - 1, v - 1)?;
        }
        Ok(g)
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            rows: vec![vec![0; words_for(n)]; n],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    fn check(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        }
    }

    /// Adds an edge, rejecting loops, duplicates and out-of-range endpoints.
    pub fn try_add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check(u)?;
        self.check(v)?;
        if u == v || self.has_edge(u, v) {
            return Err(Error::BadEdge(u, v));
        }
        self.set_edge(u, v, true);
        Ok(())
    }

    /// Sets or clears `{u, v}`. Panics on loops or out-of-range vertices.
    pub fn set_edge(&mut self, u: usize, v: usize, present: bool) {
        assert!(u != v && u < self.n && v < self.n, "bad edge {{{u}, {v}}}");
        if present {
            self.rows[u][v / WORD] |= 1 << (v % WORD);
            self.rows[v][u / WORD] |= 1 << (u % WORD);
        } else {
            self.rows[u][v / WORD] &= !(1 << (v % WORD));
            self.rows[v][u / WORD] &= !(1 << (u % WORD));
        }
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u][v / WORD] >> (v % WORD) & 1 == 1
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&u| self.has_edge(v, u))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| ((u + 1)..self.n).filter(move |&v| self.has_edge(u, v)).map(move |v| (u, v)))
    }

    pub(crate) fn row(&self, v: usize) -> &[u64] {
        &self.rows[v]
    }

    /// Subgraph induced by `u`, relabelled `0..|u|` in ascending order of
    /// the original labels. Duplicates in `u` are ignored.
    pub fn induced_subgraph(&self, u: &[usize]) -> Result<Graph> {
        for &v in u {
            self.check(v)?;
        }
        let vs: Vec<usize> = u.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
        Ok(self.induced_ordered(&vs))
    }

    /// Subgraph induced by `vs` with vertex `i` of the result being `vs[i]`.
    pub fn induced_ordered(&self, vs: &[usize]) -> Graph {
        let mut h = Graph::empty(vs.len());
        for i in 0..vs.len() {
            for j in (i + 1)..vs.len() {
                if self.has_edge(vs[i], vs[j]) {
                    h.set_edge(i, j, true);
                }
            }
        }
        h
    }

    pub fn remove_vertex(&self, v: usize) -> Graph {
        let keep: Vec<usize> = (0..self.n).filter(|&u| u != v).collect();
        self.induced_ordered(&keep)
    }

    pub fn complement(&self) -> Graph {
        let mut h = Graph::empty(self.n);
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if !self.has_edge(u, v) {
                    h.set_edge(u, v, true);
                }
            }
        }
        h
    }

    /// Relabels so that old vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let mut h = Graph::empty(self.n);
        for (u, v) in self.edges() {
            h.set_edge(perm[u], perm[v], true);
        }
        h
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut h = Graph::empty(self.n + other.n);
        for (u, v) in self.edges() {
            h.set_edge(u, v, true);
        }
        for (u, v) in other.edges() {
            h.set_edge(u + self.n, v + self.n, true);
        }
        h
    }

    /// True iff `u` induces a clique or an independent set.
    pub fn is_homogeneous(&self, u: &[usize]) -> Result<bool> {
        for &v in u {
            self.check(v)?;
        }
        Ok(is_clique(self, u) || is_independent(self, u))
    }

    /// True iff the bipartite graph between `a` and `b` is 2K2-free, i.e. the
    /// neighbourhoods of `a` inside `b` form a chain under inclusion.
    pub fn is_chain_pair(&self, a: &[usize], b: &[usize]) -> Result<bool> {
        for &v in a.iter().chain(b) {
            self.check(v)?;
        }
        let bs: HashSet<usize> = b.iter().copied().collect();
        if let Some(&v) = a.iter().find(|v| bs.contains(v)) {
            return Err(Error::Overlap(v));
        }
        let mask = mask_of(self.n, b);
        let mut nbhds: Vec<Vec<u64>> = a.iter().map(|&v| and(self.row(v), &mask)).collect();
        nbhds.sort_by_key(|s| popcount(s));
        Ok(nbhds.windows(2).all(|w| subset(&w[0], &w[1])))
    }

    /// Lexicographically least vertex set of `self` inducing a copy of `pattern`.
    pub fn contains_induced(&self, pattern: &Graph) -> Option<Vec<usize>> {
        let k = pattern.n;
        if k > self.n {
            return None;
        }
        if k == 0 {
            return Some(Vec::new());
        }
        let pinv = Invariants::of(pattern);
        (0..self.n).combinations(k).find(|c| {
            let h = self.induced_ordered(c);
            Invariants::of(&h) == pinv && is_isomorphic(&h, pattern)
        })
    }

    /// Edges as a 1-based text block.
    pub fn to_text(&self) -> String {
        let mut s = format!("graph {}\n", self.n);
        for (u, v) in self.edges() {
            s.push_str(&format!("e {} {}\n", u + 1, v + 1));
        }
        s
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph G {\n");
        for v in 0..self.n {
            s.push_str(&format!("  {};\n", v + 1));
        }
        for (u, v) in self.edges() {
            s.push_str(&format!("  {} -- {};\n", u + 1, v + 1));
        }
        s.push_str("}\n");
        s
    }

    /// Parses the text format from an iterator of numbered lines, stopping at
    /// the first line that is neither blank, a comment, nor an `e` line.
    /// Returns the graph and the number of lines consumed.
    pub(crate) fn parse_lines(lines: &[(usize, &str)]) -> Result<(Graph, usize)> {
        let mut idx = 0;
        while idx < lines.len() && is_skippable(lines[idx].1) {
            idx += 1;
        }
        let (lineno, header) = *lines.get(idx).ok_or_else(|| parse_err(1, "missing `graph <n>` header"))?;
        let mut parts = header.split_whitespace();
        if parts.next() != Some("graph") {
            return Err(parse_err(lineno, "expected `graph <n>`"));
        }
        let n: usize = parse_num(lineno, parts.next())?;
        if parts.next().is_some() {
            return Err(parse_err(lineno, "trailing tokens after vertex count"));
        }
        let mut g = Graph::empty(n);
        idx += 1;
        while idx < lines.len() {
            let (lineno, line) = lines[idx];
            if is_skippable(line) {
                idx += 1;
                continue;
            }
            let mut parts = line.split_whitespace();
            if parts.next() != Some("e") {
                break;
            }
            let u: usize = parse_num(lineno, parts.next())?;
            let v: usize = parse_num(lineno, parts.next())?;
            if parts.next().is_some() {
                return Err(parse_err(lineno, "trailing tokens after edge"));
            }
            if u == 0 || v == 0 || u > n || v > n {
                return Err(parse_err(lineno, format!("vertex out of range 1..{n}")));
            }
            g.try_add_edge(u - 1, v - 1)
                .map_err(|e| parse_err(lineno, e.to_string()))?;
            idx += 1;
        }
        Ok((g, idx))
    }

    // ---- standard families ----

    pub fn complete(n: usize) -> Graph {
        Graph::empty(n).complement()
    }

    pub fn path(n: usize) -> Graph {
        let mut g = Graph::empty(n);
        for v in 1..n {
            g.set_edge(v - 1, v, true);
        }
        g
    }

    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::InvalidArgument(format!("a cycle needs at least 3 vertices, got {n}")));
        }
        let mut g = Graph::path(n);
        g.set_edge(n - 1, 0, true);
        Ok(g)
    }

    /// `n` disjoint edges `{2i, 2i+1}`.
    pub fn matching(n: usize) -> Graph {
        let mut g = Graph::empty(2 * n);
        for i in 0..n {
            g.set_edge(2 * i, 2 * i + 1, true);
        }
        g
    }

    pub fn generate(family: Family, n: usize) -> Result<Graph> {
        if n == 0 && family != Family::Edgeless {
            return Err(Error::InvalidArgument("family size must be at least 1".into()));
        }
        match family {
            Family::Complete => Ok(Graph::complete(n)),
            Family::Path => Ok(Graph::path(n)),
            Family::Cycle => Graph::cycle(n),
            Family::Matching => Ok(Graph::matching(n)),
            Family::Edgeless => Ok(Graph::empty(n)),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Complete,
    Path,
    Cycle,
    Matching,
    Edgeless,
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "complete" => Ok(Family::Complete),
            "path" => Ok(Family::Path),
            "cycle" => Ok(Family::Cycle),
            "matching" => Ok(Family::Matching),
            "edgeless" => Ok(Family::Edgeless),
            other => Err(Error::InvalidArgument(format!("unknown family `{other}`"))),
        }
    }
}

impl FromStr for Graph {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let lines: Vec<(usize, &str)> = s.lines().enumerate().map(|(i, l)| (i + 1, l)).collect();
        let (g, used) = Graph::parse_lines(&lines)?;
        if let Some((lineno, _)) = lines[used..].iter().find(|(_, l)| !is_skippable(l)) {
            return Err(parse_err(*lineno, "unexpected line after edge list"));
        }
        Ok(g)
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self.edges().map(|(u, v)| format!("{}-{}", u + 1, v + 1)).collect();
        write!(f, "Graph(n={}, [{}])", self.n, edges.join(" "))
    }
}

pub(crate) fn is_skippable(line: &str) -> bool {
    let t = line.trim();
    t.is_empty() || t.starts_with('#')
}

pub(crate) fn parse_num<T: FromStr>(line: usize, tok: Option<&str>) -> Result<T> {
    let tok = tok.ok_or_else(|| parse_err(line, "missing number"))?;
    tok.parse()
        .map_err(|_| parse_err(line, format!("`{tok}` is not a valid number")))
}

pub fn is_clique(g: &Graph, u: &[usize]) -> bool {
    u.iter()
        .enumerate()
        .all(|(i, &a)| u[i + 1..].iter().all(|&b| a != b && g.has_edge(a, b)))
}

pub fn is_independent(g: &Graph, u: &[usize]) -> bool {
    u.iter()
        .enumerate()
        .all(|(i, &a)| u[i + 1..].iter().all(|&b| !g.has_edge(a, b)))
}

pub(crate) fn mask_of(n: usize, vs: &[usize]) -> Vec<u64> {
    let mut m = vec![0u64; words_for(n)];
    for &v in vs {
        m[v / WORD] |= 1 << (v % WORD);
    }
    m
}

pub(crate) fn and(a: &[u64], b: &[u64]) -> Vec<u64> {
    a.iter().zip(b).map(|(x, y)| x & y).collect()
}

pub(crate) fn subset(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x & !y == 0)
}

pub(crate) fn popcount(a: &[u64]) -> u32 {
    a.iter().map(|w| w.count_ones()).sum()
}

// ---- isomorphism ----

/// Cheap isomorphism invariants: order, size, sorted degree sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Invariants {
    n: usize,
    m: usize,
    degrees: Vec<usize>,
}

impl Invariants {
    fn of(g: &Graph) -> Self {
        let mut degrees: Vec<usize> = (0..g.n).map(|v| g.degree(v)).collect();
        degrees.sort_unstable();
        Invariants {
            n: g.n,
            m: degrees.iter().sum::<usize>() / 2,
            degrees,
        }
    }
}

/// Colour refinement run jointly on several graphs so that colour names are
/// comparable between them. Colours are renumbered by sorted signature, which
/// keeps the relative order of existing colours.
fn refine_joint(graphs: &[&Graph], colours: &mut [Vec<usize>]) {
    loop {
        let mut sigs: Vec<Vec<(usize, Vec<usize>)>> = Vec::with_capacity(graphs.len());
        let mut all: BTreeSet<(usize, Vec<usize>)> = BTreeSet::new();
        let before: usize = colours
            .iter()
            .flat_map(|c| c.iter().copied())
            .collect::<BTreeSet<_>>()
            .len();
        for (g, col) in graphs.iter().zip(colours.iter()) {
            let width = col.iter().copied().max().map_or(0, |m| m + 1);
            let s: Vec<(usize, Vec<usize>)> = (0..g.n)
                .map(|v| {
                    let mut counts = vec![0usize; width];
                    for u in g.neighbors(v) {
                        counts[col[u]] += 1;
                    }
                    (col[v], counts)
                })
                .collect();
            all.extend(s.iter().cloned());
            sigs.push(s);
        }
        let index: Vec<(usize, Vec<usize>)> = all.into_iter().collect();
        for (col, s) in colours.iter_mut().zip(&sigs) {
            for (v, sig) in s.iter().enumerate() {
                col[v] = index.binary_search(sig).unwrap();
            }
        }
        if index.len() == before {
            break;
        }
    }
}

fn refine(g: &Graph, col: &mut Vec<usize>) {
    let mut cs = [std::mem::take(col)];
    refine_joint(&[g], &mut cs);
    *col = std::mem::take(&mut cs[0]);
}

/// Gives `v` its own colour placed just before the rest of its cell.
fn individualize(col: &[usize], v: usize) -> Vec<usize> {
    col.iter()
        .enumerate()
        .map(|(u, &c)| if u == v { 2 * c } else { 2 * c + 1 })
        .collect()
}

/// Canonical adjacency code: the minimum, over all leaves of the
/// individualisation-refinement tree, of the upper-triangle adjacency bits
/// read in colour order. Isomorphic graphs get equal codes.
pub fn canonical_form(g: &Graph) -> Vec<u64> {
    let mut col = vec![0; g.n];
    refine(g, &mut col);
    let mut best: Option<Vec<u64>> = None;
    canon_search(g, col, &mut best);
    best.unwrap_or_default()
}

fn canon_search(g: &Graph, col: Vec<usize>, best: &mut Option<Vec<u64>>) {
    let n = g.n;
    let ncols = col.iter().copied().max().map_or(0, |m| m + 1);
    if ncols == n {
        let mut order = vec![0; n];
        for (v, &c) in col.iter().enumerate() {
            order[c] = v;
        }
        let code = adjacency_code(g, &order);
        if best.as_ref().is_none_or(|b| code < *b) {
            *best = Some(code);
        }
        return;
    }
    // First non-singleton cell.
    let mut size = vec![0usize; ncols];
    for &c in &col {
        size[c] += 1;
    }
    let target = (0..ncols).find(|&c| size[c] > 1).unwrap();
    let cell: Vec<usize> = (0..n).filter(|&v| col[v] == target).collect();
    let branch: &[usize] = if all_twins(g, &cell) { &cell[..1] } else { &cell };
    for &v in branch {
        let mut c = individualize(&col, v);
        refine(g, &mut c);
        canon_search(g, c, best);
    }
}

fn all_twins(g: &Graph, cell: &[usize]) -> bool {
    let a = cell[0];
    cell[1..].iter().all(|&b| {
        (0..g.n)
            .filter(|&w| w != a && w != b)
            .all(|w| g.has_edge(a, w) == g.has_edge(b, w))
    })
}

fn adjacency_code(g: &Graph, order: &[usize]) -> Vec<u64> {
    let n = order.len();
    let bits = n * n.saturating_sub(1) / 2;
    let mut code = vec![0u64; bits.div_ceil(64) + 1];
    code[0] = n as u64;
    let mut k = 0;
    for i in 0..n {
        for j in (i + 1)..n {
            // Set bits mean non-edges so that the minimum prefers edges early.
            if !g.has_edge(order[i], order[j]) {
                code[1 + k / 64] |= 1 << (63 - k % 64);
            }
            k += 1;
        }
    }
    code
}

/// Canonically relabelled copy of `g`.
pub fn canonical_graph(g: &Graph) -> Graph {
    let code = canonical_form(g);
    let n = g.n;
    let mut h = Graph::empty(n);
    let mut k = 0;
    for i in 0..n {
        for j in (i + 1)..n {
            if code[1 + k / 64] >> (63 - k % 64) & 1 == 0 {
                h.set_edge(i, j, true);
            }
            k += 1;
        }
    }
    h
}

/// Finds a bijection `f` with `{u,v} ∈ E(g1) ⇔ {f(u),f(v)} ∈ E(g2)`.
pub fn find_isomorphism(g1: &Graph, g2: &Graph) -> Option<Vec<usize>> {
    if Invariants::of(g1) != Invariants::of(g2) {
        return None;
    }
    let n = g1.n;
    let mut cols = [vec![0; n], vec![0; n]];
    refine_joint(&[g1, g2], &mut cols);
    let [c1, c2] = cols;
    let mut h1 = c1.clone();
    h1.sort_unstable();
    let mut h2 = c2.clone();
    h2.sort_unstable();
    if h1 != h2 {
        return None;
    }
    // Map rarest colour classes first, then by vertex.
    let mut freq = std::collections::HashMap::new();
    for &c in &c1 {
        *freq.entry(c).or_insert(0usize) += 1;
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (freq[&c1[v]], c1[v], v));
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if iso_extend(g1, g2, &c1, &c2, &order, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

#[allow(clippy::too_many_arguments)]
fn iso_extend(
    g1: &Graph,
    g2: &Graph,
    c1: &[usize],
    c2: &[usize],
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    for w in 0..g2.n {
        if used[w] || c2[w] != c1[v] {
            continue;
        }
        let ok = order[..depth]
            .iter()
            .all(|&u| g1.has_edge(u, v) == g2.has_edge(map[u], w));
        if !ok {
            continue;
        }
        map[v] = w;
        used[w] = true;
        if iso_extend(g1, g2, c1, c2, order, depth + 1, map, used) {
            return true;
        }
        used[w] = false;
        map[v] = usize::MAX;
    }
    false
}

pub fn is_isomorphic(g1: &Graph, g2: &Graph) -> bool {
    find_isomorphism(g1, g2).is_some()
}

/// All graphs on `n` vertices up to isomorphism, each in canonical labelling,
/// sorted by canonical code. Built by vertex extension from order `n - 1`.
pub fn enumerate_graphs(n: usize) -> Vec<Graph> {
    let mut level: Vec<Graph> = vec![Graph::empty(0)];
    for size in 1..=n {
        let mut seen: BTreeSet<Vec<u64>> = BTreeSet::new();
        for g in &level {
            for mask in 0u64..(1u64 << (size - 1)) {
                let mut h = Graph::empty(size);
                for (u, v) in g.edges() {
                    h.set_edge(u, v, true);
                }
                for u in 0..size - 1 {
                    if mask >> u & 1 == 1 {
                        h.set_edge(u, size - 1, true);
                    }
                }
                seen.insert(canonical_form(&h));
            }
        }
        level = seen.iter().map(|code| decode_code(size, code)).collect();
    }
    level
}

/// All graphs with at most `n` vertices up to isomorphism, by order.
pub fn enumerate_graphs_upto(n: usize) -> Vec<Graph> {
    (0..=n).flat_map(enumerate_graphs).collect()
}

fn decode_code(n: usize, code: &[u64]) -> Graph {
    let mut h = Graph::empty(n);
    let mut k = 0;
    for i in 0..n {
        for j in (i + 1)..n {
            if code[1 + k / 64] >> (63 - k % 64) & 1 == 0 {
                h.set_edge(i, j, true);
            }
            k += 1;
        }
    }
    h
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p4() -> Graph {
        Graph::path(4)
    }

    #[test]
    fn induced_relabels_ascending() {
        let c5 = Graph::cycle(5).unwrap();
        let h = c5.induced_subgraph(&[2, 0, 1]).unwrap();
        assert!(is_isomorphic(&h, &Graph::path(3)));
        assert_eq!(h.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
        assert!(p4().induced_subgraph(&[0, 7]).is_err());
    }

    #[test]
    fn complement_examples() {
        let c4 = Graph::cycle(4).unwrap();
        assert!(is_isomorphic(&Graph::matching(2).complement(), &c4));
        assert_eq!(Graph::complete(3).complement(), Graph::empty(3));
        assert_eq!(p4().complement().complement(), p4());
    }

    #[test]
    fn homogeneity() {
        let g = p4();
        assert!(g.is_homogeneous(&[0, 2]).unwrap());
        assert!(!g.is_homogeneous(&[0, 1, 2]).unwrap());
        assert!(g.is_homogeneous(&[]).unwrap());
    }

    #[test]
    fn chain_pairs() {
        let m = Graph::matching(2);
        assert!(!m.is_chain_pair(&[0, 2], &[1, 3]).unwrap());
        assert!(m.is_chain_pair(&[0, 2], &[]).unwrap());
        assert!(matches!(m.is_chain_pair(&[0, 1], &[1]), Err(Error::Overlap(1))));
    }

    #[test]
    fn induced_containment() {
        assert_eq!(p4().contains_induced(&Graph::path(3)), Some(vec![0, 1, 2]));
        let c5 = Graph::cycle(5).unwrap();
        assert!(c5.contains_induced(&p4()).is_some());
        let c4 = Graph::cycle(4).unwrap();
        assert_eq!(c4.contains_induced(&p4()), None);
    }

    #[test]
    fn isomorphism_basics() {
        let relabelled = p4().relabel(&[2, 0, 3, 1]);
        assert!(is_isomorphic(&p4(), &relabelled));
        assert_eq!(canonical_form(&p4()), canonical_form(&relabelled));
        assert!(!is_isomorphic(&Graph::cycle(4).unwrap(), &Graph::matching(2)));
    }

    #[test]
    fn families() {
        let c4 = Graph::generate(Family::Cycle, 4).unwrap();
        assert_eq!(c4.edge_count(), 4);
        let m3 = Graph::generate(Family::Matching, 3).unwrap();
        assert_eq!((m3.n(), m3.edge_count()), (6, 3));
        assert_eq!(Graph::generate(Family::Path, 1).unwrap(), Graph::empty(1));
        assert!(Graph::generate(Family::Cycle, 2).is_err());
    }

    #[test]
    fn known_graph_counts() {
        let counts: Vec<usize> = (0..=6).map(|n| enumerate_graphs(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 11, 34, 156]);
    }

    #[test]
    fn text_round_trip() {
        let g = Graph::cycle(5).unwrap();
        let back: Graph = g.to_text().parse().unwrap();
        assert_eq!(g, back);
        assert!("graph 2\ne 1 1\n".parse::<Graph>().is_err());
        assert!("graph 2\ne 1 3\n".parse::<Graph>().is_err());
    }
}
