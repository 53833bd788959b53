//! Chain partitions and their ordered refinements, the parameters γ, σ and
//! λ, linked chain graphs, and monochromatic AP-grid search.
//!
//! A bag's order is increasing toward another bag when neighbourhoods in that
//! bag grow along the order (sign `+`) and decreasing when they shrink (`-`).

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::budget::{Budget, Exhausted};
use crate::digraph::Digraph;
use crate::error::{parse_err, Error, Result};
use crate::graph::{is_skippable, parse_num, Graph};
use crate::letters::LetterRepresentation;
use crate::perm::Permutation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Level {
    Chain,
    Semi,
    Proper,
}

impl FromStr for Level {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "chain" => Ok(Level::Chain),
            "semi" => Ok(Level::Semi),
            "proper" => Ok(Level::Proper),
            _ => Err(Error::InvalidArgument(format!("unknown level `{s}`"))),
        }
    }
}

/// Ordered bags covering the vertices, with optional signs: `signs[(a, b)]`
/// is the orientation of bag `a`'s order toward bag `b`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionCertificate {
    pub names: Vec<String>,
    pub bags: Vec<Vec<usize>>,
    #[serde(with = "sign_list")]
    pub signs: BTreeMap<(usize, usize), Sign>,
}

mod sign_list {
    use super::Sign;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};
    use std::collections::BTreeMap;

    pub fn serialize<S: Serializer>(m: &BTreeMap<(usize, usize), Sign>, s: S) -> Result<S::Ok, S::Error> {
        m.iter().map(|(&(a, b), &v)| (a, b, v)).collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BTreeMap<(usize, usize), Sign>, D::Error> {
        let v: Vec<(usize, usize, Sign)> = Vec::deserialize(d)?;
        Ok(v.into_iter().map(|(a, b, s)| ((a, b), s)).collect())
    }
}

impl PartitionCertificate {
    /// Bags named `1..t`, no signs.
    pub fn new(bags: Vec<Vec<usize>>) -> Self {
        PartitionCertificate {
            names: (1..=bags.len()).map(|i| i.to_string()).collect(),
            bags,
            signs: BTreeMap::new(),
        }
    }

    pub fn with_signs(mut self, signs: impl IntoIterator<Item = ((usize, usize), Sign)>) -> Self {
        self.signs.extend(signs);
        self
    }

    /// Same bags with the given bags' orders reversed and signs dropped.
    pub fn reversed(&self, which: &[usize]) -> Self {
        let mut c = PartitionCertificate::new(self.bags.clone());
        c.names = self.names.clone();
        for &i in which {
            c.bags[i].reverse();
        }
        c
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for (name, b) in self.names.iter().zip(&self.bags) {
            s.push_str(&format!("bag {name} :"));
            for v in b {
                s.push_str(&format!(" {}", v + 1));
            }
            s.push('\n');
        }
        for (&(a, b), sign) in &self.signs {
            s.push_str(&format!("sign {} {} {}\n", self.names[a], self.names[b], sign.symbol()));
        }
        s
    }

    /// Parses certificate lines for a graph on `n` vertices.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let lines: Vec<(usize, &str)> = text.lines().enumerate().map(|(i, l)| (i + 1, l)).collect();
        Self::parse_lines(&lines, n)
    }

    pub(crate) fn parse_lines(lines: &[(usize, &str)], n: usize) -> Result<Self> {
        let bags = crate::circuit::parse_bag_lines(lines, n)?;
        let mut cert = PartitionCertificate {
            names: bags.iter().map(|b| b.1.to_string()).collect(),
            bags: bags.into_iter().map(|b| b.2).collect(),
            signs: BTreeMap::new(),
        };
        for &(lineno, line) in lines {
            if is_skippable(line) || !line.trim_start().starts_with("sign") {
                continue;
            }
            let toks: Vec<&str> = line.split_whitespace().collect();
            if toks.len() != 4 {
                return Err(parse_err(lineno, "expected `sign <bagA> <bagB> <+|->`"));
            }
            let find = |name: &str| {
                cert.names
                    .iter()
                    .position(|x| x == name)
                    .ok_or_else(|| parse_err(lineno, format!("unknown bag `{name}`")))
            };
            let (a, b) = (find(toks[1])?, find(toks[2])?);
            let sign = match toks[3] {
                "+" => Sign::Plus,
                "-" => Sign::Minus,
                t => return Err(parse_err(lineno, format!("sign must be + or -, got `{t}`"))),
            };
            cert.signs.insert((a, b), sign);
        }
        Ok(cert)
    }

    /// Letter classes in word order. A pair of letters with the single arc
    /// `(x, y)` is decreasing on `x`'s side and increasing on `y`'s.
    pub fn from_letters(rep: &LetterRepresentation, n: usize) -> Result<Self> {
        let letters = rep.decoder.resolve(&rep.word)?;
        let m = rep.decoder.len();
        let mut bags: Vec<Vec<usize>> = vec![Vec::new(); m];
        for (p, &l) in letters.iter().enumerate() {
            bags[l].push(rep.order[p]);
        }
        if bags.iter().map(Vec::len).sum::<usize>() != n {
            return Err(Error::Coverage("representation does not cover the graph".into()));
        }
        let used: Vec<usize> = (0..m).filter(|&l| !bags[l].is_empty()).collect();
        let mut signs = BTreeMap::new();
        for (ai, &x) in used.iter().enumerate() {
            for (bi, &y) in used.iter().enumerate() {
                if ai < bi {
                    let (s_xy, s_yx) = match (rep.decoder.has_arc(x, y), rep.decoder.has_arc(y, x)) {
                        (true, false) => (Sign::Minus, Sign::Plus),
                        (false, true) => (Sign::Plus, Sign::Minus),
                        _ => (Sign::Plus, Sign::Minus),
                    };
                    signs.insert((ai, bi), s_xy);
                    signs.insert((bi, ai), s_yx);
                }
            }
        }
        Ok(PartitionCertificate {
            names: used.iter().map(|&l| rep.decoder.letters()[l].clone()).collect(),
            bags: used.iter().map(|&l| bags[l].clone()).collect(),
            signs,
        })
    }
}

impl fmt::Display for PartitionCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// The first reason a certificate fails a level.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Failure {
    NotHomogeneous(usize),
    NotChain(usize, usize),
    /// Bag `.0`'s order is not monotone (in the stated sign, if any) toward bag `.1`.
    NotMonotone(usize, usize),
    /// No choice of allowed signs gives the pair exactly one increasing side.
    NotProper(usize, usize),
}

fn check_coverage(n: usize, bags: &[Vec<usize>]) -> Result<()> {
    let mut seen = vec![false; n];
    for &v in bags.iter().flatten() {
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        if std::mem::replace(&mut seen[v], true) {
            return Err(Error::Coverage(format!("vertex {} in two bags", v + 1)));
        }
    }
    if let Some(v) = seen.iter().position(|&s| !s) {
        return Err(Error::Coverage(format!("vertex {} in no bag", v + 1)));
    }
    Ok(())
}

/// Signs under which `order` is monotone toward `other`.
fn allowed_signs(g: &Graph, order: &[usize], other: &[usize]) -> (bool, bool) {
    let sizes: Vec<usize> = order
        .iter()
        .map(|&v| other.iter().filter(|&&w| g.has_edge(v, w)).count())
        .collect();
    let inc = sizes.windows(2).all(|w| w[0] <= w[1]);
    let dec = sizes.windows(2).all(|w| w[0] >= w[1]);
    (inc, dec)
}

fn has_cross_edges(g: &Graph, a: &[usize], b: &[usize]) -> bool {
    a.iter().any(|&u| b.iter().any(|&w| g.has_edge(u, w)))
}

pub fn partition_failure(g: &Graph, cert: &PartitionCertificate, level: Level) -> Result<Option<Failure>> {
    check_coverage(g.n(), &cert.bags)?;
    let t = cert.bags.len();
    for (i, b) in cert.bags.iter().enumerate() {
        if !g.is_homogeneous(b)? {
            return Ok(Some(Failure::NotHomogeneous(i)));
        }
    }
    for i in 0..t {
        for j in i + 1..t {
            if !g.is_chain_pair(&cert.bags[i], &cert.bags[j])? {
                return Ok(Some(Failure::NotChain(i, j)));
            }
        }
    }
    if level == Level::Chain {
        return Ok(None);
    }
    // allowed[(a, b)] = (may be +, may be -)
    let mut allowed = BTreeMap::new();
    for a in 0..t {
        for b in 0..t {
            if a == b {
                continue;
            }
            let (mut inc, mut dec) = allowed_signs(g, &cert.bags[a], &cert.bags[b]);
            match cert.signs.get(&(a, b)) {
                Some(Sign::Plus) => dec = false,
                Some(Sign::Minus) => inc = false,
                None => {}
            }
            if !inc && !dec {
                return Ok(Some(Failure::NotMonotone(a, b)));
            }
            allowed.insert((a, b), (inc, dec));
        }
    }
    if level == Level::Semi {
        return Ok(None);
    }
    for a in 0..t {
        for b in a + 1..t {
            if !has_cross_edges(g, &cert.bags[a], &cert.bags[b]) {
                continue;
            }
            let (ai, ad) = allowed[&(a, b)];
            let (bi, bd) = allowed[&(b, a)];
            if !((ai && bd) || (ad && bi)) {
                return Ok(Some(Failure::NotProper(a, b)));
            }
        }
    }
    Ok(None)
}

pub fn check_partition(g: &Graph, cert: &PartitionCertificate, level: Level) -> Result<bool> {
    Ok(partition_failure(g, cert, level)?.is_none())
}

/// Outcome of an exact parameter computation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParameterValue {
    pub value: usize,
    pub certificate: PartitionCertificate,
}

pub fn gamma(g: &Graph, budget: &mut Budget) -> Result<ParameterValue, Exhausted> {
    solve(g, Level::Chain, budget)
}

pub fn sigma(g: &Graph, budget: &mut Budget) -> Result<ParameterValue, Exhausted> {
    solve(g, Level::Semi, budget)
}

pub fn lambda(g: &Graph, budget: &mut Budget) -> Result<ParameterValue, Exhausted> {
    solve(g, Level::Proper, budget)
}

/// Adjacency masks, graphs up to 64 vertices.
struct Masks(Vec<u64>);

impl Masks {
    fn new(g: &Graph) -> Self {
        assert!(g.n() <= 64, "partition solvers handle at most 64 vertices");
        Masks((0..g.n()).map(|v| g.neighbors(v).fold(0u64, |m, w| m | 1 << w)).collect())
    }
}

struct Search<'a> {
    adj: &'a Masks,
    n: usize,
    level: Level,
    t: usize,
    bag_of: Vec<usize>,
    members: Vec<u64>,
    /// 0 unknown, 1 clique, 2 independent
    kind: Vec<u8>,
}

impl Search<'_> {
    fn fits(&self, v: usize, b: usize) -> bool {
        let adj = &self.adj.0;
        let bag = self.members[b];
        if bag != 0 {
            let nb = adj[v] & bag;
            match self.kind[b] {
                1 if nb != bag => return false,
                2 if nb != 0 => return false,
                0 if nb != 0 && nb != bag => return false,
                _ => {}
            }
        }
        for (c, &other) in self.members.iter().enumerate() {
            if c == b || other == 0 {
                continue;
            }
            let nv = adj[v] & other;
            let mut rest = bag;
            while rest != 0 {
                let u = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                let nu = adj[u] & other;
                if nv & nu != nv && nv & nu != nu {
                    return false;
                }
            }
        }
        true
    }

    fn place(&mut self, v: usize, b: usize) -> u8 {
        let old = self.kind[b];
        if self.members[b] != 0 && old == 0 {
            self.kind[b] = if self.adj.0[v] & self.members[b] != 0 { 1 } else { 2 };
        }
        self.members[b] |= 1 << v;
        self.bag_of[v] = b;
        old
    }

    fn unplace(&mut self, v: usize, b: usize, old: u8) {
        self.members[b] &= !(1 << v);
        self.kind[b] = old;
        self.bag_of[v] = usize::MAX;
    }

    fn rec(&mut self, v: usize, used: usize, budget: &mut Budget) -> Result<Option<PartitionCertificate>, Exhausted> {
        budget.tick()?;
        if v == self.n {
            let bags: Vec<Vec<usize>> = self.members[..used].iter().map(|&m| bits(m)).collect();
            return Ok(orient(self.adj, &bags, self.level));
        }
        for b in 0..(used + 1).min(self.t) {
            if !self.fits(v, b) {
                continue;
            }
            let old = self.place(v, b);
            let r = self.rec(v + 1, used.max(b + 1), budget)?;
            self.unplace(v, b, old);
            if r.is_some() {
                return Ok(r);
            }
        }
        Ok(None)
    }
}

fn bits(mut m: u64) -> Vec<usize> {
    let mut out = Vec::new();
    while m != 0 {
        out.push(m.trailing_zeros() as usize);
        m &= m - 1;
    }
    out
}

/// Restricted-growth enumeration of set partitions into at most `t` bags,
/// for `t` increasing from 1; the first success is optimal.
fn solve(g: &Graph, level: Level, budget: &mut Budget) -> Result<ParameterValue, Exhausted> {
    let n = g.n();
    if n == 0 {
        return Ok(ParameterValue {
            value: 0,
            certificate: PartitionCertificate::new(Vec::new()),
        });
    }
    let adj = Masks::new(g);
    for t in 1..=n {
        let mut s = Search {
            adj: &adj,
            n,
            level,
            t,
            bag_of: vec![usize::MAX; n],
            members: vec![0; t],
            kind: vec![0; t],
        };
        let found = s.rec(0, 0, budget).map_err(|e| e.with_interval(t, n))?;
        if let Some(certificate) = found {
            return Ok(ParameterValue { value: t, certificate });
        }
    }
    unreachable!("singleton bags always pass every level")
}

/// Finds bag orders and signs for a fixed chain partition, or `None`.
fn orient(adj: &Masks, bags: &[Vec<usize>], level: Level) -> Option<PartitionCertificate> {
    let t = bags.len();
    let masks: Vec<u64> = bags.iter().map(|b| b.iter().fold(0u64, |m, &v| m | 1 << v)).collect();
    let cert = PartitionCertificate::new(bags.to_vec());
    if level == Level::Chain {
        return Some(cert);
    }
    // key[a][b][i]: neighbourhood size in bag b of the i-th member of bag a.
    let key = |a: usize, b: usize| -> Vec<u32> { bags[a].iter().map(|&v| (adj.0[v] & masks[b]).count_ones()).collect() };
    let nontrivial = |a: usize, b: usize| {
        let k = key(a, b);
        k.iter().any(|&x| x != k[0])
    };
    // For each bag, its constraining neighbours and feasible sign vectors.
    let mut options: Vec<(Vec<usize>, Vec<Vec<Sign>>)> = Vec::with_capacity(t);
    for a in 0..t {
        let nbrs: Vec<usize> = (0..t).filter(|&b| b != a && nontrivial(a, b)).collect();
        let keys: Vec<Vec<u32>> = nbrs.iter().map(|&b| key(a, b)).collect();
        let mut feasible = Vec::new();
        for mask in 0..(1u32 << nbrs.len()) {
            let signs: Vec<Sign> = (0..nbrs.len())
                .map(|i| if mask >> i & 1 == 0 { Sign::Plus } else { Sign::Minus })
                .collect();
            if order_for(bags[a].len(), &keys, &signs).is_some() {
                feasible.push(signs);
            }
        }
        if feasible.is_empty() {
            return None;
        }
        options.push((nbrs, feasible));
    }
    let choice = match level {
        Level::Semi => options.iter().map(|_| 0).collect(),
        _ => {
            let mut choice = Vec::with_capacity(t);
            if !pick_proper(&options, &mut choice) {
                return None;
            }
            choice
        }
    };
    let mut out = cert;
    let mut signs = BTreeMap::new();
    for a in 0..t {
        let (nbrs, feasible) = &options[a];
        let chosen = &feasible[choice[a]];
        let keys: Vec<Vec<u32>> = nbrs.iter().map(|&b| key(a, b)).collect();
        let perm = order_for(bags[a].len(), &keys, chosen).expect("feasible");
        out.bags[a] = perm.iter().map(|&i| bags[a][i]).collect();
        for (i, &b) in nbrs.iter().enumerate() {
            signs.insert((a, b), chosen[i]);
        }
    }
    // Unconstrained sides take whatever makes each pair proper.
    for a in 0..t {
        for b in 0..t {
            if a != b && !signs.contains_key(&(a, b)) {
                let s = signs.get(&(b, a)).map_or(Sign::Plus, |s: &Sign| s.flip());
                signs.insert((a, b), s);
            }
        }
    }
    out.signs = signs;
    Some(out)
}

fn pick_proper(options: &[(Vec<usize>, Vec<Vec<Sign>>)], choice: &mut Vec<usize>) -> bool {
    let a = choice.len();
    if a == options.len() {
        return true;
    }
    let (nbrs, feasible) = &options[a];
    for (ci, signs) in feasible.iter().enumerate() {
        let ok = nbrs.iter().enumerate().all(|(i, &b)| {
            if b >= a {
                return true;
            }
            let (bn, bf) = &options[b];
            match bn.iter().position(|&x| x == a) {
                Some(j) => bf[choice[b]][j] != signs[i],
                None => true,
            }
        });
        if ok {
            choice.push(ci);
            if pick_proper(options, choice) {
                return true;
            }
            choice.pop();
        }
    }
    false
}

/// A permutation of bag members respecting every signed key, if one exists.
fn order_for(m: usize, keys: &[Vec<u32>], signs: &[Sign]) -> Option<Vec<usize>> {
    let mut d = Digraph::new(m);
    for (k, &s) in keys.iter().zip(signs) {
        for i in 0..m {
            for j in 0..m {
                let before = match s {
                    Sign::Plus => k[i] < k[j],
                    Sign::Minus => k[i] > k[j],
                };
                if before {
                    d.add_arc(i, j);
                }
            }
        }
    }
    d.topological_sort().ok()
}

/// Whether some per-bag orders make the given (unordered) bags pass `level`.
pub fn orderable(g: &Graph, bags: &[Vec<usize>], level: Level) -> Option<PartitionCertificate> {
    let adj = Masks::new(g);
    let cert = PartitionCertificate::new(bags.to_vec());
    if check_partition(g, &cert, Level::Chain).ok()? {
        orient(&adj, bags, level)
    } else {
        None
    }
}

/// Three independent parts `x_1..x_n`, `y_1..y_n`, `z_1..z_n` (vertices
/// `0..n`, `n..2n`, `2n..3n`) with `x_i ~ y_j` iff `i <= j` and `y_j ~ z_m`
/// iff `m >= pi^{-1}(j)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinkedChainGraph {
    pub n: usize,
    pub graph: Graph,
    pub pi: Permutation,
}

impl LinkedChainGraph {
    pub fn a(&self) -> Vec<usize> {
        (0..self.n).collect()
    }

    pub fn b(&self) -> Vec<usize> {
        (self.n..2 * self.n).collect()
    }

    pub fn c(&self) -> Vec<usize> {
        (2 * self.n..3 * self.n).collect()
    }

    /// The three parts in label order, named A, B, C.
    pub fn canonical_certificate(&self) -> PartitionCertificate {
        let mut c = PartitionCertificate::new(vec![self.a(), self.b(), self.c()]);
        c.names = vec!["A".into(), "B".into(), "C".into()];
        c
    }

    pub fn vertex_name(&self, v: usize) -> String {
        let (part, i) = (v / self.n, v % self.n + 1);
        format!("{}{i}", ["x", "y", "z"][part])
    }
}

pub fn linked_chain(pi: &Permutation) -> LinkedChainGraph {
    let n = pi.len();
    let inv = pi.inverse();
    let mut g = Graph::empty(3 * n);
    for j in 0..n {
        for i in 0..=j {
            g.set_edge(i, n + j, true);
        }
        for m in inv.at(j) - 1..n {
            g.set_edge(n + j, 2 * n + m, true);
        }
    }
    LinkedChainGraph { n, graph: g, pi: pi.clone() }
}

/// Whether the parts `A, B, C` admit orders making them semi-consistent.
pub fn check_canonical_semi(lcg: &LinkedChainGraph) -> bool {
    orderable(&lcg.graph, &lcg.canonical_certificate().bags, Level::Semi).is_some()
}

pub fn pattern_monotone_containment(pi: &Permutation, sub: &LinkedChainGraph) -> bool {
    pi.contains(&sub.pi)
}

/// A square colouring of `[N] x [N]`; `cells[i][j]` colours `(i+1, j+1)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Colouring {
    pub cells: Vec<Vec<String>>,
}

impl Colouring {
    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> String) -> Self {
        Colouring {
            cells: (1..=n).map(|i| (1..=n).map(|j| f(i, j)).collect()).collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.cells.len()
    }

    /// Parses the `N k` header and `N` rows; returns the colouring and `k`.
    pub fn parse(text: &str) -> Result<(Colouring, usize)> {
        let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l)).filter(|(_, l)| !is_skippable(l));
        let (lineno, header) = lines.next().ok_or_else(|| parse_err(1, "missing `N k` header"))?;
        let mut h = header.split_whitespace();
        let n: usize = parse_num(lineno, h.next())?;
        let k: usize = parse_num(lineno, h.next())?;
        let mut cells = Vec::with_capacity(n);
        for (lineno, line) in lines {
            let row: Vec<String> = line.split_whitespace().map(String::from).collect();
            if row.len() != n {
                return Err(parse_err(lineno, format!("expected {n} colours, got {}", row.len())));
            }
            cells.push(row);
        }
        if cells.len() != n {
            return Err(parse_err(lineno, format!("expected {n} rows, got {}", cells.len())));
        }
        Ok((Colouring { cells }, k))
    }
}

/// `start, start + diff, ..` with `len` terms, values in `1..=N`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Progression {
    pub start: usize,
    pub diff: usize,
    pub len: usize,
}

impl Progression {
    pub fn terms(&self) -> Vec<usize> {
        (0..self.len).map(|i| self.start + i * self.diff).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ApGridWitness {
    pub x: Progression,
    pub y: Progression,
    pub colour: String,
}

/// Progressions of length exactly `k` in order of (start, difference); any
/// longer monochromatic progression contains one of these.
fn progressions(n: usize, k: usize) -> Vec<Progression> {
    let mut out = Vec::new();
    for start in 1..=n {
        if k <= 1 {
            out.push(Progression { start, diff: 1, len: k });
            continue;
        }
        let mut diff = 1;
        while start + (k - 1) * diff <= n {
            out.push(Progression { start, diff, len: k });
            diff += 1;
        }
    }
    out
}

pub fn ap_grid_search(colouring: &Colouring, k: usize) -> Option<ApGridWitness> {
    let n = colouring.size();
    if k == 0 || n == 0 {
        return None;
    }
    let aps = progressions(n, k);
    for x in &aps {
        for y in &aps {
            let xs = x.terms();
            let ys = y.terms();
            let colour = &colouring.cells[xs[0] - 1][ys[0] - 1];
            if xs.iter().all(|&i| ys.iter().all(|&j| &colouring.cells[i - 1][j - 1] == colour)) {
                return Some(ApGridWitness {
                    x: *x,
                    y: *y,
                    colour: colour.clone(),
                });
            }
        }
    }
    None
}
