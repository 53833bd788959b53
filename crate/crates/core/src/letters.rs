//! Letter graphs: decoders, words, decoding, recognition and lettericity.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::budget::{Budget, Exhausted};
use crate::error::{parse_err, Error, Result};
use crate::graph::{self, canonical_form, is_skippable, Graph};

/// Letter name for index `i`: `a`..`z`, then `x26`, `x27`, ...
pub fn letter_name(i: usize) -> String {
    if i < 26 {
        ((b'a' + i as u8) as char).to_string()
    } else {
        format!("x{i}")
    }
}

/// A decoding digraph: an ordered alphabet and a set of arcs (loops allowed).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "DecoderRepr", try_from = "DecoderRepr")]
pub struct Decoder {
    letters: Vec<String>,
    index: HashMap<String, usize>,
    arcs: BTreeSet<(usize, usize)>,
}

#[derive(Serialize, Deserialize)]
struct DecoderRepr {
    letters: Vec<String>,
    arcs: Vec<(String, String)>,
}

impl From<Decoder> for DecoderRepr {
    fn from(d: Decoder) -> Self {
        DecoderRepr {
            arcs: d
                .arcs
                .iter()
                .map(|&(a, b)| (d.letters[a].clone(), d.letters[b].clone()))
                .collect(),
            letters: d.letters,
        }
    }
}

impl TryFrom<DecoderRepr> for Decoder {
    type Error = Error;
    fn try_from(r: DecoderRepr) -> Result<Self> {
        let arcs: Vec<(&str, &str)> = r.arcs.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
        Decoder::new(r.letters, &arcs)
    }
}

impl Decoder {
    pub fn new<S: Into<String>>(letters: impl IntoIterator<Item = S>, arcs: &[(&str, &str)]) -> Result<Self> {
        let mut d = Decoder::with_letters(letters)?;
        for &(a, b) in arcs {
            let (i, j) = (d.lookup(a)?, d.lookup(b)?);
            if !d.arcs.insert((i, j)) {
                return Err(Error::InvalidArgument(format!("duplicate arc ({a}, {b})")));
            }
        }
        Ok(d)
    }

    /// Decoder with no arcs.
    pub fn with_letters<S: Into<String>>(letters: impl IntoIterator<Item = S>) -> Result<Self> {
        let letters: Vec<String> = letters.into_iter().map(Into::into).collect();
        let mut index = HashMap::new();
        for (i, l) in letters.iter().enumerate() {
            if l.is_empty() || l.chars().any(char::is_whitespace) {
                return Err(Error::InvalidArgument(format!("bad letter `{l}`")));
            }
            if index.insert(l.clone(), i).is_some() {
                return Err(Error::DuplicateLetter(l.clone()));
            }
        }
        Ok(Decoder {
            letters,
            index,
            arcs: BTreeSet::new(),
        })
    }

    /// Decoder on letters `a, b, ...` with arcs given by index.
    pub fn from_indices(k: usize, arcs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut d = Decoder::with_letters((0..k).map(letter_name)).expect("generated names are distinct");
        for (i, j) in arcs {
            assert!(i < k && j < k);
            d.arcs.insert((i, j));
        }
        d
    }

    pub fn letters(&self) -> &[String] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn lookup(&self, tok: &str) -> Result<usize> {
        self.index
            .get(tok)
            .copied()
            .ok_or_else(|| Error::UnknownSymbol(tok.to_string()))
    }

    #[inline]
    pub fn has_arc(&self, i: usize, j: usize) -> bool {
        self.arcs.contains(&(i, j))
    }

    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.arcs.iter().copied()
    }

    pub fn add_arc(&mut self, i: usize, j: usize) {
        self.arcs.insert((i, j));
    }

    pub fn remove_arc(&mut self, i: usize, j: usize) {
        self.arcs.remove(&(i, j));
    }

    /// Resolves a word into letter indices.
    pub fn resolve(&self, w: &Word) -> Result<Vec<usize>> {
        w.0.iter().map(|t| self.lookup(t)).collect()
    }

    pub fn word_from_indices(&self, idx: &[usize]) -> Word {
        Word(idx.iter().map(|&i| self.letters[i].clone()).collect())
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("letters {}\n", self.letters.join(" "));
        for &(a, b) in &self.arcs {
            s.push_str(&format!("arc {} {}\n", self.letters[a], self.letters[b]));
        }
        s
    }
}

impl FromStr for Decoder {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let mut d: Option<Decoder> = None;
        for (i, line) in s.lines().enumerate() {
            let lineno = i + 1;
            if is_skippable(line) {
                continue;
            }
            let toks: Vec<&str> = line.split_whitespace().collect();
            match (toks[0], &mut d) {
                ("letters", None) => {
                    d = Some(Decoder::with_letters(toks[1..].iter().copied()).map_err(|e| parse_err(lineno, e.to_string()))?);
                }
                ("letters", Some(_)) => return Err(parse_err(lineno, "repeated `letters` line")),
                ("arc", Some(dec)) => {
                    if toks.len() != 3 {
                        return Err(parse_err(lineno, "expected `arc <tok> <tok>`"));
                    }
                    let i = dec.lookup(toks[1]).map_err(|e| parse_err(lineno, e.to_string()))?;
                    let j = dec.lookup(toks[2]).map_err(|e| parse_err(lineno, e.to_string()))?;
                    if !dec.arcs.insert((i, j)) {
                        return Err(parse_err(lineno, "duplicate arc"));
                    }
                }
                ("arc", None) => return Err(parse_err(lineno, "`arc` before `letters`")),
                (other, _) => return Err(parse_err(lineno, format!("unknown directive `{other}`"))),
            }
        }
        d.ok_or_else(|| parse_err(1, "missing `letters` line"))
    }
}

impl fmt::Display for Decoder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// A finite sequence of letter tokens.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word(pub Vec<String>);

impl Word {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl FromStr for Word {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(Word(s.split_whitespace().map(String::from).collect()))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.join(" "))
    }
}

/// Decodes a word: positions `i < j` are adjacent iff `(w_i, w_j)` is an arc.
pub fn decode(d: &Decoder, w: &Word) -> Result<Graph> {
    Ok(decode_indices(d, &d.resolve(w)?))
}

pub fn decode_indices(d: &Decoder, w: &[usize]) -> Graph {
    let mut g = Graph::empty(w.len());
    for i in 0..w.len() {
        for j in (i + 1)..w.len() {
            if d.has_arc(w[i], w[j]) {
                g.set_edge(i, j, true);
            }
        }
    }
    g
}

/// A letter for every vertex plus a linear order of the vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LetterCertificate {
    /// `assignment[v]` is the letter of vertex `v`.
    pub assignment: Vec<String>,
    /// Vertices in word order.
    pub order: Vec<usize>,
}

impl LetterCertificate {
    pub fn word(&self) -> Word {
        Word(self.order.iter().map(|&v| self.assignment[v].clone()).collect())
    }
}

/// True iff decoding the certificate's word reproduces `g` on the same labels.
pub fn verify_certificate(g: &Graph, c: &LetterCertificate, d: &Decoder) -> Result<bool> {
    let n = g.n();
    if c.assignment.len() != n || c.order.len() != n {
        return Err(Error::Coverage(format!(
            "graph has {n} vertices, assignment {} and order {}",
            c.assignment.len(),
            c.order.len()
        )));
    }
    let mut seen = vec![false; n];
    for &v in &c.order {
        if v >= n || std::mem::replace(&mut seen[v], true) {
            return Err(Error::Coverage(format!("order is not a permutation (vertex {})", v + 1)));
        }
    }
    let letter: Vec<usize> = c
        .assignment
        .iter()
        .map(|t| d.lookup(t))
        .collect::<Result<_>>()?;
    for (p, &u) in c.order.iter().enumerate() {
        for &v in &c.order[p + 1..] {
            if g.has_edge(u, v) != d.has_arc(letter[u], letter[v]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Lexicographically least word (letters compared by decoder position) that
/// decodes to a graph isomorphic to `g`.
pub fn recognize(d: &Decoder, g: &Graph, budget: &mut Budget) -> Result<Option<Word>> {
    Ok(recognize_with_order(d, g, budget)?.map(|(w, _)| w))
}

/// As [`recognize`], also returning the vertex placed at each word position.
pub fn recognize_with_order(d: &Decoder, g: &Graph, budget: &mut Budget) -> Result<Option<(Word, Vec<usize>)>> {
    let n = g.n();
    let k = d.len();
    if n > 64 || k > 64 {
        return Err(Error::InvalidArgument("recognition supports at most 64 vertices and 64 letters".into()));
    }
    if n == 0 {
        return Ok(Some((Word::default(), Vec::new())));
    }
    let r = Recognizer::new(d, g);
    let start = RState {
        unplaced: full(n),
        allowed: vec![full(k); n],
    };
    let mut memo: HashMap<RState, bool> = HashMap::new();
    if !r.feasible(&start, &mut memo, budget)? {
        return Ok(None);
    }
    // Layered construction of the least word: keep every feasible state
    // reachable by the current prefix, extend by the least letter possible.
    let mut frontier: Vec<(RState, Vec<usize>)> = vec![(start, Vec::new())];
    let mut word = Vec::with_capacity(n);
    for _ in 0..n {
        let mut chosen = None;
        'letters: for a in 0..k {
            for (s, _) in &frontier {
                for u in bits(s.unplaced) {
                    if s.allowed[u] >> a & 1 == 1 {
                        if let Some(t) = r.place(s, u, a) {
                            if r.feasible(&t, &mut memo, budget)? {
                                chosen = Some(a);
                                break 'letters;
                            }
                        }
                    }
                }
            }
        }
        let a = chosen.ok_or_else(|| Error::Invariant("feasible state without extension".into()))?;
        let mut next: Vec<(RState, Vec<usize>)> = Vec::new();
        let mut seen: HashSet<RState> = HashSet::new();
        for (s, order) in &frontier {
            for u in bits(s.unplaced) {
                if s.allowed[u] >> a & 1 == 1 {
                    if let Some(t) = r.place(s, u, a) {
                        if r.feasible(&t, &mut memo, budget)? && seen.insert(t.clone()) {
                            let mut o = order.clone();
                            o.push(u);
                            next.push((t, o));
                        }
                    }
                }
            }
        }
        word.push(a);
        frontier = next;
    }
    let order = frontier.swap_remove(0).1;
    Ok(Some((d.word_from_indices(&word), order)))
}

fn full(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let b = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(b)
        }
    })
}

#[derive(Clone, PartialEq, Eq, Hash)]
struct RState {
    unplaced: u64,
    allowed: Vec<u64>,
}

struct Recognizer {
    adj: Vec<u64>,
    /// `to[a][e]`: letters `b` with `arc(a, b) == e`.
    to: Vec<[u64; 2]>,
}

impl Recognizer {
    fn new(d: &Decoder, g: &Graph) -> Self {
        let k = d.len();
        let adj = (0..g.n()).map(|v| g.neighbors(v).fold(0u64, |m, u| m | 1 << u)).collect();
        let to = (0..k)
            .map(|a| {
                let mut t = [0u64; 2];
                for b in 0..k {
                    t[d.has_arc(a, b) as usize] |= 1 << b;
                }
                t
            })
            .collect();
        Recognizer { adj, to }
    }

    fn place(&self, s: &RState, u: usize, a: usize) -> Option<RState> {
        let unplaced = s.unplaced & !(1 << u);
        let mut allowed = s.allowed.clone();
        for w in bits(unplaced) {
            let e = (self.adj[u] >> w & 1) as usize;
            allowed[w] &= self.to[a][e];
            if allowed[w] == 0 {
                return None;
            }
        }
        for v in bits(!unplaced & full(allowed.len())) {
            allowed[v] = 0;
        }
        Some(RState { unplaced, allowed })
    }

    fn feasible(&self, s: &RState, memo: &mut HashMap<RState, bool>, budget: &mut Budget) -> Result<bool, Exhausted> {
        if s.unplaced == 0 {
            return Ok(true);
        }
        if let Some(&r) = memo.get(s) {
            return Ok(r);
        }
        budget.tick()?;
        let mut ok = false;
        'outer: for u in bits(s.unplaced) {
            for a in bits(s.allowed[u]) {
                if let Some(t) = self.place(s, u, a) {
                    if self.feasible(&t, memo, budget)? {
                        ok = true;
                        break 'outer;
                    }
                }
            }
        }
        memo.insert(s.clone(), ok);
        Ok(ok)
    }
}

/// An explicit representation: decoding `word` gives the graph whose vertex
/// `order[p]` sits at word position `p`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LetterRepresentation {
    pub decoder: Decoder,
    pub word: Word,
    pub order: Vec<usize>,
}

impl LetterRepresentation {
    pub fn certificate(&self, n: usize) -> LetterCertificate {
        let mut assignment = vec![String::new(); n];
        for (p, &v) in self.order.iter().enumerate() {
            assignment[v] = self.word.0[p].clone();
        }
        LetterCertificate {
            assignment,
            order: self.order.clone(),
        }
    }

    /// Checks the representation against `g` label for label.
    pub fn verify(&self, g: &Graph) -> Result<bool> {
        verify_certificate(g, &self.certificate(g.n()), &self.decoder)
    }
}

/// The representation using one letter per vertex (always exists).
pub fn trivial_representation(g: &Graph) -> LetterRepresentation {
    let n = g.n();
    let decoder = Decoder::from_indices(n, g.edges());
    let order: Vec<usize> = (0..n).collect();
    LetterRepresentation {
        word: decoder.word_from_indices(&order),
        decoder,
        order,
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Lettericity {
    pub value: usize,
    /// The exact co-chromatic number, used as the starting lower bound.
    pub cochromatic: usize,
    pub witness: LetterRepresentation,
}

/// Exact lettericity by iterative deepening from the co-chromatic number.
pub fn lettericity(g: &Graph, budget: &mut Budget) -> Result<Lettericity> {
    let n = g.n();
    if n > 64 {
        return Err(Error::InvalidArgument("lettericity supports at most 64 vertices".into()));
    }
    let (cochromatic, _) = cochromatic_number(g, budget).map_err(|e| e.with_interval(1.min(n), n))?;
    for k in cochromatic..n {
        match represent_with(g, k, budget) {
            Ok(Some(witness)) => {
                return Ok(Lettericity {
                    value: k,
                    cochromatic,
                    witness,
                })
            }
            Ok(None) => {}
            Err(e) => return Err(e.with_interval(k, n).into()),
        }
    }
    Ok(Lettericity {
        value: n,
        cochromatic,
        witness: trivial_representation(g),
    })
}

/// A representation with at most `k` letters, or `None` if there is none.
pub fn represent_with(g: &Graph, k: usize, budget: &mut Budget) -> Result<Option<LetterRepresentation>, Exhausted> {
    let n = g.n();
    assert!(n <= 64, "at most 64 vertices");
    if n == 0 {
        return Ok(Some(trivial_representation(g)));
    }
    if k == 0 {
        return Ok(None);
    }
    if k >= n {
        return Ok(Some(trivial_representation(g)));
    }
    let mut s = LetterSearch {
        k,
        adj: (0..n).map(|v| g.neighbors(v).fold(0u64, |m, u| m | 1 << u)).collect(),
        arc: vec![Tri::Unknown; k * k],
        profile: vec![None; k],
        used: 0,
        order: Vec::with_capacity(n),
        letters: Vec::with_capacity(n),
        failed: HashSet::new(),
    };
    if !s.search(full(n), budget)? {
        return Ok(None);
    }
    let decoder = Decoder::from_indices(
        k,
        (0..k)
            .flat_map(|a| (0..k).map(move |b| (a, b)))
            .filter(|&(a, b)| s.arc[a * k + b] == Tri::Yes),
    );
    Ok(Some(prune_unused(LetterRepresentation {
        word: decoder.word_from_indices(&s.letters),
        decoder,
        order: s.order,
    })))
}

/// Drops letters that do not occur in the word.
pub fn prune_unused(r: LetterRepresentation) -> LetterRepresentation {
    let used: BTreeSet<&String> = r.word.0.iter().collect();
    let keep: Vec<usize> = (0..r.decoder.len())
        .filter(|&i| used.contains(&r.decoder.letters[i]))
        .collect();
    if keep.len() == r.decoder.len() {
        return r;
    }
    let mut map = vec![usize::MAX; r.decoder.len()];
    for (new, &old) in keep.iter().enumerate() {
        map[old] = new;
    }
    let mut d = Decoder::with_letters(keep.iter().map(|&i| r.decoder.letters[i].clone())).expect("distinct");
    for (a, b) in r.decoder.arcs() {
        if map[a] != usize::MAX && map[b] != usize::MAX {
            d.add_arc(map[a], map[b]);
        }
    }
    LetterRepresentation {
        decoder: d,
        word: r.word,
        order: r.order,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum Tri {
    Unknown,
    No,
    Yes,
}

impl Tri {
    fn of(b: bool) -> Tri {
        if b {
            Tri::Yes
        } else {
            Tri::No
        }
    }
}

/// Backtracking over word positions. Every placed vertex with letter `l`
/// must agree on adjacency to all unplaced vertices, so each used letter
/// carries one adjacency profile on the unplaced set.
struct LetterSearch {
    k: usize,
    adj: Vec<u64>,
    arc: Vec<Tri>,
    profile: Vec<Option<u64>>,
    used: usize,
    order: Vec<usize>,
    letters: Vec<usize>,
    failed: HashSet<(u64, Vec<Tri>, Vec<Option<u64>>)>,
}

impl LetterSearch {
    fn search(&mut self, unplaced: u64, budget: &mut Budget) -> Result<bool, Exhausted> {
        if unplaced == 0 {
            return Ok(true);
        }
        let key = (unplaced, self.arc.clone(), self.profile.clone());
        if self.failed.contains(&key) {
            return Ok(false);
        }
        budget.tick()?;
        if !self.forward_ok(unplaced) {
            self.failed.insert(key);
            return Ok(false);
        }
        for v in bits(unplaced) {
            let limit = (self.used + 1).min(self.k);
            for l in 0..limit {
                let rest = unplaced & !(1 << v);
                let Some(undo) = self.try_place(v, l, rest) else {
                    continue;
                };
                self.order.push(v);
                self.letters.push(l);
                if self.search(rest, budget)? {
                    return Ok(true);
                }
                self.order.pop();
                self.letters.pop();
                self.undo(undo);
            }
        }
        self.failed.insert(key);
        Ok(false)
    }

    /// Every unplaced vertex still has a letter consistent with the arcs
    /// already fixed from placed letters.
    fn forward_ok(&self, unplaced: u64) -> bool {
        if self.used < self.k {
            return true;
        }
        bits(unplaced).all(|u| (0..self.used).any(|l| self.arcs_allow(u, l)))
    }

    /// `v` may be placed next with letter `l`; `rest` is what stays unplaced.
    fn compatible(&self, v: usize, l: usize, rest: u64) -> bool {
        if let Some(p) = self.profile[l] {
            if p & rest != self.adj[v] & rest {
                return false;
            }
        }
        self.arcs_allow(v, l)
    }

    fn arcs_allow(&self, v: usize, l: usize) -> bool {
        (0..self.used).all(|m| match self.profile[m] {
            Some(p) => {
                let t = self.arc[m * self.k + l];
                t == Tri::Unknown || t == Tri::of(p >> v & 1 == 1)
            }
            None => true,
        })
    }

    fn try_place(&mut self, v: usize, l: usize, rest: u64) -> Option<Undo> {
        if l < self.used && !self.compatible(v, l, rest) {
            return None;
        }
        let mut undo = Undo {
            set_arcs: Vec::new(),
            old_profiles: self.profile.clone(),
            old_used: self.used,
        };
        for m in 0..self.used {
            if let Some(p) = self.profile[m] {
                let idx = m * self.k + l;
                if self.arc[idx] == Tri::Unknown {
                    self.arc[idx] = Tri::of(p >> v & 1 == 1);
                    undo.set_arcs.push(idx);
                }
            }
        }
        if l == self.used {
            self.used += 1;
        }
        if self.profile[l].is_none() {
            self.profile[l] = Some(self.adj[v] & rest);
        }
        for p in self.profile.iter_mut().flatten() {
            *p &= rest;
        }
        Some(undo)
    }

    fn undo(&mut self, u: Undo) {
        for idx in u.set_arcs {
            self.arc[idx] = Tri::Unknown;
        }
        self.profile = u.old_profiles;
        self.used = u.old_used;
    }
}

struct Undo {
    set_arcs: Vec<usize>,
    old_profiles: Vec<Option<u64>>,
    old_used: usize,
}

/// Exact co-chromatic number (fewest cliques and independent sets covering
/// the vertices) with an optimal partition.
pub fn cochromatic_number(g: &Graph, budget: &mut Budget) -> Result<(usize, Vec<Vec<usize>>), Exhausted> {
    let n = g.n();
    if n == 0 {
        return Ok((0, Vec::new()));
    }
    let mut best: Vec<Vec<usize>> = greedy_cochromatic(g);
    let mut bags: Vec<(Vec<usize>, Option<bool>)> = Vec::new();
    cochromatic_rec(g, 0, &mut bags, &mut best, budget)?;
    Ok((best.len(), best))
}

fn greedy_cochromatic(g: &Graph) -> Vec<Vec<usize>> {
    let mut bags: Vec<Vec<usize>> = Vec::new();
    'v: for v in 0..g.n() {
        for b in bags.iter_mut() {
            let mut t = b.clone();
            t.push(v);
            if graph::is_clique(g, &t) || graph::is_independent(g, &t) {
                b.push(v);
                continue 'v;
            }
        }
        bags.push(vec![v]);
    }
    bags
}

fn cochromatic_rec(
    g: &Graph,
    v: usize,
    bags: &mut Vec<(Vec<usize>, Option<bool>)>,
    best: &mut Vec<Vec<usize>>,
    budget: &mut Budget,
) -> Result<(), Exhausted> {
    if bags.len() >= best.len() {
        return Ok(());
    }
    if v == g.n() {
        *best = bags.iter().map(|(b, _)| b.clone()).collect();
        return Ok(());
    }
    budget.tick()?;
    for i in 0..bags.len() {
        let (b, kind) = &bags[i];
        let to_all: Vec<bool> = b.iter().map(|&u| g.has_edge(u, v)).collect();
        let new_kind = match kind {
            Some(clique) => {
                if to_all.iter().all(|&e| e == *clique) {
                    Some(*clique)
                } else {
                    continue;
                }
            }
            None => Some(to_all[0]),
        };
        let old = bags[i].1;
        bags[i].0.push(v);
        bags[i].1 = new_kind;
        cochromatic_rec(g, v + 1, bags, best, budget)?;
        bags[i].0.pop();
        bags[i].1 = old;
    }
    bags.push((vec![v], None));
    cochromatic_rec(g, v + 1, bags, best, budget)?;
    bags.pop();
    Ok(())
}

/// Greedy leftmost embedding of `w1` into `w2` as a subword.
pub fn subword_leq<T: PartialEq>(w1: &[T], w2: &[T]) -> Option<Vec<usize>> {
    let mut emb = Vec::with_capacity(w1.len());
    let mut j = 0;
    for x in w1 {
        while j < w2.len() && w2[j] != *x {
            j += 1;
        }
        if j == w2.len() {
            return None;
        }
        emb.push(j);
        j += 1;
    }
    Some(emb)
}

/// Graphs on at most `n_max` vertices outside the class of lettericity
/// `<= k` whose one-vertex-deleted subgraphs all lie inside it, one per
/// isomorphism class, in canonical labelling.
pub fn minimal_obstructions(k: usize, n_max: usize, budget: &mut Budget) -> Result<Vec<Graph>> {
    if k == 0 {
        return Err(Error::InvalidArgument("k must be at least 1".into()));
    }
    let mut member: HashMap<Vec<u64>, bool> = HashMap::new();
    let mut out = Vec::new();
    for n in 0..=n_max {
        for g in graph::enumerate_graphs(n) {
            let deletions_in = (0..n).all(|v| member[&canonical_form(&g.remove_vertex(v))]);
            let inside = deletions_in && represent_with(&g, k, budget)?.is_some();
            if deletions_in && !inside {
                out.push(g.clone());
            }
            member.insert(canonical_form(&g), inside);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_isomorphic;

    fn fig1() -> Decoder {
        Decoder::new(
            ["a", "b", "c", "d"],
            &[("a", "a"), ("b", "b"), ("a", "b"), ("a", "c"), ("a", "d"), ("d", "a"), ("b", "d"), ("d", "c")],
        )
        .unwrap()
    }

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn ab() -> Decoder {
        Decoder::new(["a", "b"], &[("a", "b")]).unwrap()
    }

    #[test]
    fn figure_one_word() {
        let g = decode(&fig1(), &w("a c d b a d")).unwrap();
        let edges: Vec<(usize, usize)> = g.edges().map(|(u, v)| (u + 1, v + 1)).collect();
        assert_eq!(edges, vec![(1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (3, 5), (4, 6), (5, 6)]);
    }

    #[test]
    fn unknown_symbol() {
        assert!(matches!(decode(&ab(), &w("a z")), Err(Error::UnknownSymbol(_))));
        assert_eq!(decode(&ab(), &Word::default()).unwrap().n(), 0);
    }

    #[test]
    fn certificates() {
        // The path 2-1-4-3.
        let g = Graph::from_edges(4, &[(0, 1), (0, 3), (2, 3)]).unwrap();
        let c = LetterCertificate {
            assignment: ["a", "b", "a", "b"].map(String::from).to_vec(),
            order: vec![0, 1, 2, 3],
        };
        assert!(verify_certificate(&g, &c, &ab()).unwrap());
        let m = Graph::matching(2);
        assert!(!verify_certificate(&m, &c, &ab()).unwrap());
        let short = LetterCertificate {
            assignment: vec!["a".into()],
            order: vec![0],
        };
        assert!(verify_certificate(&g, &short, &ab()).is_err());
    }

    #[test]
    fn recognition() {
        let mut b = Budget::unlimited();
        let k22 = Graph::cycle(4).unwrap();
        assert_eq!(recognize(&ab(), &k22, &mut b).unwrap(), Some(w("a a b b")));
        assert_eq!(recognize(&ab(), &Graph::matching(2), &mut b).unwrap(), None);
        assert_eq!(recognize(&ab(), &Graph::empty(0), &mut b).unwrap(), Some(Word::default()));
        let (word, order) = recognize_with_order(&fig1(), &decode(&fig1(), &w("a c d b a d")).unwrap(), &mut b)
            .unwrap()
            .unwrap();
        let h = decode(&fig1(), &word).unwrap();
        assert!(is_isomorphic(&h, &decode(&fig1(), &w("a c d b a d")).unwrap()));
        assert_eq!(order.len(), 6);
    }

    #[test]
    fn small_lettericities() {
        let mut b = Budget::unlimited();
        assert_eq!(lettericity(&Graph::matching(3), &mut b).unwrap().value, 3);
        assert_eq!(lettericity(&Graph::complete(5), &mut b).unwrap().value, 1);
        let p4 = lettericity(&Graph::path(4), &mut b).unwrap();
        assert_eq!(p4.value, 2);
        assert!(p4.witness.verify(&Graph::path(4)).unwrap());
    }

    #[test]
    fn budget_reports_interval() {
        let mut b = Budget::steps(3);
        match lettericity(&Graph::matching(4), &mut b) {
            Err(Error::Budget(e)) => assert!(e.lower.is_some()),
            other => panic!("expected exhaustion, got {other:?}"),
        }
    }

    #[test]
    fn subwords() {
        assert_eq!(subword_leq(&["a", "b"], &["a", "c", "d", "b"]), Some(vec![0, 3]));
        assert_eq!(subword_leq::<&str>(&[], &["a"]), Some(vec![]));
        assert_eq!(subword_leq(&["b", "a"], &["a", "b"]), None);
    }

    #[test]
    fn obstructions_for_one_letter() {
        let mut b = Budget::unlimited();
        let obs = minimal_obstructions(1, 3, &mut b).unwrap();
        assert_eq!(obs.len(), 2);
        let p3 = Graph::path(3);
        let k2k1 = Graph::from_edges(3, &[(0, 1)]).unwrap();
        assert!(obs.iter().any(|g| is_isomorphic(g, &p3)));
        assert!(obs.iter().any(|g| is_isomorphic(g, &k2k1)));
        assert!(minimal_obstructions(1, 2, &mut b).unwrap().is_empty());
    }

    #[test]
    fn decoder_text_round_trip() {
        let d = fig1();
        let back: Decoder = d.to_text().parse().unwrap();
        assert_eq!(back, d);
        assert!("letters a a\n".parse::<Decoder>().is_err());
        assert!("letters a\narc a b\n".parse::<Decoder>().is_err());
    }
}
