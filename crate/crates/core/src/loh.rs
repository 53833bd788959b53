//! Locally ordered hypergraphs: hyperedges carry total orders that agree on
//! every cell (the classes of elements lying in exactly the same hyperedges).

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::budget::{Budget, Exhausted};
use crate::circuit::ChainCircuit;
use crate::digraph::Digraph;
use crate::error::{parse_err, Error, LohError, Result};
use crate::graph::is_skippable;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hyperedge {
    pub name: String,
    /// Element indices in hyperedge order.
    pub members: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "LohRepr", try_from = "LohRepr")]
pub struct Loh {
    elements: Vec<String>,
    edges: Vec<Hyperedge>,
}

#[derive(Serialize, Deserialize)]
struct LohRepr {
    elements: Vec<String>,
    edges: Vec<(String, Vec<String>)>,
}

impl From<Loh> for LohRepr {
    fn from(h: Loh) -> Self {
        LohRepr {
            edges: h
                .edges
                .iter()
                .map(|e| (e.name.clone(), e.members.iter().map(|&x| h.elements[x].clone()).collect()))
                .collect(),
            elements: h.elements,
        }
    }
}

impl TryFrom<LohRepr> for Loh {
    type Error = Error;
    fn try_from(r: LohRepr) -> Result<Self> {
        Loh::from_names(r.elements, r.edges)
    }
}

impl Loh {
    /// Checks element names, hyperedge members, coverage and agreement on cells.
    pub fn validate(elements: Vec<String>, edges: Vec<Hyperedge>) -> Result<Loh> {
        let mut seen = HashMap::new();
        for (i, e) in elements.iter().enumerate() {
            if seen.insert(e.as_str(), i).is_some() {
                return Err(LohError::DuplicateElement(e.clone()).into());
            }
        }
        let mut covered = vec![false; elements.len()];
        for e in &edges {
            let mut inside = vec![false; elements.len()];
            for &x in &e.members {
                if x >= elements.len() {
                    return Err(LohError::UnknownElement(format!("#{x}")).into());
                }
                if std::mem::replace(&mut inside[x], true) {
                    return Err(LohError::RepeatedMember(e.name.clone()).into());
                }
                covered[x] = true;
            }
        }
        if let Some(x) = covered.iter().position(|&c| !c) {
            return Err(LohError::Isolated(elements[x].clone()).into());
        }
        let h = Loh { elements, edges };
        h.check_cells()?;
        Ok(h)
    }

    /// Builds from element names and `(edge name, ordered member names)`.
    pub fn from_names(elements: Vec<String>, edges: Vec<(String, Vec<String>)>) -> Result<Loh> {
        let index: HashMap<&str, usize> = elements.iter().enumerate().map(|(i, e)| (e.as_str(), i)).collect();
        let mut out = Vec::with_capacity(edges.len());
        for (name, members) in edges {
            let members = members
                .iter()
                .map(|m| index.get(m.as_str()).copied().ok_or_else(|| LohError::UnknownElement(m.clone())))
                .collect::<Result<Vec<_>, _>>()?;
            out.push(Hyperedge { name, members });
        }
        Loh::validate(elements, out)
    }

    fn check_cells(&self) -> Result<()> {
        let pos = self.positions();
        for cell in self.cells() {
            let edges: Vec<usize> = (0..self.edges.len()).filter(|&e| pos[e].contains_key(&cell[0])).collect();
            for (i, &x) in cell.iter().enumerate() {
                for &y in &cell[i + 1..] {
                    let first = edges[0];
                    for &e in &edges[1..] {
                        if (pos[first][&x] < pos[first][&y]) != (pos[e][&x] < pos[e][&y]) {
                            return Err(LohError::Disagreement {
                                first: self.edges[first].name.clone(),
                                second: self.edges[e].name.clone(),
                                x: self.elements[x].clone(),
                                y: self.elements[y].clone(),
                            }
                            .into());
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// `positions()[e][x]`: index of element `x` within hyperedge `e`.
    fn positions(&self) -> Vec<HashMap<usize, usize>> {
        self.edges
            .iter()
            .map(|e| e.members.iter().enumerate().map(|(p, &x)| (x, p)).collect())
            .collect()
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn edges(&self) -> &[Hyperedge] {
        &self.edges
    }

    pub fn element_index(&self, name: &str) -> Result<usize> {
        self.elements
            .iter()
            .position(|e| e == name)
            .ok_or_else(|| LohError::UnknownElement(name.into()).into())
    }

    /// Elements grouped by the set of hyperedges containing them; cells in
    /// order of their first element, elements ascending.
    pub fn cells(&self) -> Vec<Vec<usize>> {
        let mut sig: Vec<Vec<usize>> = vec![Vec::new(); self.elements.len()];
        for (e, edge) in self.edges.iter().enumerate() {
            for &x in &edge.members {
                sig[x].push(e);
            }
        }
        let mut groups: BTreeMap<&Vec<usize>, Vec<usize>> = BTreeMap::new();
        for (x, s) in sig.iter().enumerate() {
            groups.entry(s).or_default().push(x);
        }
        let mut cells: Vec<Vec<usize>> = groups.into_values().collect();
        cells.sort();
        cells
    }

    /// Arc `x -> y` whenever `x` precedes `y` in some hyperedge.
    pub fn conflict(&self) -> Digraph {
        let mut d = Digraph::new(self.elements.len());
        for e in &self.edges {
            for (i, &x) in e.members.iter().enumerate() {
                for &y in &e.members[i + 1..] {
                    d.add_arc(x, y);
                }
            }
        }
        d
    }

    /// A linear order of all elements restricting to every hyperedge order,
    /// or a directed cycle of the conflict digraph.
    pub fn is_globally_consistent(&self) -> Result<Vec<usize>, Vec<usize>> {
        self.conflict().topological_sort()
    }

    /// Removes `x`, replacing each hyperedge through `x` by its nonempty
    /// pieces strictly below and strictly above `x`.
    pub fn split(&self, x: usize) -> Result<Loh> {
        if x >= self.elements.len() {
            return Err(LohError::UnknownElement(format!("#{x}")).into());
        }
        let keep: Vec<usize> = (0..self.elements.len()).filter(|&y| y != x).collect();
        let mut new = vec![usize::MAX; self.elements.len()];
        for (i, &y) in keep.iter().enumerate() {
            new[y] = i;
        }
        let mut edges = Vec::new();
        for e in &self.edges {
            match e.members.iter().position(|&y| y == x) {
                None => edges.push(Hyperedge {
                    name: e.name.clone(),
                    members: e.members.iter().map(|&y| new[y]).collect(),
                }),
                Some(p) => {
                    for (suffix, piece) in [("lo", &e.members[..p]), ("hi", &e.members[p + 1..])] {
                        if !piece.is_empty() {
                            edges.push(Hyperedge {
                                name: format!("{}.{suffix}", e.name),
                                members: piece.iter().map(|&y| new[y]).collect(),
                            });
                        }
                    }
                }
            }
        }
        // Every other element keeps a piece, so nothing becomes isolated.
        Loh::validate(keep.iter().map(|&y| self.elements[y].clone()).collect(), edges)
    }

    /// Whether removing the elements in `removed` (a bit mask) leaves a
    /// globally consistent hypergraph.
    fn consistent_after(&self, removed: u64) -> bool {
        let mut d = Digraph::new(self.elements.len());
        for e in &self.edges {
            let mut prev: Option<usize> = None;
            for &y in &e.members {
                if removed >> y & 1 == 1 {
                    prev = None;
                    continue;
                }
                if let Some(p) = prev {
                    d.add_arc(p, y);
                }
                prev = Some(y);
            }
        }
        d.is_acyclic()
    }

    /// Minimum number of splits making the hypergraph globally consistent.
    /// Splits commute and the result depends only on the set of split
    /// elements, so sets are searched by size. Returns the value and a
    /// lexicographically first optimal set.
    pub fn global_inconsistency(&self, budget: &mut Budget) -> Result<(usize, Vec<usize>), Exhausted> {
        let m = self.elements.len();
        assert!(m <= 64, "inconsistency search handles at most 64 elements");
        for size in 0..=m {
            for set in itertools::Itertools::combinations(0..m, size) {
                budget.tick().map_err(|e| e.with_interval(size, m))?;
                let mask = set.iter().fold(0u64, |acc, &x| acc | 1 << x);
                if self.consistent_after(mask) {
                    return Ok((size, set));
                }
            }
        }
        unreachable!("removing every element leaves nothing to conflict")
    }

    /// Applies splits one at a time, in order.
    pub fn split_all(&self, names: &[&str]) -> Result<Loh> {
        let mut h = self.clone();
        for name in names {
            let x = h.element_index(name)?;
            h = h.split(x)?;
        }
        Ok(h)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("elem {}\n", self.elements.join(" "));
        for e in &self.edges {
            s.push_str(&format!("edge {} :", e.name));
            for &x in &e.members {
                s.push_str(&format!(" {}", self.elements[x]));
            }
            s.push('\n');
        }
        s
    }
}

impl FromStr for Loh {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let mut elements = Vec::new();
        let mut edges = Vec::new();
        for (i, line) in s.lines().enumerate() {
            let lineno = i + 1;
            if is_skippable(line) {
                continue;
            }
            let t = line.trim_start();
            if let Some(rest) = t.strip_prefix("elem") {
                elements.extend(rest.split_whitespace().map(String::from));
            } else if let Some(rest) = t.strip_prefix("edge") {
                let (name, members) = rest
                    .split_once(':')
                    .ok_or_else(|| parse_err(lineno, "expected `edge <name> : <members>`"))?;
                let name = name.trim();
                if name.is_empty() || name.contains(char::is_whitespace) {
                    return Err(parse_err(lineno, "hyperedge name must be a single token"));
                }
                edges.push((name.to_string(), members.split_whitespace().map(String::from).collect()));
            } else {
                return Err(parse_err(lineno, "expected `elem` or `edge` line"));
            }
        }
        Loh::from_names(elements, edges)
    }
}

impl fmt::Display for Loh {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// One hyperedge per consecutive bag pair, `e<i>` on bags `i` and `i+1`
/// (1-based), elements named by 1-based vertex labels. Inside a hyperedge a
/// vertex `u` of the first bag precedes a vertex `w` of the second exactly
/// when `u ~ w`, and each bag keeps its circuit order.
pub fn from_chain_circuit(cc: &ChainCircuit) -> Result<Loh> {
    let g = cc.graph();
    let bags = cc.bags();
    let k = bags.len();
    let mut edges = Vec::new();
    for i in 0..k {
        let (a, b) = (&bags[i], &bags[(i + 1) % k]);
        if a.is_empty() && b.is_empty() {
            continue;
        }
        // Sort by (threshold in b, side, position); a vertex of `a` sits just
        // before the first vertex of `b` it sees.
        let mut keyed: Vec<((usize, usize, usize), usize)> = Vec::with_capacity(a.len() + b.len());
        for (p, &u) in a.iter().enumerate() {
            let t = b.iter().position(|&w| g.has_edge(u, w)).unwrap_or(b.len());
            keyed.push(((t, 0, p), u));
        }
        for (q, &w) in b.iter().enumerate() {
            keyed.push(((q, 1, 0), w));
        }
        keyed.sort();
        let members: Vec<usize> = keyed.into_iter().map(|(_, v)| v).collect();
        let pos: HashMap<usize, usize> = members.iter().enumerate().map(|(p, &v)| (v, p)).collect();
        for &u in a {
            for &w in b {
                if (pos[&u] < pos[&w]) != g.has_edge(u, w) {
                    return Err(Error::Invariant(format!(
                        "merged order of bags {} and {} is not total",
                        i + 1,
                        (i + 1) % k + 1
                    )));
                }
            }
        }
        edges.push(Hyperedge {
            name: format!("e{}", i + 1),
            members,
        });
    }
    Loh::validate((1..=g.n()).map(|v| v.to_string()).collect(), edges)
}

/// Random locally consistent hypergraph: random memberships, a random order
/// on each cell, and each hyperedge a random interleaving of its cells.
pub fn random_loh<R: Rng + ?Sized>(rng: &mut R, max_elements: usize, max_edges: usize) -> Loh {
    assert!(max_elements >= 1 && max_edges >= 1);
    let m = rng.gen_range(1..=max_elements);
    let e = rng.gen_range(1..=max_edges);
    let mut member = vec![vec![false; m]; e];
    for x in 0..m {
        for row in member.iter_mut() {
            row[x] = rng.gen_bool(0.5);
        }
        if !member.iter().any(|row| row[x]) {
            member[rng.gen_range(0..e)][x] = true;
        }
    }
    member.retain(|row| row.iter().any(|&b| b));
    let mut by_sig: BTreeMap<Vec<bool>, Vec<usize>> = BTreeMap::new();
    for x in 0..m {
        by_sig.entry(member.iter().map(|row| row[x]).collect()).or_default().push(x);
    }
    let mut cells: Vec<(Vec<bool>, Vec<usize>)> = by_sig.into_iter().collect();
    for (_, c) in cells.iter_mut() {
        c.shuffle(rng);
    }
    let mut edges = Vec::new();
    for (ei, _) in member.iter().enumerate() {
        let mut queues: Vec<&[usize]> = cells.iter().filter(|(sig, _)| sig[ei]).map(|(_, c)| c.as_slice()).collect();
        let mut order = Vec::new();
        while !queues.is_empty() {
            let total: usize = queues.iter().map(|q| q.len()).sum();
            let mut r = rng.gen_range(0..total);
            let qi = queues
                .iter()
                .position(|q| {
                    if r < q.len() {
                        true
                    } else {
                        r -= q.len();
                        false
                    }
                })
                .unwrap();
            order.push(queues[qi][0]);
            queues[qi] = &queues[qi][1..];
            if queues[qi].is_empty() {
                queues.remove(qi);
            }
        }
        edges.push(Hyperedge {
            name: format!("e{}", ei + 1),
            members: order,
        });
    }
    Loh::validate((1..=m).map(|x| format!("x{x}")).collect(), edges).expect("interleaved cell orders agree")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::generate_ckl;

    fn loh(text: &str) -> Result<Loh> {
        text.parse()
    }

    #[test]
    fn validation() {
        assert!(loh("elem 1 2 3\nedge e1 : 1 2 3\nedge e2 : 2 3\n").is_ok());
        assert!(matches!(
            loh("elem 1 2 3\nedge e1 : 1 2 3\nedge e2 : 3 2\n"),
            Err(Error::Loh(LohError::Disagreement { .. }))
        ));
        assert_eq!(loh("elem 1\n"), Err(Error::Loh(LohError::Isolated("1".into()))));
    }

    #[test]
    fn cells_by_signature() {
        let h = loh("elem 1 2 3 4\nedge e1 : 1 2 3\nedge e2 : 3 4\n").unwrap();
        assert_eq!(h.cells(), vec![vec![0, 1], vec![2], vec![3]]);
        let t = from_chain_circuit(&generate_ckl(3, 1).unwrap()).unwrap();
        assert_eq!(t.cells(), vec![vec![0], vec![1], vec![2]]);
    }

    #[test]
    fn triangle() {
        let t = from_chain_circuit(&generate_ckl(3, 1).unwrap()).unwrap();
        assert_eq!(
            t.to_text(),
            "elem 1 2 3\nedge e1 : 1 2\nedge e2 : 2 3\nedge e3 : 3 1\n"
        );
        let c = t.is_globally_consistent().unwrap_err();
        assert!(t.conflict().is_cycle(&c));
        let s = t.split(0).unwrap();
        assert_eq!(s.to_text(), "elem 2 3\nedge e1.hi : 2\nedge e2 : 2 3\nedge e3.lo : 3\n");
        assert_eq!(s.is_globally_consistent(), Ok(vec![0, 1]));
        assert_eq!(t.global_inconsistency(&mut Budget::unlimited()).unwrap(), (1, vec![0]));
    }

    #[test]
    fn splitting_pieces() {
        let h = loh("elem 1 2 3\nedge e : 1 2 3\n").unwrap();
        assert_eq!(h.split(1).unwrap().to_text(), "elem 1 3\nedge e.lo : 1\nedge e.hi : 3\n");
        let h = loh("elem 1 2 3\nedge e : 1 2\nedge f : 2 3\n").unwrap();
        assert_eq!(h.split(0).unwrap().to_text(), "elem 2 3\nedge e.hi : 2\nedge f : 2 3\n");
    }

    #[test]
    fn consistent_orders() {
        let h = loh("elem 1 2 3 4\nedge e1 : 1 2 3\nedge e2 : 2 3 4\n").unwrap();
        assert_eq!(h.is_globally_consistent(), Ok(vec![0, 1, 2, 3]));
        assert_eq!(h.global_inconsistency(&mut Budget::unlimited()).unwrap().0, 0);
    }

    #[test]
    fn text_round_trip() {
        let h = from_chain_circuit(&generate_ckl(4, 2).unwrap()).unwrap();
        assert_eq!(h.to_text().parse::<Loh>().unwrap(), h);
    }
}
