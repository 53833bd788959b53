//! Permutations in one-line notation.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A permutation of `1..=n`, stored as its one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation(Vec<usize>);

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Permutation::new(v)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SumMode {
    Direct,
    Skew,
}

impl Permutation {
    /// Validates that `values` contains each of `1..=n` exactly once.
    pub fn new(values: Vec<usize>) -> Result<Self> {
        let n = values.len();
        let mut seen = vec![false; n + 1];
        for &v in &values {
            if v == 0 || v > n {
                return Err(Error::InvalidPermutation(format!("value {v} outside 1..={n}")));
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidPermutation(format!("value {v} repeated")));
            }
        }
        Ok(Permutation(values))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    /// Permutation with the same relative order as `seq` (distinct entries).
    pub fn standardize<T: Ord>(seq: &[T]) -> Self {
        let mut idx: Vec<usize> = (0..seq.len()).collect();
        idx.sort_by(|&a, &b| seq[a].cmp(&seq[b]));
        let mut vals = vec![0; seq.len()];
        for (rank, &i) in idx.iter().enumerate() {
            vals[i] = rank + 1;
        }
        Permutation(vals)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn values(&self) -> &[usize] {
        &self.0
    }

    /// Value at 0-based position `i`.
    pub fn at(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation(inv)
    }

    pub fn reverse(&self) -> Permutation {
        Permutation(self.0.iter().rev().copied().collect())
    }

    pub fn complement(&self) -> Permutation {
        let n = self.len();
        Permutation(self.0.iter().map(|&v| n + 1 - v).collect())
    }

    pub fn inversions(&self) -> usize {
        (0..self.len())
            .tuple_combinations()
            .filter(|&(i, j)| self.0[i] > self.0[j])
            .count()
    }

    /// Lexicographically least increasing index sequence (0-based) whose
    /// values are order-isomorphic to `sigma`.
    pub fn contains_pattern(&self, sigma: &Permutation) -> Option<Vec<usize>> {
        let mut chosen = Vec::with_capacity(sigma.len());
        if self.pattern_dfs(sigma, 0, &mut chosen) {
            Some(chosen)
        } else {
            None
        }
    }

    fn pattern_dfs(&self, sigma: &Permutation, from: usize, chosen: &mut Vec<usize>) -> bool {
        let k = chosen.len();
        if k == sigma.len() {
            return true;
        }
        let remaining = sigma.len() - k;
        for i in from..=self.len().saturating_sub(remaining) {
            if i >= self.len() {
                break;
            }
            let ok = chosen
                .iter()
                .enumerate()
                .all(|(p, &j)| (self.0[j] < self.0[i]) == (sigma.0[p] < sigma.0[k]));
            if ok {
                chosen.push(i);
                if self.pattern_dfs(sigma, i + 1, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }

    pub fn contains(&self, sigma: &Permutation) -> bool {
        self.contains_pattern(sigma).is_some()
    }

    /// Direct sum: `self` then `other` shifted up; skew sum: `self` shifted
    /// up then `other`.
    pub fn sum(&self, other: &Permutation, mode: SumMode) -> Permutation {
        let (a, b) = (self.len(), other.len());
        let vals = match mode {
            SumMode::Direct => self.0.iter().copied().chain(other.0.iter().map(|&v| v + a)).collect(),
            SumMode::Skew => self.0.iter().map(|&v| v + b).chain(other.0.iter().copied()).collect(),
        };
        Permutation(vals)
    }

    /// Graph on positions with an edge at every inverted pair.
    pub fn inversion_graph(&self) -> Graph {
        let mut g = Graph::empty(self.len());
        for (i, j) in (0..self.len()).tuple_combinations() {
            if self.0[i] > self.0[j] {
                g.set_edge(i, j, true);
            }
        }
        g
    }

    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

/// True iff the sequences have equal length and agree on every comparison.
pub fn order_isomorphic<T: Ord>(a: &[T], b: &[T]) -> bool {
    a.len() == b.len()
        && (0..a.len())
            .tuple_combinations()
            .all(|(i, j)| a[i].cmp(&a[j]) == b[i].cmp(&b[j]))
}

/// Concatenation of `w_1 .. w_n`, where `w_i` lists `{x <= n^2 : x = i mod n}`
/// in decreasing order.
pub fn pi_n(n: usize) -> Permutation {
    let mut vals = Vec::with_capacity(n * n);
    for i in 1..=n {
        let mut block: Vec<usize> = (1..=n * n).filter(|x| x % n == i % n).collect();
        block.reverse();
        vals.extend(block);
    }
    Permutation(vals)
}

/// All permutations of length `n` in lexicographic order.
pub fn all_permutations(n: usize) -> impl Iterator<Item = Permutation> {
    (1..=n).permutations(n).map(Permutation)
}

impl FromStr for Permutation {
    type Err = Error;
    /// Whitespace-separated values; a single token of two or more digits is
    /// read digit by digit (`2413`).
    fn from_str(s: &str) -> Result<Self> {
        let toks: Vec<&str> = s.split_whitespace().collect();
        let vals: Vec<usize> = if toks.len() == 1 && toks[0].len() > 1 && toks[0].chars().all(|c| c.is_ascii_digit()) {
            toks[0].chars().map(|c| c as usize - '0' as usize).collect()
        } else {
            toks.iter()
                .map(|t| t.parse().map_err(|_| Error::InvalidPermutation(format!("`{t}` is not a number"))))
                .collect::<Result<_>>()?
        };
        Permutation::new(vals)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.iter().join(" "))
    }
}
