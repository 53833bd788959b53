//! Gridding matrices, monotone and geometric griddings, and the cell-word
//! encoding of geometric grid classes.
//!
//! Columns are indexed left to right and rows bottom to top, both 0-based in
//! the API. The text format lists rows top to bottom as printed and cell
//! tokens (`a12`, or `a1_2` for wide matrices) are 1-based.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::budget::{Budget, Exhausted};
use crate::error::{parse_err, Error, Result};
use crate::graph::{is_skippable, parse_num, Graph};
use crate::letters::Decoder;
use crate::perm::{all_permutations, Permutation};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GridMatrix {
    s: usize,
    t: usize,
    /// Column-major: entry `(i, j)` at `i * t + j`.
    entries: Vec<i8>,
}

impl GridMatrix {
    pub fn zeros(s: usize, t: usize) -> Self {
        GridMatrix {
            s,
            t,
            entries: vec![0; s * t],
        }
    }

    /// Builds a matrix from rows listed top to bottom, as printed.
    pub fn from_printed(rows: &[Vec<i8>]) -> Result<Self> {
        let t = rows.len();
        let s = rows.first().map_or(0, Vec::len);
        let mut m = GridMatrix::zeros(s, t);
        for (r, row) in rows.iter().enumerate() {
            if row.len() != s {
                return Err(Error::InvalidArgument("ragged matrix rows".into()));
            }
            for (i, &e) in row.iter().enumerate() {
                if !(-1..=1).contains(&e) {
                    return Err(Error::InvalidArgument(format!("entry {e} is not in {{-1, 0, 1}}")));
                }
                m.set(i, t - 1 - r, e);
            }
        }
        Ok(m)
    }

    pub fn cols(&self) -> usize {
        self.s
    }

    pub fn rows(&self) -> usize {
        self.t
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i8 {
        self.entries[i * self.t + j]
    }

    pub fn set(&mut self, i: usize, j: usize, e: i8) {
        self.entries[i * self.t + j] = e;
    }

    /// Non-zero cells ordered by column, then row.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        (0..self.s)
            .flat_map(|i| (0..self.t).map(move |j| (i, j)))
            .filter(|&(i, j)| self.get(i, j) != 0)
            .collect()
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("matrix {} {}\n", self.s, self.t);
        for j in (0..self.t).rev() {
            let row: Vec<String> = (0..self.s).map(|i| self.get(i, j).to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }

    /// Graph on the non-zero cells (in [`GridMatrix::cells`] order); two cells
    /// are adjacent when they share a row or column with only zeros between.
    pub fn cell_graph(&self) -> Graph {
        let cells = self.cells();
        let idx = |c: (usize, usize)| cells.binary_search(&c).unwrap();
        let mut g = Graph::empty(cells.len());
        for i in 0..self.s {
            let col: Vec<usize> = (0..self.t).filter(|&j| self.get(i, j) != 0).collect();
            for w in col.windows(2) {
                g.set_edge(idx((i, w[0])), idx((i, w[1])), true);
            }
        }
        for j in 0..self.t {
            let row: Vec<usize> = (0..self.s).filter(|&i| self.get(i, j) != 0).collect();
            for w in row.windows(2) {
                g.set_edge(idx((w[0], j)), idx((w[1], j)), true);
            }
        }
        g
    }

    /// Column and row signs with every non-zero entry equal to `c_i r_j`,
    /// propagated from `+1` on the first column of each component.
    pub fn find_pmm_signs(&self) -> Option<SignVector> {
        let mut col: Vec<Option<i8>> = vec![None; self.s];
        let mut row: Vec<Option<i8>> = vec![None; self.t];
        for start in 0..self.s {
            if col[start].is_some() || (0..self.t).all(|j| self.get(start, j) == 0) {
                continue;
            }
            col[start] = Some(1);
            // Queue entries: (is_column, index).
            let mut queue = VecDeque::from([(true, start)]);
            while let Some((is_col, k)) = queue.pop_front() {
                if is_col {
                    let c = col[k].unwrap();
                    for j in 0..self.t {
                        let e = self.get(k, j);
                        if e == 0 {
                            continue;
                        }
                        match row[j] {
                            None => {
                                row[j] = Some(e * c);
                                queue.push_back((false, j));
                            }
                            Some(r) if r * c != e => return None,
                            _ => {}
                        }
                    }
                } else {
                    let r = row[k].unwrap();
                    for i in 0..self.s {
                        let e = self.get(i, k);
                        if e == 0 {
                            continue;
                        }
                        match col[i] {
                            None => {
                                col[i] = Some(e * r);
                                queue.push_back((true, i));
                            }
                            Some(c) if r * c != e => return None,
                            _ => {}
                        }
                    }
                }
            }
        }
        Some(SignVector {
            cols: col.into_iter().map(|c| c.unwrap_or(1)).collect(),
            rows: row.into_iter().map(|r| r.unwrap_or(1)).collect(),
        })
    }

    pub fn is_pmm_under(&self, signs: &SignVector) -> bool {
        signs.cols.len() == self.s
            && signs.rows.len() == self.t
            && signs.cols.iter().chain(&signs.rows).all(|&x| x == 1 || x == -1)
            && self
                .cells()
                .iter()
                .all(|&(i, j)| self.get(i, j) == signs.cols[i] * signs.rows[j])
    }

    /// Replaces each entry by a `k x k` block: zero, identity for `+1`,
    /// anti-diagonal of `-1` for `-1`.
    pub fn refine(&self, k: usize) -> Result<GridMatrix> {
        if k == 0 {
            return Err(Error::InvalidArgument("refinement factor must be at least 1".into()));
        }
        let mut r = GridMatrix::zeros(self.s * k, self.t * k);
        for (i, j) in self.cells() {
            let e = self.get(i, j);
            for a in 0..k {
                let b = if e == 1 { a } else { k - 1 - a };
                r.set(i * k + a, j * k + b, e);
            }
        }
        Ok(r)
    }
}

impl FromStr for GridMatrix {
    type Err = Error;
    fn from_str(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l))
            .filter(|(_, l)| !is_skippable(l));
        let (lineno, header) = lines.next().ok_or_else(|| parse_err(1, "missing `matrix <s> <t>`"))?;
        let mut h = header.split_whitespace();
        if h.next() != Some("matrix") {
            return Err(parse_err(lineno, "expected `matrix <s> <t>`"));
        }
        let s: usize = parse_num(lineno, h.next())?;
        let t: usize = parse_num(lineno, h.next())?;
        let mut rows = Vec::with_capacity(t);
        for _ in 0..t {
            let (lineno, line) = lines.next().ok_or_else(|| parse_err(lineno, "missing matrix row"))?;
            let row: Vec<i8> = line
                .split_whitespace()
                .map(|tok| match tok {
                    "-1" => Ok(-1),
                    "0" => Ok(0),
                    "1" | "+1" => Ok(1),
                    other => Err(parse_err(lineno, format!("bad entry `{other}`"))),
                })
                .collect::<Result<_>>()?;
            if row.len() != s {
                return Err(parse_err(lineno, format!("expected {s} entries")));
            }
            rows.push(row);
        }
        if let Some((lineno, _)) = lines.next() {
            return Err(parse_err(lineno, "unexpected trailing line"));
        }
        if t == 0 {
            return Ok(GridMatrix::zeros(s, 0));
        }
        GridMatrix::from_printed(&rows)
    }
}

impl fmt::Display for GridMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignVector {
    pub cols: Vec<i8>,
    pub rows: Vec<i8>,
}

/// A gridding: stored cut `c` is the line at `c + 0.5`, so a point at
/// position or value `x` (1-based) lies past every cut `c < x`. Cuts are
/// non-decreasing, so empty columns and rows are allowed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Gridding {
    pub col_cuts: Vec<usize>,
    pub row_cuts: Vec<usize>,
    /// Cell `(column, row)` of the point at each position.
    pub assignment: Vec<(usize, usize)>,
}

fn slot(cuts: &[usize], x: usize) -> usize {
    cuts.iter().filter(|&&c| c < x).count()
}

impl Gridding {
    /// Checks the cuts against `m` and returns the gridding if every cell is
    /// empty, increasing or decreasing as its entry demands.
    pub fn check(pi: &Permutation, m: &GridMatrix, col_cuts: &[usize], row_cuts: &[usize]) -> Option<Gridding> {
        let n = pi.len();
        let valid = |cuts: &[usize], len: usize| {
            cuts.len() + 1 == len && cuts.windows(2).all(|w| w[0] <= w[1]) && cuts.iter().all(|&c| c <= n)
        };
        if !valid(col_cuts, m.cols()) || !valid(row_cuts, m.rows()) {
            return None;
        }
        let assignment: Vec<(usize, usize)> = (0..n)
            .map(|p| (slot(col_cuts, p + 1), slot(row_cuts, pi.at(p))))
            .collect();
        if cells_monotone(pi, m, &assignment) {
            Some(Gridding {
                col_cuts: col_cuts.to_vec(),
                row_cuts: row_cuts.to_vec(),
                assignment,
            })
        } else {
            None
        }
    }

    /// Cut positions as printed, e.g. `3.5`.
    pub fn describe(&self) -> String {
        let f = |c: &[usize]| c.iter().map(|x| format!("{x}.5")).collect::<Vec<_>>().join(" ");
        format!("columns: {}; rows: {}", f(&self.col_cuts), f(&self.row_cuts))
    }
}

fn cells_monotone(pi: &Permutation, m: &GridMatrix, assignment: &[(usize, usize)]) -> bool {
    let n = pi.len();
    for p in 0..n {
        let (i, j) = assignment[p];
        let e = m.get(i, j);
        if e == 0 {
            return false;
        }
        for q in (p + 1)..n {
            if assignment[q] == (i, j) && ((pi.at(p) < pi.at(q)) != (e == 1)) {
                return false;
            }
        }
    }
    true
}

/// Non-decreasing sequences of length `len` over `0..=n`, lexicographically.
fn cut_vectors(len: usize, n: usize) -> Vec<Vec<usize>> {
    fn rec(len: usize, n: usize, from: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for c in from..=n {
            cur.push(c);
            rec(len, n, c, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(len, n, 0, &mut Vec::new(), &mut out);
    out
}

/// First monotone gridding in lexicographic order of (column cuts, row cuts).
pub fn monotone_gridding(pi: &Permutation, m: &GridMatrix) -> Option<Gridding> {
    if m.cols() == 0 || m.rows() == 0 {
        return if pi.is_empty() {
            Some(Gridding {
                col_cuts: vec![],
                row_cuts: vec![],
                assignment: vec![],
            })
        } else {
            None
        };
    }
    let n = pi.len();
    let rows = cut_vectors(m.rows() - 1, n);
    for cc in cut_vectors(m.cols() - 1, n) {
        for rc in &rows {
            if let Some(g) = Gridding::check(pi, m, &cc, rc) {
                return Some(g);
            }
        }
    }
    None
}

/// A word over the non-zero cells of a matrix; letters are `(column, row)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CellWord(pub Vec<(usize, usize)>);

impl CellWord {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Tokens `a<i><j>` (1-based), with an underscore when the matrix has
    /// more than 9 columns or rows.
    pub fn to_text(&self, m: &GridMatrix) -> String {
        self.0
            .iter()
            .map(|&(i, j)| cell_token(m, i, j))
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn parse(text: &str, m: &GridMatrix) -> Result<CellWord> {
        let letters = text
            .split_whitespace()
            .map(|tok| parse_cell_token(tok, m))
            .collect::<Result<_>>()?;
        Ok(CellWord(letters))
    }
}

pub fn cell_token(m: &GridMatrix, i: usize, j: usize) -> String {
    if m.cols() > 9 || m.rows() > 9 {
        format!("a{}_{}", i + 1, j + 1)
    } else {
        format!("a{}{}", i + 1, j + 1)
    }
}

fn parse_cell_token(tok: &str, m: &GridMatrix) -> Result<(usize, usize)> {
    let bad = || Error::UnknownSymbol(tok.to_string());
    let body = tok.strip_prefix('a').ok_or_else(bad)?;
    let (a, b) = match body.split_once('_') {
        Some((a, b)) => (a, b),
        None if body.len() == 2 => body.split_at(1),
        None => return Err(bad()),
    };
    let i: usize = a.parse().map_err(|_| bad())?;
    let j: usize = b.parse().map_err(|_| bad())?;
    if i == 0 || j == 0 || i > m.cols() || j > m.rows() || m.get(i - 1, j - 1) == 0 {
        return Err(bad());
    }
    Ok((i - 1, j - 1))
}

/// Relative order of two cell-word points: `(x_p < x_q, y_p < y_q)` for
/// positions `p < q`. Points in a cell move away from the corner picked by
/// the signs as the position grows.
fn later_is_right_above(signs: &SignVector, a: (usize, usize), b: (usize, usize)) -> (bool, bool) {
    let x = if a.0 != b.0 { a.0 < b.0 } else { signs.cols[a.0] == 1 };
    let y = if a.1 != b.1 { a.1 < b.1 } else { signs.rows[a.1] == 1 };
    (x, y)
}

/// The permutation whose plot is the cell-word point set. With `d_i = i/(n+1)`
/// the point for letter `(k, l)` at position `i` sits at
/// `x = k + (d_i or 1 - d_i)`, `y = l + (d_i or 1 - d_i)` by the signs; this is
/// computed on integers scaled by `n + 1`.
pub fn phi(m: &GridMatrix, signs: &SignVector, w: &CellWord) -> Result<Permutation> {
    if !m.is_pmm_under(signs) {
        return Err(Error::NotPmm);
    }
    let n = w.len();
    for &(i, j) in &w.0 {
        if i >= m.cols() || j >= m.rows() || m.get(i, j) == 0 {
            return Err(Error::UnknownSymbol(cell_token(m, i, j)));
        }
    }
    let coord = |cell: usize, sign: i8, pos: usize| cell * (n + 1) + if sign == 1 { pos } else { n + 1 - pos };
    let pts: Vec<(usize, usize)> = w
        .0
        .iter()
        .enumerate()
        .map(|(p, &(k, l))| (coord(k, signs.cols[k], p + 1), coord(l, signs.rows[l], p + 1)))
        .collect();
    let mut by_x = pts.clone();
    by_x.sort();
    let ys: Vec<usize> = by_x.iter().map(|&(_, y)| y).collect();
    Ok(Permutation::standardize(&ys))
}

/// Decoder on the cell alphabet: `(x, y)` is an arc iff a point from cell
/// `y` placed after a point from cell `x` forms an inversion with it.
pub fn decoder_from_pmm(m: &GridMatrix, signs: &SignVector) -> Result<Decoder> {
    if !m.is_pmm_under(signs) {
        return Err(Error::NotPmm);
    }
    let cells = m.cells();
    let mut d = Decoder::with_letters(cells.iter().map(|&(i, j)| cell_token(m, i, j)))?;
    for (a, &x) in cells.iter().enumerate() {
        for (b, &y) in cells.iter().enumerate() {
            let (right, above) = later_is_right_above(signs, x, y);
            if right != above {
                d.add_arc(a, b);
            }
        }
    }
    Ok(d)
}

/// Resolves a cell word against the letters of [`decoder_from_pmm`].
pub fn cell_word_indices(m: &GridMatrix, w: &CellWord) -> Vec<usize> {
    let cells = m.cells();
    w.0.iter().map(|c| cells.binary_search(c).expect("non-zero cell")).collect()
}

/// A geometric gridding witness: `phi(matrix, signs, word) = pi`. `matrix`
/// is the input when it is a PMM, otherwise its 2-fold refinement.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeometricWitness {
    pub matrix: GridMatrix,
    pub signs: SignVector,
    pub word: CellWord,
    pub refined: bool,
}

/// Searches for a cell word of length `|pi|` encoding `pi`.
pub fn geometric_gridding(pi: &Permutation, m: &GridMatrix, budget: &mut Budget) -> Result<Option<GeometricWitness>, Exhausted> {
    let (matrix, signs, refined) = match m.find_pmm_signs() {
        Some(s) => (m.clone(), s, false),
        None => {
            let r = m.refine(2).expect("factor 2");
            let s = r.find_pmm_signs().expect("2-fold refinements are always PMMs");
            (r, s, true)
        }
    };
    let cells = matrix.cells();
    let k = cells.len();
    let mut rel = vec![(false, false); k * k];
    for a in 0..k {
        for b in 0..k {
            rel[a * k + b] = later_is_right_above(&signs, cells[a], cells[b]);
        }
    }
    let mut search = GeomSearch {
        pi,
        k,
        rel,
        letters: Vec::new(),
        points: Vec::new(),
        used: vec![false; pi.len()],
    };
    if !search.dfs(budget)? {
        return Ok(None);
    }
    let word = CellWord(search.letters.iter().map(|&a| cells[a]).collect());
    Ok(Some(GeometricWitness {
        matrix,
        signs,
        word,
        refined,
    }))
}

struct GeomSearch<'a> {
    pi: &'a Permutation,
    k: usize,
    rel: Vec<(bool, bool)>,
    letters: Vec<usize>,
    points: Vec<usize>,
    used: Vec<bool>,
}

impl GeomSearch<'_> {
    fn dfs(&mut self, budget: &mut Budget) -> Result<bool, Exhausted> {
        let n = self.pi.len();
        if self.letters.len() == n {
            return Ok(true);
        }
        budget.tick()?;
        for a in 0..self.k {
            for x in 0..n {
                if self.used[x] {
                    continue;
                }
                let ok = self.letters.iter().zip(&self.points).all(|(&b, &y)| {
                    let (right, above) = self.rel[b * self.k + a];
                    right == (y < x) && above == (self.pi.at(y) < self.pi.at(x))
                });
                if !ok {
                    continue;
                }
                self.letters.push(a);
                self.points.push(x);
                self.used[x] = true;
                if self.dfs(budget)? {
                    return Ok(true);
                }
                self.used[x] = false;
                self.letters.pop();
                self.points.pop();
            }
        }
        Ok(false)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ClassMode {
    Grid,
    Geom,
}

/// Members of length `n` of the monotone or geometric grid class, in
/// lexicographic order.
pub fn enumerate_class(m: &GridMatrix, n: usize, mode: ClassMode, budget: &mut Budget) -> Result<Vec<Permutation>, Exhausted> {
    let mut out = Vec::new();
    for pi in all_permutations(n) {
        let member = match mode {
            ClassMode::Grid => monotone_gridding(&pi, m).is_some(),
            ClassMode::Geom => geometric_gridding(&pi, m, budget)?.is_some(),
        };
        if member {
            out.push(pi);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_isomorphic;

    fn mat(rows: &[&[i8]]) -> GridMatrix {
        GridMatrix::from_printed(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn printed_rows_are_top_to_bottom() {
        let m = mat(&[&[-1, -1], &[1, 1]]);
        assert_eq!(m.get(0, 0), 1);
        assert_eq!(m.get(0, 1), -1);
        let back: GridMatrix = m.to_text().parse().unwrap();
        assert_eq!(back, m);
    }

    #[test]
    fn cell_graphs() {
        let fig = mat(&[&[-1, 1, 0, 1, 0, -1], &[1, 1, 0, 0, -1, 1], &[0, 0, 1, 0, 0, 1]]);
        let g = fig.cell_graph();
        assert_eq!((g.n(), g.edge_count()), (10, 11));
        let ones = mat(&[&[1, 1], &[1, 1]]);
        assert!(is_isomorphic(&ones.cell_graph(), &Graph::cycle(4).unwrap()));
        assert_eq!(mat(&[&[1]]).cell_graph().n(), 1);
    }

    #[test]
    fn pmm_signs() {
        let m = mat(&[&[-1, 1], &[1, -1]]);
        let s = m.find_pmm_signs().unwrap();
        assert_eq!(s, SignVector { cols: vec![1, -1], rows: vec![1, -1] });
        assert!(mat(&[&[1, -1], &[1, 1]]).find_pmm_signs().is_none());
        let z = GridMatrix::zeros(2, 3).find_pmm_signs().unwrap();
        assert_eq!(z, SignVector { cols: vec![1, 1], rows: vec![1, 1, 1] });
    }

    #[test]
    fn refinement_blocks() {
        let m = mat(&[&[1, -1]]);
        assert_eq!(m.refine(1).unwrap(), m);
        let r = mat(&[&[1]]).refine(2).unwrap();
        assert_eq!(r, mat(&[&[0, 1], &[1, 0]]));
        let d = mat(&[&[-1]]).refine(2).unwrap();
        assert_eq!(d, mat(&[&[-1, 0], &[0, -1]]));
    }

    #[test]
    fn figure_eight_word() {
        let m = mat(&[&[-1, -1], &[1, 1]]);
        let s = m.find_pmm_signs().unwrap();
        let w = CellWord::parse("a12 a11 a21 a22 a12 a21", &m).unwrap();
        assert_eq!(phi(&m, &s, &w).unwrap(), p("614253"));
        assert_eq!(w.to_text(&m), "a12 a11 a21 a22 a12 a21");
    }

    #[test]
    fn phi_edge_cases() {
        let one = mat(&[&[1]]);
        let s = one.find_pmm_signs().unwrap();
        assert_eq!(phi(&one, &s, &CellWord::default()).unwrap(), Permutation::identity(0));
        let w = CellWord::parse("a11 a11 a11", &one).unwrap();
        assert_eq!(phi(&one, &s, &w).unwrap(), p("123"));
        let bad = SignVector { cols: vec![-1], rows: vec![1] };
        assert_eq!(phi(&one, &bad, &w), Err(Error::NotPmm));
    }

    #[test]
    fn monotone_griddings() {
        let m = mat(&[&[-1, -1], &[1, 1]]);
        assert!(Gridding::check(&p("614253"), &m, &[3], &[3]).is_some());
        assert!(monotone_gridding(&p("614253"), &m).is_some());
        let x = mat(&[&[-1, 1], &[1, -1]]);
        assert!(monotone_gridding(&p("2413"), &x).is_some());
        assert!(monotone_gridding(&Permutation::identity(0), &x).is_some());
    }

    #[test]
    fn geometric_griddings() {
        let mut b = Budget::unlimited();
        let x = mat(&[&[-1, 1], &[1, -1]]);
        assert!(geometric_gridding(&p("2413"), &x, &mut b).unwrap().is_none());
        let m = mat(&[&[-1, -1], &[1, 1]]);
        let wit = geometric_gridding(&p("614253"), &m, &mut b).unwrap().unwrap();
        assert_eq!(phi(&wit.matrix, &wit.signs, &wit.word).unwrap(), p("614253"));
        let one = mat(&[&[1]]);
        let w = geometric_gridding(&p("1"), &one, &mut b).unwrap().unwrap();
        assert_eq!(w.word.to_text(&one), "a11");
    }

    #[test]
    fn non_pmm_is_refined() {
        let mut b = Budget::unlimited();
        let m = mat(&[&[1, -1], &[1, 1]]);
        let wit = geometric_gridding(&p("21"), &m, &mut b).unwrap().unwrap();
        assert!(wit.refined);
        assert_eq!((wit.matrix.cols(), wit.matrix.rows()), (4, 4));
    }

    #[test]
    fn single_cell_decoders() {
        let inc = mat(&[&[1]]);
        let d = decoder_from_pmm(&inc, &inc.find_pmm_signs().unwrap()).unwrap();
        assert!(!d.has_arc(0, 0));
        let dec = mat(&[&[-1]]);
        let d = decoder_from_pmm(&dec, &dec.find_pmm_signs().unwrap()).unwrap();
        assert!(d.has_arc(0, 0));
    }

    #[test]
    fn class_enumeration() {
        let mut b = Budget::unlimited();
        let inc = mat(&[&[1]]);
        assert_eq!(enumerate_class(&inc, 3, ClassMode::Grid, &mut b).unwrap(), vec![p("123")]);
        let x = mat(&[&[-1, 1], &[1, -1]]);
        let grid = enumerate_class(&x, 4, ClassMode::Grid, &mut b).unwrap();
        let geom = enumerate_class(&x, 4, ClassMode::Geom, &mut b).unwrap();
        assert!(grid.contains(&p("2413")));
        assert!(!geom.contains(&p("2413")));
    }

    #[test]
    fn cell_tokens() {
        let wide = GridMatrix::from_printed(&[vec![1; 10]]).unwrap();
        let w = CellWord::parse("a10_1 a3_1", &wide).unwrap();
        assert_eq!(w.0, vec![(9, 0), (2, 0)]);
        assert_eq!(w.to_text(&wide), "a10_1 a3_1");
        let m = mat(&[&[1, 0]]);
        assert!(CellWord::parse("a21", &m).is_err());
    }
}
