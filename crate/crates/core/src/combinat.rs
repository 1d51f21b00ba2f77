//! Partitions, Young diagrams, tableaux and tabloids.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CombinatError {
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("parts must be weakly decreasing and positive: {0:?}")]
    InvalidParts(Vec<usize>),
    #[error("partitions of different sizes: {0} and {1}")]
    SizeMismatch(usize, usize),
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("node ({0},{1}) cannot be added or removed here")]
    InvalidNode(usize, usize),
}

/// A partition of n, stored as its weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

/// A node (i, j) of a Young diagram; both indices start at 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DiagramNode {
    pub i: usize,
    pub j: usize,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, CombinatError> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(CombinatError::InvalidParts(parts));
        }
        Ok(Partition { parts })
    }

    /// Sorts and drops zeros; never fails.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// λ_i with 1-based i, zero past the end.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=cols)
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    pub fn dominates(&self, other: &Partition) -> Result<bool, CombinatError> {
        self.check_same_size(other)?;
        let len = self.len().max(other.len());
        let (mut a, mut b) = (0, 0);
        for i in 1..=len {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn lex_compare(&self, other: &Partition) -> Result<Ordering, CombinatError> {
        self.check_same_size(other)?;
        Ok(self.parts.cmp(&other.parts))
    }

    fn check_same_size(&self, other: &Partition) -> Result<(), CombinatError> {
        if self.n() != other.n() {
            return Err(CombinatError::SizeMismatch(self.n(), other.n()));
        }
        Ok(())
    }

    pub fn nodes(&self) -> impl Iterator<Item = DiagramNode> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (1..=len).map(move |j| DiagramNode { i: r + 1, j }))
    }

    pub fn addable_nodes(&self) -> Vec<DiagramNode> {
        (1..=self.len() + 1)
            .filter(|&i| i == 1 || self.part(i - 1) > self.part(i))
            .map(|i| DiagramNode { i, j: self.part(i) + 1 })
            .collect()
    }

    pub fn removable_nodes(&self) -> Vec<DiagramNode> {
        (1..=self.len())
            .filter(|&i| self.part(i) > self.part(i + 1))
            .map(|i| DiagramNode { i, j: self.part(i) })
            .collect()
    }

    pub fn add_node(&self, node: DiagramNode) -> Result<Partition, CombinatError> {
        if !self.addable_nodes().contains(&node) {
            return Err(CombinatError::InvalidNode(node.i, node.j));
        }
        let mut parts = self.parts.clone();
        if node.i > parts.len() {
            parts.push(1);
        } else {
            parts[node.i - 1] += 1;
        }
        Ok(Partition { parts })
    }

    pub fn remove_node(&self, node: DiagramNode) -> Result<Partition, CombinatError> {
        if !self.removable_nodes().contains(&node) {
            return Err(CombinatError::InvalidNode(node.i, node.j));
        }
        let mut parts = self.parts.clone();
        parts[node.i - 1] -= 1;
        if parts[node.i - 1] == 0 {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    /// Multiplicities r_i = #{parts equal to i}, indexed from 1 (index 0 unused).
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut r = vec![0; self.parts.first().copied().unwrap_or(0) + 1];
        for &p in &self.parts {
            r[p] += 1;
        }
        r
    }

    /// z_λ = Π i^{r_i} r_i!, the centralizer order of a permutation of cycle type λ.
    pub fn z(&self) -> BigUint {
        let mut z = BigUint::one();
        for (i, &r) in self.multiplicities().iter().enumerate().skip(1) {
            for k in 1..=r {
                z *= BigUint::from(i) * BigUint::from(k);
            }
        }
        z
    }

    /// Number of permutations of cycle type λ in Σ_n: n!/z_λ.
    pub fn class_size(&self) -> BigUint {
        factorial(self.n()) / self.z()
    }

    pub fn standard_tableaux(&self) -> Vec<Tableau> {
        let n = self.n();
        let mut rows: Vec<Vec<usize>> = self.parts.iter().map(|&p| Vec::with_capacity(p)).collect();
        let mut out = Vec::new();
        fill_standard(self, &mut rows, 1, n, &mut out);
        out
    }

    /// Number of standard tableaux, by the recursion over removable nodes.
    pub fn count_standard_tableaux(&self) -> u64 {
        fn go(p: &Partition, memo: &mut HashMap<Partition, u64>) -> u64 {
            if p.n() <= 1 {
                return 1;
            }
            if let Some(&v) = memo.get(p) {
                return v;
            }
            let v = p
                .removable_nodes()
                .into_iter()
                .map(|node| go(&p.remove_node(node).expect("removable"), memo))
                .sum();
            memo.insert(p.clone(), v);
            v
        }
        go(self, &mut HashMap::new())
    }

    /// Content i - j summed with weights; helper for node polynomials.
    pub fn contents(&self) -> Vec<i64> {
        self.nodes().map(|nd| nd.j as i64 - nd.i as i64).collect()
    }
}

fn fill_standard(
    shape: &Partition,
    rows: &mut Vec<Vec<usize>>,
    next: usize,
    n: usize,
    out: &mut Vec<Tableau>,
) {
    if next > n {
        out.push(Tableau { shape: shape.clone(), rows: rows.clone() });
        return;
    }
    for r in 0..rows.len() {
        let len = rows[r].len();
        if len < shape.parts[r] && (r == 0 || rows[r - 1].len() > len) {
            rows[r].push(next);
            fill_standard(shape, rows, next + 1, n, out);
            rows[r].pop();
        }
    }
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

/// All partitions of n in lexicographically decreasing order.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn go(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            cur.push(p);
            go(rem - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n().cmp(&other.n()).then_with(|| self.parts.cmp(&other.parts))
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = CombinatError;
    fn try_from(parts: Vec<usize>) -> Result<Self, Self::Error> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        let mut first = true;
        let mut i = 0;
        while i < self.parts.len() {
            let p = self.parts[i];
            let run = self.parts[i..].iter().take_while(|&&q| q == p).count();
            if !first {
                write!(f, ",")?;
            }
            first = false;
            if run > 1 {
                write!(f, "{p}^{run}")?;
            } else {
                write!(f, "{p}")?;
            }
            i += run;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Partition {
    type Err = CombinatError;

    /// Grammar: `"(" item ("," item)* ")"`, item = `int` | `int "^" int`.
    /// The empty partition is written `()`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bytes = s.as_bytes();
        let err = |pos: usize, msg: &str| CombinatError::Parse { pos, msg: msg.to_string() };
        let mut pos = 0;
        let skip_ws = |pos: &mut usize| {
            while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
                *pos += 1;
            }
        };
        let number = |pos: &mut usize| -> Result<usize, CombinatError> {
            let start = *pos;
            while *pos < bytes.len() && bytes[*pos].is_ascii_digit() {
                *pos += 1;
            }
            if start == *pos {
                return Err(err(start, "expected a positive integer"));
            }
            s[start..*pos].parse().map_err(|_| err(start, "integer out of range"))
        };
        skip_ws(&mut pos);
        if bytes.get(pos) != Some(&b'(') {
            return Err(err(pos, "expected '('"));
        }
        pos += 1;
        skip_ws(&mut pos);
        let mut parts = Vec::new();
        if bytes.get(pos) == Some(&b')') {
            pos += 1;
        } else {
            loop {
                skip_ws(&mut pos);
                let at = pos;
                let value = number(&mut pos)?;
                if value == 0 {
                    return Err(err(at, "parts must be positive"));
                }
                skip_ws(&mut pos);
                let mut count = 1;
                if bytes.get(pos) == Some(&b'^') {
                    pos += 1;
                    skip_ws(&mut pos);
                    let at = pos;
                    count = number(&mut pos)?;
                    if count == 0 {
                        return Err(err(at, "exponent must be positive"));
                    }
                    skip_ws(&mut pos);
                }
                if parts.last().is_some_and(|&last| last < value) {
                    return Err(err(at, "parts must be weakly decreasing"));
                }
                parts.extend(std::iter::repeat_n(value, count));
                match bytes.get(pos) {
                    Some(b',') => pos += 1,
                    Some(b')') => {
                        pos += 1;
                        break;
                    }
                    _ => return Err(err(pos, "expected ',' or ')'")),
                }
            }
        }
        skip_ws(&mut pos);
        if pos != bytes.len() {
            return Err(err(pos, "trailing characters"));
        }
        Ok(Partition { parts })
    }
}

/// A bijective filling of [shape] with 1..=n, stored row by row.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Tableau {
    shape: Partition,
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self, CombinatError> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect())
            .map_err(|_| CombinatError::InvalidTableau("row lengths not a partition".into()))?;
        let n = shape.n();
        let seen: BTreeSet<usize> = rows.iter().flatten().copied().collect();
        if seen.len() != n || seen.iter().any(|&x| x == 0 || x > n) {
            return Err(CombinatError::InvalidTableau("entries must be 1..=n".into()));
        }
        Ok(Tableau { shape, rows })
    }

    /// Fills the diagram with 1..=n left to right, top to bottom.
    pub fn row_reading(shape: &Partition) -> Tableau {
        let mut next = 0;
        let rows = shape
            .parts()
            .iter()
            .map(|&p| {
                let row = (next + 1..=next + p).collect();
                next += p;
                row
            })
            .collect();
        Tableau { shape: shape.clone(), rows }
    }

    /// All n! tableaux of the given shape.
    pub fn all_of_shape(shape: &Partition) -> Vec<Tableau> {
        let n = shape.n();
        let mut out = Vec::new();
        let mut perm: Vec<usize> = (1..=n).collect();
        loop {
            out.push(Tableau::fill(shape, &perm));
            if !next_permutation(&mut perm) {
                break;
            }
        }
        out
    }

    fn fill(shape: &Partition, entries: &[usize]) -> Tableau {
        let mut it = entries.iter().copied();
        let rows = shape.parts().iter().map(|&p| it.by_ref().take(p).collect()).collect();
        Tableau { shape: shape.clone(), rows }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn n(&self) -> usize {
        self.shape.n()
    }

    pub fn columns(&self) -> Vec<Vec<usize>> {
        let ncols = self.shape.part(1);
        (0..ncols)
            .map(|j| self.rows.iter().filter_map(|r| r.get(j).copied()).collect())
            .collect()
    }

    /// (row, column), 0-based, of entry x.
    pub fn position(&self, x: usize) -> Option<(usize, usize)> {
        self.rows
            .iter()
            .enumerate()
            .find_map(|(r, row)| row.iter().position(|&y| y == x).map(|c| (r, c)))
    }

    pub fn is_standard(&self) -> bool {
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]));
        let cols_ok = self.columns().iter().all(|c| c.windows(2).all(|w| w[0] < w[1]));
        rows_ok && cols_ok
    }

    /// Relabels entries by `f` (a permutation of 1..=n).
    pub fn map_entries(&self, f: impl Fn(usize) -> usize) -> Tableau {
        Tableau {
            shape: self.shape.clone(),
            rows: self.rows.iter().map(|r| r.iter().map(|&x| f(x)).collect()).collect(),
        }
    }

    /// t(w, x): the tableau with entries w and x interchanged.
    pub fn swap_entries(&self, w: usize, x: usize) -> Tableau {
        self.map_entries(|y| if y == w { x } else if y == x { w } else { y })
    }

    pub fn tabloid(&self) -> Tabloid {
        Tabloid::from_rows(self.rows.clone())
    }
}

/// Lexicographic next permutation in place; false when wrapped around.
pub fn next_permutation(a: &mut [usize]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

/// A row-equivalence class of tableaux, stored with each row sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Tabloid {
    rows: Vec<Vec<usize>>,
}

impl Tabloid {
    pub fn from_rows(mut rows: Vec<Vec<usize>>) -> Self {
        for r in &mut rows {
            r.sort_unstable();
        }
        Tabloid { rows }
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition { parts: self.rows.iter().map(Vec::len).collect() }
    }

    pub fn n(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn map_entries(&self, f: impl Fn(usize) -> usize) -> Tabloid {
        Tabloid::from_rows(self.rows.iter().map(|r| r.iter().map(|&x| f(x)).collect()).collect())
    }

    /// Row index (0-based) of each entry, indexed by entry - 1.
    pub fn row_of(&self) -> Vec<usize> {
        let mut out = vec![0; self.n()];
        for (r, row) in self.rows.iter().enumerate() {
            for &x in row {
                out[x - 1] = r;
            }
        }
        out
    }

    /// m_{i,r}: entries ≤ i in the first r rows.
    pub fn m(&self, i: usize, r: usize) -> usize {
        self.rows.iter().take(r).flatten().filter(|&&x| x <= i).count()
    }

    /// {self} ⊴ {other}: m_{i,r}(self) ≤ m_{i,r}(other) for all i, r.
    pub fn dominated_by(&self, other: &Tabloid) -> bool {
        let n = self.n();
        let r = self.rows.len().max(other.rows.len());
        (1..=n).all(|i| (1..=r).all(|rr| self.m(i, rr) <= other.m(i, rr)))
    }

    /// All tabloids of a shape, in lexicographic order of their row sets.
    pub fn all_of_shape(shape: &Partition) -> Vec<Tabloid> {
        fn go(
            parts: &[usize],
            remaining: &[usize],
            cur: &mut Vec<Vec<usize>>,
            out: &mut Vec<Tabloid>,
        ) {
            let Some((&first, rest)) = parts.split_first() else {
                out.push(Tabloid { rows: cur.clone() });
                return;
            };
            for combo in combinations(remaining, first) {
                let left: Vec<usize> = remaining.iter().copied().filter(|x| !combo.contains(x)).collect();
                cur.push(combo);
                go(rest, &left, cur, out);
                cur.pop();
            }
        }
        let all: Vec<usize> = (1..=shape.n()).collect();
        let mut out = Vec::new();
        go(shape.parts(), &all, &mut Vec::new(), &mut out);
        out
    }
}

/// k-subsets of a sorted slice, in lexicographic order.
pub fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    fn go(items: &[usize], k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            if items.len() - i < k - cur.len() {
                break;
            }
            cur.push(items[i]);
            go(items, k, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(items, k, 0, &mut Vec::new(), &mut out);
    out
}

/// Whether the entries of each row of `t2` lie in pairwise distinct columns of `t1`.
pub fn combinatorial_lemma_check(t1: &Tableau, t2: &Tableau) -> Result<bool, CombinatError> {
    if t1.n() != t2.n() {
        return Err(CombinatError::SizeMismatch(t1.n(), t2.n()));
    }
    let mut col_of = vec![0; t1.n() + 1];
    for row in t1.rows() {
        for (c, &x) in row.iter().enumerate() {
            col_of[x] = c;
        }
    }
    Ok(t2.rows().iter().all(|row| {
        let cols: BTreeSet<usize> = row.iter().map(|&x| col_of[x]).collect();
        cols.len() == row.len()
    }))
}

/// Checks the adjacency property of the tabloid order for every tableau of
/// every shape of size n: if x-1 is lower than x in t, nothing lies strictly
/// between {t} and {t(x-1,x)}. Returns the first counterexample, if any.
pub fn adjacency_lemma_counterexample(n: usize) -> Option<(Tableau, usize, Tabloid)> {
    for shape in partitions(n) {
        let tabloids = Tabloid::all_of_shape(&shape);
        for t in Tableau::all_of_shape(&shape) {
            for x in 2..=n {
                let (rw, _) = t.position(x - 1).expect("entry present");
                let (rx, _) = t.position(x).expect("entry present");
                if rw <= rx {
                    continue;
                }
                let lo = t.tabloid();
                let hi = t.swap_entries(x - 1, x).tabloid();
                let strictly = |a: &Tabloid, b: &Tabloid| a != b && a.dominated_by(b);
                if !strictly(&lo, &hi) {
                    return Some((t.clone(), x, hi));
                }
                if let Some(mid) = tabloids.iter().find(|s| strictly(&lo, s) && strictly(s, &hi)) {
                    return Some((t.clone(), x, mid.clone()));
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn parse_exponent_notation() {
        let l = p("(4,2^2,1)");
        assert_eq!(l.parts(), &[4, 2, 2, 1]);
        assert_eq!(l.n(), 9);
        assert_eq!(p("(1^5)").parts(), &[1; 5]);
        assert_eq!(p("()").n(), 0);
        assert_eq!(l.to_string(), "(4,2^2,1)");
    }

    #[test]
    fn parse_errors_carry_positions() {
        match "(3,4)".parse::<Partition>() {
            Err(CombinatError::Parse { pos, .. }) => assert_eq!(pos, 3),
            other => panic!("unexpected {other:?}"),
        }
        assert!("(3,0)".parse::<Partition>().is_err());
        assert!("3,2".parse::<Partition>().is_err());
        assert!("(3,2".parse::<Partition>().is_err());
        assert!("(3,-2)".parse::<Partition>().is_err());
        assert!("(3,2)x".parse::<Partition>().is_err());
    }

    #[test]
    fn conjugates() {
        assert_eq!(p("(4,2,2,1)").conjugate(), p("(4,3,1,1)"));
        assert_eq!(p("(5)").conjugate(), p("(1^5)"));
        assert_eq!(p("(3,2)").conjugate(), p("(2,2,1)"));
    }

    #[test]
    fn dominance_examples() {
        assert!(p("(4,2)").dominates(&p("(3,3)")).unwrap());
        assert!(!p("(3,3)").dominates(&p("(4,2)")).unwrap());
        assert!(p("(3,3)").dominates(&p("(3,3)")).unwrap());
        assert!(p("(3)").dominates(&p("(2,1,1)")).is_err());
    }

    #[test]
    fn lex_examples() {
        assert_eq!(p("(5,1)").lex_compare(&p("(4,2)")).unwrap(), Ordering::Greater);
        assert_eq!(p("(3,1,1,1)").lex_compare(&p("(2,2,2)")).unwrap(), Ordering::Greater);
        assert_eq!(p("(2,2)").lex_compare(&p("(2,2)")).unwrap(), Ordering::Equal);
    }

    #[test]
    fn addable_and_removable() {
        let l = p("(4,2,2,1)");
        let added: BTreeSet<Partition> =
            l.addable_nodes().into_iter().map(|nd| l.add_node(nd).unwrap()).collect();
        let want: BTreeSet<Partition> =
            ["(5,2^2,1)", "(4,3,2,1)", "(4,2^3)", "(4,2^2,1^2)"].iter().map(|s| p(s)).collect();
        assert_eq!(added, want);
        let removed: BTreeSet<Partition> =
            l.removable_nodes().into_iter().map(|nd| l.remove_node(nd).unwrap()).collect();
        let want: BTreeSet<Partition> =
            ["(3,2^2,1)", "(4,2,1^2)", "(4,2^2)"].iter().map(|s| p(s)).collect();
        assert_eq!(removed, want);
        assert_eq!(p("(1)").addable_nodes(), vec![DiagramNode { i: 1, j: 2 }, DiagramNode { i: 2, j: 1 }]);
    }

    #[test]
    fn standard_tableaux_counts() {
        assert_eq!(p("(4)").standard_tableaux().len(), 1);
        assert_eq!(p("(2,1)").standard_tableaux().len(), 2);
        assert_eq!(p("(3,2)").standard_tableaux().len(), 5);
        for n in 1..=7 {
            for l in partitions(n) {
                let ts = l.standard_tableaux();
                assert!(ts.iter().all(Tableau::is_standard));
                assert_eq!(ts.len() as u64, l.count_standard_tableaux());
                let distinct: BTreeSet<_> = ts.iter().collect();
                assert_eq!(distinct.len(), ts.len());
            }
        }
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=8).map(|n| partitions(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
        let five = partitions(5);
        assert!(five.windows(2).all(|w| w[0].parts() > w[1].parts()));
    }

    #[test]
    fn class_sizes_sum_to_factorial() {
        for n in 1..=7 {
            let total: BigUint = partitions(n).iter().map(Partition::class_size).sum();
            assert_eq!(total, factorial(n));
        }
    }

    #[test]
    fn lemma_check_examples() {
        let t = Tableau::row_reading(&p("(3,2)"));
        assert!(combinatorial_lemma_check(&t, &t).unwrap());
        let t1 = Tableau::row_reading(&p("(2,2)"));
        let t2 = Tableau::row_reading(&p("(4)"));
        assert!(!combinatorial_lemma_check(&t1, &t2).unwrap());
    }

    #[test]
    fn lemma_check_implies_dominance_exhaustive() {
        for n in 1..=5 {
            let shapes = partitions(n);
            let tabs: Vec<Vec<Tableau>> = shapes.iter().map(Tableau::all_of_shape).collect();
            for (a, ta) in shapes.iter().zip(&tabs) {
                for (b, tb) in shapes.iter().zip(&tabs) {
                    let dom = a.dominates(b).unwrap();
                    if dom {
                        continue;
                    }
                    for t1 in ta {
                        for t2 in tb {
                            assert!(!combinatorial_lemma_check(t1, t2).unwrap(), "{a} {b}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn adjacency_lemma_exhaustive() {
        for n in 1..=5 {
            assert_eq!(adjacency_lemma_counterexample(n), None, "n = {n}");
        }
    }

    #[test]
    fn tabloids_enumerate_multinomially() {
        let shape = p("(3,2,1)");
        let all = Tabloid::all_of_shape(&shape);
        assert_eq!(all.len(), 60);
        let distinct: BTreeSet<_> = all.iter().collect();
        assert_eq!(distinct.len(), 60);
    }

    #[test]
    fn json_is_expanded_parts() {
        let l = p("(4,2^2,1)");
        assert_eq!(serde_json::to_string(&l).unwrap(), "[4,2,2,1]");
        let back: Partition = serde_json::from_str("[4,2,2,1]").unwrap();
        assert_eq!(back, l);
        assert!(serde_json::from_str::<Partition>("[1,2]").is_err());
    }
}
