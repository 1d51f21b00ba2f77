//! Permutations, cycle types, Young subgroups and their double cosets.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::combinat::{next_permutation, partitions, Partition};

/// Largest n for which whole-group enumeration is allowed by default.
pub const DEFAULT_MAX_N: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymError {
    #[error("not a permutation of 1..={0}")]
    NotBijective(usize),
    #[error("cycle notation parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("Σ_{n} exceeds the enumeration bound {bound}")]
    TooLarge { n: usize, bound: usize },
    #[error("block sizes a={a}, α={alpha} out of range for m={m}")]
    OutOfRange { a: usize, alpha: usize, m: usize },
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
}

/// A permutation of {1,…,n}. Internally 0-based; products compose right to left:
/// `(s * t)(i) = s(t(i))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleData {
    /// Cycles as 1-based sequences, fixed points included, each starting at its
    /// smallest element, ordered by that element.
    pub cycles: Vec<Vec<usize>>,
    pub cycle_type: Partition,
    pub sign: i8,
    /// l(σ): the number of cycles.
    pub length: usize,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n).collect() }
    }

    /// From 1-based images `[σ(1), …, σ(n)]`.
    pub fn from_images(images: &[usize]) -> Result<Self, SymError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in images {
            if x == 0 || x > n || seen[x - 1] {
                return Err(SymError::NotBijective(n));
            }
            seen[x - 1] = true;
        }
        Ok(Permutation { images: images.iter().map(|&x| x - 1).collect() })
    }

    /// Parses cycle notation such as `(1,4,7,8,6)(2,5,3)` as an element of Σ_n.
    pub fn from_cycles(text: &str, n: usize) -> Result<Self, SymError> {
        let err = |pos: usize, msg: &str| SymError::Parse { pos, msg: msg.to_string() };
        let bytes = text.as_bytes();
        let mut images: Vec<usize> = (0..n).collect();
        let mut used = vec![false; n];
        let mut pos = 0;
        while pos < bytes.len() {
            match bytes[pos] {
                b' ' => {
                    pos += 1;
                    continue;
                }
                b'(' => pos += 1,
                _ => return Err(err(pos, "expected '('")),
            }
            let mut cycle = Vec::new();
            loop {
                while bytes.get(pos) == Some(&b' ') {
                    pos += 1;
                }
                let start = pos;
                while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                    pos += 1;
                }
                if start == pos {
                    if cycle.is_empty() && bytes.get(pos) == Some(&b')') {
                        pos += 1;
                        break;
                    }
                    return Err(err(start, "expected a point"));
                }
                let x: usize = text[start..pos].parse().map_err(|_| err(start, "bad integer"))?;
                if x == 0 || x > n {
                    return Err(err(start, "point out of range"));
                }
                if used[x - 1] {
                    return Err(err(start, "point repeated"));
                }
                used[x - 1] = true;
                cycle.push(x - 1);
                while bytes.get(pos) == Some(&b' ') {
                    pos += 1;
                }
                match bytes.get(pos) {
                    Some(b',') => pos += 1,
                    Some(b')') => {
                        pos += 1;
                        break;
                    }
                    _ => return Err(err(pos, "expected ',' or ')'")),
                }
            }
            for (i, &x) in cycle.iter().enumerate() {
                images[x] = cycle[(i + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    /// Builds the permutation whose cycles are the given 1-based sequences.
    pub fn from_cycle_list(cycles: &[Vec<usize>], n: usize) -> Result<Self, SymError> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut used = vec![false; n];
        for c in cycles {
            for (i, &x) in c.iter().enumerate() {
                if x == 0 || x > n || used[x - 1] {
                    return Err(SymError::NotBijective(n));
                }
                used[x - 1] = true;
                images[x - 1] = c[(i + 1) % c.len()] - 1;
            }
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// σ(i) for 1-based i.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1] + 1
    }

    /// 1-based image array.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x + 1).collect()
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn cycle_data(&self) -> CycleData {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut c = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                c.push(x + 1);
                x = self.images[x];
            }
            cycles.push(c);
        }
        let length = cycles.len();
        let cycle_type = Partition::from_unsorted(cycles.iter().map(Vec::len).collect());
        let sign = if (n - length) % 2 == 0 { 1 } else { -1 };
        CycleData { cycles, cycle_type, sign, length }
    }

    pub fn cycle_type(&self) -> Partition {
        self.cycle_data().cycle_type
    }

    pub fn sign(&self) -> i8 {
        self.cycle_data().sign
    }

    /// l(σ), the number of cycles including fixed points.
    pub fn num_cycles(&self) -> usize {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut count = 0;
        for start in 0..n {
            if !seen[start] {
                count += 1;
                let mut x = start;
                while !seen[x] {
                    seen[x] = true;
                    x = self.images[x];
                }
            }
        }
        count
    }

    pub fn order(&self) -> usize {
        self.cycle_data()
            .cycles
            .iter()
            .fold(1, |acc, c| num_integer::lcm(acc, c.len()))
    }

    /// Whether σ maps {1..k} onto itself (and hence lies in Σ_k × Σ_{n-k}).
    pub fn preserves_prefix(&self, k: usize) -> bool {
        self.images[..k].iter().all(|&x| x < k)
    }

    /// Extends σ ∈ Σ_n to Σ_{n+extra} fixing the new points.
    pub fn extend(&self, extra: usize) -> Self {
        let n = self.images.len();
        let mut images = self.images.clone();
        images.extend(n..n + extra);
        Permutation { images }
    }

    /// All n! permutations in lexicographic order of their image arrays.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut cur: Vec<usize> = (0..n).collect();
        let mut out = Vec::new();
        loop {
            out.push(Permutation { images: cur.clone() });
            if !next_permutation(&mut cur) {
                break;
            }
        }
        out
    }
}

impl Mul for &Permutation {
    type Output = Permutation;
    fn mul(self, rhs: &Permutation) -> Permutation {
        assert_eq!(self.degree(), rhs.degree(), "degree mismatch");
        Permutation { images: rhs.images.iter().map(|&x| self.images[x]).collect() }
    }
}

impl Mul for Permutation {
    type Output = Permutation;
    fn mul(self, rhs: Permutation) -> Permutation {
        &self * &rhs
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cd = self.cycle_data();
        let nontrivial: Vec<_> = cd.cycles.iter().filter(|c| c.len() > 1).collect();
        if nontrivial.is_empty() {
            return write!(f, "()");
        }
        for c in nontrivial {
            let s: Vec<String> = c.iter().map(usize::to_string).collect();
            write!(f, "({})", s.join(","))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl FromStr for Permutation {
    type Err = SymError;
    /// Cycle notation; the degree is the largest point mentioned.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let n = s
            .split(|c: char| !c.is_ascii_digit())
            .filter_map(|t| t.parse::<usize>().ok())
            .max()
            .unwrap_or(0);
        Permutation::from_cycles(s, n)
    }
}

impl Serialize for Permutation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.images().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(d)?;
        Permutation::from_images(&v).map_err(serde::de::Error::custom)
    }
}

/// The canonical element of cycle type λ: cycles in order of decreasing length on
/// consecutive points, e.g. (1,2,3)(4,5) for (3,2).
pub fn class_representative(lambda: &Partition) -> Permutation {
    let mut images = Vec::with_capacity(lambda.n());
    let mut start = 0;
    for &len in lambda.parts() {
        for i in 0..len {
            images.push(start + (i + 1) % len);
        }
        start += len;
    }
    Permutation { images }
}

/// Conjugacy classes of Σ_n keyed by cycle type, with representative and size.
pub fn conjugacy_classes(
    n: usize,
    bound: usize,
) -> Result<BTreeMap<Partition, (Permutation, BigUint)>, SymError> {
    if n > bound {
        return Err(SymError::TooLarge { n, bound });
    }
    Ok(partitions(n)
        .into_iter()
        .map(|l| {
            let rep = class_representative(&l);
            let size = l.class_size();
            (l, (rep, size))
        })
        .collect())
}

/// Intersection numbers k_{t,v} = #(g(J_t) ∩ I_v) for the Young subgroups
/// Σ_a × Σ_{m-a} (blocks I_1, I_2) and Σ_α × Σ_{m-α} (blocks J_1, J_2).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct KMatrix {
    pub k11: usize,
    pub k12: usize,
    pub k21: usize,
    pub k22: usize,
}

impl KMatrix {
    /// All solutions of the margin equations for (a, α, m), ordered by k11.
    pub fn solutions(a: usize, alpha: usize, m: usize) -> Result<Vec<KMatrix>, SymError> {
        check_range(a, alpha, m)?;
        let lo = (a + alpha).saturating_sub(m);
        let hi = a.min(alpha);
        Ok((lo..=hi)
            .map(|k11| KMatrix {
                k11,
                k12: alpha - k11,
                k21: a - k11,
                k22: m + k11 - a - alpha,
            })
            .collect())
    }

    pub fn satisfies(&self, a: usize, alpha: usize, m: usize) -> bool {
        self.k11 + self.k12 == alpha
            && self.k21 + self.k22 == m - alpha
            && self.k11 + self.k21 == a
            && self.k12 + self.k22 == m - a
    }
}

fn check_range(a: usize, alpha: usize, m: usize) -> Result<(), SymError> {
    if a > m || alpha > m {
        return Err(SymError::OutOfRange { a, alpha, m });
    }
    Ok(())
}

/// The k-matrix of g: k_{t,v} = #(g(J_t) ∩ I_v).
pub fn k_invariant(g: &Permutation, a: usize, alpha: usize) -> KMatrix {
    let mut k = [[0usize; 2]; 2];
    for (j, &x) in g.images.iter().enumerate() {
        let t = usize::from(j >= alpha);
        let v = usize::from(x >= a);
        k[t][v] += 1;
    }
    KMatrix { k11: k[0][0], k12: k[0][1], k21: k[1][0], k22: k[1][1] }
}

/// w(k): maps J(k_{t,v}) onto I(k_{t,v}) preserving order, which interchanges
/// the middle blocks J(k12) and J(k21).
pub fn w_of(k: &KMatrix, a: usize, alpha: usize, m: usize) -> Permutation {
    debug_assert!(k.satisfies(a, alpha, m));
    let mut images = vec![0; m];
    // (J block start, I block start, length), all 0-based.
    let blocks = [
        (0, 0, k.k11),
        (k.k11, a, k.k12),
        (alpha, k.k11, k.k21),
        (alpha + k.k21, a + k.k12, k.k22),
    ];
    for (js, is, len) in blocks {
        for d in 0..len {
            images[js + d] = is + d;
        }
    }
    Permutation { images }
}

/// One (k, w(k)) per double coset of (Σ_a×Σ_{m-a}, Σ_α×Σ_{m-α}) in Σ_m.
pub fn young_double_cosets(
    a: usize,
    alpha: usize,
    m: usize,
) -> Result<Vec<(KMatrix, Permutation)>, SymError> {
    Ok(KMatrix::solutions(a, alpha, m)?
        .into_iter()
        .map(|k| {
            let w = w_of(&k, a, alpha, m);
            (k, w)
        })
        .collect())
}

/// Factors g = u·w·h with u ∈ Σ_a×Σ_{m-a}, w = w(k(g)) and h ∈ Σ_α×Σ_{m-α}.
pub fn double_coset_decompose(
    g: &Permutation,
    a: usize,
    alpha: usize,
    m: usize,
) -> Result<(Permutation, Permutation, Permutation), SymError> {
    check_range(a, alpha, m)?;
    if g.degree() != m {
        return Err(SymError::DegreeMismatch(g.degree(), m));
    }
    let k = k_invariant(g, a, alpha);
    let w = w_of(&k, a, alpha, m);
    // h sends g^{-1}(I_v) ∩ J_t onto J(k_{t,v}) in increasing order.
    let starts = [[0, k.k11], [alpha, alpha + k.k21]];
    let mut next = starts;
    let mut h = vec![0; m];
    for (j, &x) in g.images.iter().enumerate() {
        let t = usize::from(j >= alpha);
        let v = usize::from(x >= a);
        h[j] = next[t][v];
        next[t][v] += 1;
    }
    let h = Permutation { images: h };
    let u = &(g * &h.inverse()) * &w.inverse();
    Ok((u, w, h))
}

/// Permutation matrix with a 1 in row w(j), column j.
pub fn permutation_matrix(w: &Permutation) -> Vec<Vec<u8>> {
    let m = w.degree();
    let mut mat = vec![vec![0u8; m]; m];
    for (j, &x) in w.images.iter().enumerate() {
        mat[x][j] = 1;
    }
    mat
}

/// Partition of Σ_m into (Σ_a×Σ_{m-a}, Σ_α×Σ_{m-α}) double cosets by orbit search.
/// Returns, for each element of `Permutation::all(m)`, the index of its double coset.
pub fn brute_force_double_cosets(a: usize, alpha: usize, m: usize) -> (Vec<Permutation>, Vec<usize>) {
    let all = Permutation::all(m);
    let index: std::collections::HashMap<&Permutation, usize> =
        all.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let transposition = |i: usize| {
        let mut images: Vec<usize> = (0..m).collect();
        images.swap(i, i + 1);
        Permutation { images }
    };
    let left: Vec<Permutation> =
        (0..m.saturating_sub(1)).filter(|&i| i + 1 != a).map(transposition).collect();
    let right: Vec<Permutation> =
        (0..m.saturating_sub(1)).filter(|&i| i + 1 != alpha).map(transposition).collect();
    let mut label = vec![usize::MAX; all.len()];
    let mut next = 0;
    for s in 0..all.len() {
        if label[s] != usize::MAX {
            continue;
        }
        label[s] = next;
        let mut stack = vec![s];
        while let Some(x) = stack.pop() {
            let g = &all[x];
            let nbrs = left.iter().map(|u| u * g).chain(right.iter().map(|h| g * h));
            for y in nbrs {
                let yi = index[&y];
                if label[yi] == usize::MAX {
                    label[yi] = next;
                    stack.push(yi);
                }
            }
        }
        next += 1;
    }
    (all, label)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_data_examples() {
        let id = Permutation::identity(5).cycle_data();
        assert_eq!(id.cycle_type, "(1^5)".parse().unwrap());
        assert_eq!((id.length, id.sign), (5, 1));
        let s = Permutation::from_cycles("(1,4,7,8,6)(2,5,3)", 8).unwrap().cycle_data();
        assert_eq!(s.cycle_type, "(5,3)".parse().unwrap());
        assert_eq!(s.length, 2);
        let t = Permutation::from_cycles("(1,2)", 2).unwrap().cycle_data();
        assert_eq!((t.length, t.sign), (1, -1));
    }

    #[test]
    fn cycle_notation_roundtrip() {
        let s = Permutation::from_cycles("(1,4,7,8,6)(2,5,3)", 8).unwrap();
        assert_eq!(s.to_string(), "(1,4,7,8,6)(2,5,3)");
        assert_eq!(s.apply(1), 4);
        assert_eq!(s.apply(6), 1);
        assert!(Permutation::from_cycles("(1,1)", 3).is_err());
        assert!(Permutation::from_cycles("(1,4)", 3).is_err());
        assert_eq!("(1,2,3)".parse::<Permutation>().unwrap().order(), 3);
    }

    #[test]
    fn composition_is_right_to_left() {
        let s = Permutation::from_cycles("(1,2)", 3).unwrap();
        let t = Permutation::from_cycles("(2,3)", 3).unwrap();
        // (s t)(2) = s(t(2)) = s(3) = 3
        assert_eq!((&s * &t).apply(2), 3);
        assert!((&s * &s.inverse()).is_identity());
    }

    #[test]
    fn class_sizes() {
        let cl = conjugacy_classes(5, DEFAULT_MAX_N).unwrap();
        assert_eq!(cl[&"(2^2,1)".parse().unwrap()].1, BigUint::from(15u32));
        assert_eq!(cl[&"(1^5)".parse().unwrap()].1, BigUint::from(1u32));
        let total: BigUint = cl.values().map(|(_, s)| s.clone()).sum();
        assert_eq!(total, BigUint::from(120u32));
        for (l, (rep, _)) in &cl {
            assert_eq!(&rep.cycle_type(), l);
        }
        assert!(conjugacy_classes(9, DEFAULT_MAX_N).is_err());
    }

    #[test]
    fn brute_force_class_sizes_agree() {
        for n in 1..=6 {
            let mut counts: BTreeMap<Partition, u32> = BTreeMap::new();
            for p in Permutation::all(n) {
                *counts.entry(p.cycle_type()).or_default() += 1;
            }
            for (l, c) in counts {
                assert_eq!(l.class_size(), BigUint::from(c));
            }
        }
    }

    #[test]
    fn w_of_reference_example() {
        let k = KMatrix { k11: 1, k12: 3, k21: 2, k22: 1 };
        assert!(k.satisfies(3, 4, 7));
        let w = w_of(&k, 3, 4, 7);
        let want: Vec<Vec<u8>> = vec![
            vec![1, 0, 0, 0, 0, 0, 0],
            vec![0, 0, 0, 0, 1, 0, 0],
            vec![0, 0, 0, 0, 0, 1, 0],
            vec![0, 1, 0, 0, 0, 0, 0],
            vec![0, 0, 1, 0, 0, 0, 0],
            vec![0, 0, 0, 1, 0, 0, 0],
            vec![0, 0, 0, 0, 0, 0, 1],
        ];
        assert_eq!(permutation_matrix(&w), want);
        assert_eq!(k_invariant(&w, 3, 4), k);
    }

    #[test]
    fn small_coset_counts() {
        assert_eq!(young_double_cosets(1, 1, 2).unwrap().len(), 2);
        for alpha in 0..=4 {
            assert_eq!(young_double_cosets(0, alpha, 4).unwrap().len(), 1);
        }
        assert!(young_double_cosets(5, 1, 4).is_err());
    }

    #[test]
    fn decompose_recomposes_all_of_sigma6() {
        for g in Permutation::all(6) {
            let (u, w, h) = double_coset_decompose(&g, 2, 3, 6).unwrap();
            assert!(u.preserves_prefix(2), "u = {u}");
            assert!(h.preserves_prefix(3), "h = {h}");
            assert_eq!(&(&u * &w) * &h, g);
            assert_eq!(w, w_of(&k_invariant(&g, 2, 3), 2, 3, 6));
        }
        let id = Permutation::identity(5);
        let (u, w, h) = double_coset_decompose(&id, 2, 3, 5).unwrap();
        assert!(u.is_identity() && w.is_identity() && h.is_identity());
        for (_, w) in young_double_cosets(3, 4, 7).unwrap() {
            let (u, w2, h) = double_coset_decompose(&w, 3, 4, 7).unwrap();
            assert!(u.is_identity() && h.is_identity());
            assert_eq!(w, w2);
        }
    }
}
