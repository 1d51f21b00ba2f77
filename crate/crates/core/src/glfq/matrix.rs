//! Matrices over F_q, the groups GL_n(F_q) and their standard subgroups.

use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Serialize, Serializer};

use crate::symgroup::Permutation;

use super::field::{field_of_order, Field, Fq};
use super::group::{FiniteGroup, GroupElement};
use super::GlError;

pub const MAX_DIM: usize = 4;

#[derive(Clone, Copy)]
pub struct FqMatrix {
    field: &'static Field,
    n: u8,
    e: [Fq; MAX_DIM * MAX_DIM],
}

impl PartialEq for FqMatrix {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.e == other.e && self.field.order() == other.field.order()
    }
}

impl Eq for FqMatrix {}

impl Hash for FqMatrix {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.e[..(self.n as usize * MAX_DIM)].hash(state);
    }
}

impl PartialOrd for FqMatrix {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FqMatrix {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.n, self.e).cmp(&(other.n, other.e))
    }
}

impl FqMatrix {
    pub fn zero(field: &'static Field, n: usize) -> Self {
        assert!(n <= MAX_DIM, "matrix dimension {n} exceeds {MAX_DIM}");
        FqMatrix { field, n: n as u8, e: [0; MAX_DIM * MAX_DIM] }
    }

    pub fn identity(field: &'static Field, n: usize) -> Self {
        let mut m = Self::zero(field, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(field: &'static Field, rows: &[Vec<Fq>]) -> Result<Self, GlError> {
        let n = rows.len();
        if n == 0 || n > MAX_DIM || rows.iter().any(|r| r.len() != n) {
            return Err(GlError::InvalidArgument(format!("expected a square matrix of size ≤ {MAX_DIM}")));
        }
        let mut m = Self::zero(field, n);
        for (i, r) in rows.iter().enumerate() {
            for (j, &x) in r.iter().enumerate() {
                if x as u32 >= field.order() {
                    return Err(GlError::InvalidArgument(format!("entry {x} is not in F_{}", field.order())));
                }
                m.set(i, j, x);
            }
        }
        Ok(m)
    }

    pub fn diag(field: &'static Field, d: &[Fq]) -> Self {
        let mut m = Self::zero(field, d.len());
        for (i, &x) in d.iter().enumerate() {
            m.set(i, i, x);
        }
        m
    }

    /// I + c·E_ij.
    pub fn elementary(field: &'static Field, n: usize, i: usize, j: usize, c: Fq) -> Self {
        let mut m = Self::identity(field, n);
        m.set(i, j, field.add(m.get(i, j), c));
        m
    }

    /// The permutation matrix with a 1 in row w(j), column j.
    pub fn permutation(field: &'static Field, w: &Permutation) -> Self {
        let n = w.degree();
        let mut m = Self::zero(field, n);
        for j in 1..=n {
            m.set(w.apply(j) - 1, j - 1, 1);
        }
        m
    }

    pub fn field(&self) -> &'static Field {
        self.field
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn get(&self, i: usize, j: usize) -> Fq {
        self.e[i * MAX_DIM + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: Fq) {
        self.e[i * MAX_DIM + j] = x;
    }

    pub fn rows(&self) -> Vec<Vec<Fq>> {
        (0..self.n()).map(|i| (0..self.n()).map(|j| self.get(i, j)).collect()).collect()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.n();
        let f = self.field;
        let mut m = Self::zero(f, n);
        for i in 0..n {
            for j in 0..n {
                let mut s = 0;
                for k in 0..n {
                    s = f.add(s, f.mul(self.get(i, k), other.get(k, j)));
                }
                m.set(i, j, s);
            }
        }
        m
    }

    pub fn trace(&self) -> Fq {
        (0..self.n()).fold(0, |acc, i| self.field.add(acc, self.get(i, i)))
    }

    pub fn det(&self) -> Fq {
        let f = self.field;
        let n = self.n();
        let mut a = self.rows();
        let mut det: Fq = 1;
        for c in 0..n {
            let Some(p) = (c..n).find(|&r| a[r][c] != 0) else { return 0 };
            if p != c {
                a.swap(p, c);
                det = f.neg(det);
            }
            det = f.mul(det, a[c][c]);
            let inv = f.inv(a[c][c]).expect("nonzero pivot");
            for r in c + 1..n {
                let factor = f.mul(a[r][c], inv);
                for k in c..n {
                    let v = f.sub(a[r][k], f.mul(factor, a[c][k]));
                    a[r][k] = v;
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Option<FqMatrix> {
        let f = self.field;
        let n = self.n();
        let mut a = self.rows();
        let mut inv = FqMatrix::identity(f, n).rows();
        for c in 0..n {
            let p = (c..n).find(|&r| a[r][c] != 0)?;
            a.swap(p, c);
            inv.swap(p, c);
            let s = f.inv(a[c][c]).expect("nonzero pivot");
            for k in 0..n {
                a[c][k] = f.mul(a[c][k], s);
                inv[c][k] = f.mul(inv[c][k], s);
            }
            for r in 0..n {
                if r != c && a[r][c] != 0 {
                    let factor = a[r][c];
                    for k in 0..n {
                        a[r][k] = f.sub(a[r][k], f.mul(factor, a[c][k]));
                        inv[r][k] = f.sub(inv[r][k], f.mul(factor, inv[c][k]));
                    }
                }
            }
        }
        FqMatrix::from_rows(f, &inv).ok()
    }

    pub fn is_invertible(&self) -> bool {
        self.det() != 0
    }

    /// Exponent t with Ψ(X) = ζ_p^t, namely Tr_{F_q/F_p}(trace X).
    pub fn psi_exponent(&self) -> u32 {
        self.field.trace(self.trace())
    }

    /// Block of rows r0..r1 and columns c0..c1.
    pub fn block(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> FqMatrix {
        assert_eq!(r1 - r0, c1 - c0, "blocks must be square");
        let mut m = Self::zero(self.field, r1 - r0);
        for i in r0..r1 {
            for j in c0..c1 {
                m.set(i - r0, j - c0, self.get(i, j));
            }
        }
        m
    }

    pub fn block_diag(a: &FqMatrix, b: &FqMatrix) -> FqMatrix {
        let n = a.n() + b.n();
        let mut m = Self::zero(a.field, n);
        for i in 0..a.n() {
            for j in 0..a.n() {
                m.set(i, j, a.get(i, j));
            }
        }
        for i in 0..b.n() {
            for j in 0..b.n() {
                m.set(a.n() + i, a.n() + j, b.get(i, j));
            }
        }
        m
    }

    pub fn lower_left_zero(&self, k: usize) -> bool {
        (k..self.n()).all(|i| (0..k).all(|j| self.get(i, j) == 0))
    }

    pub fn upper_right_zero(&self, k: usize) -> bool {
        (0..k).all(|i| (k..self.n()).all(|j| self.get(i, j) == 0))
    }

    pub fn is_identity_block(&self, r0: usize, r1: usize) -> bool {
        (r0..r1).all(|i| (r0..r1).all(|j| self.get(i, j) == Fq::from(i == j)))
    }

    pub fn is_scalar(&self) -> bool {
        let a = self.get(0, 0);
        (0..self.n()).all(|i| (0..self.n()).all(|j| self.get(i, j) == if i == j { a } else { 0 }))
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.n()).all(|i| (0..self.n()).all(|j| i == j || self.get(i, j) == 0))
    }

    pub fn is_upper_triangular(&self) -> bool {
        (0..self.n()).all(|i| (0..i).all(|j| self.get(i, j) == 0))
    }

    pub fn is_permutation_matrix(&self) -> bool {
        (0..self.n()).all(|i| {
            (0..self.n()).filter(|&j| self.get(i, j) != 0).count() == 1
                && (0..self.n()).all(|j| self.get(i, j) <= 1)
        }) && self.is_invertible()
    }
}

impl GroupElement for FqMatrix {
    fn compose(&self, other: &Self) -> Self {
        self.mul(other)
    }

    fn invert(&self) -> Self {
        self.inverse().expect("group elements are invertible")
    }
}

impl fmt::Display for FqMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.n() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for j in 0..self.n() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for FqMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for FqMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.rows().serialize(s)
    }
}

pub type GlGroup = FiniteGroup<FqMatrix>;

pub fn gl_name(n: usize, q: u32) -> String {
    format!("GL({n},{q})")
}

/// GL_n(F_q), enumerated once and shared.
pub fn gl_group(n: usize, q: u32) -> Result<Arc<GlGroup>, GlError> {
    static GROUPS: OnceLock<Mutex<HashMap<(usize, u32), Arc<GlGroup>>>> = OnceLock::new();
    let groups = GROUPS.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(g) = groups.lock().expect("group registry poisoned").get(&(n, q)) {
        return Ok(g.clone());
    }
    if n == 0 || n > MAX_DIM {
        return Err(GlError::InvalidArgument(format!("GL_n needs 1 ≤ n ≤ {MAX_DIM}")));
    }
    let f = field_of_order(q)?;
    let order: u128 = (0..n as u32).map(|i| (q as u128).pow(n as u32) - (q as u128).pow(i)).product();
    let bound = super::max_group_order();
    if order > bound as u128 {
        return Err(GlError::GroupTooLarge { name: gl_name(n, q), bound });
    }
    let mut gens = Vec::new();
    let mut d = vec![1; n];
    d[0] = f.generator();
    gens.push(FqMatrix::diag(f, &d));
    for i in 0..n {
        for j in 0..n {
            if i != j {
                gens.push(FqMatrix::elementary(f, n, i, j, 1));
            }
        }
    }
    let g = Arc::new(FiniteGroup::generate(gl_name(n, q), FqMatrix::identity(f, n), &gens)?);
    groups.lock().expect("group registry poisoned").insert((n, q), g.clone());
    Ok(g)
}

fn parse_pair(s: &str) -> Option<(usize, usize)> {
    let inner = s.strip_prefix('(')?.strip_suffix(')')?;
    let (a, b) = inner.split_once(',')?;
    Some((a.trim().parse().ok()?, b.trim().parse().ok()?))
}

/// Named subgroups of GL_n(F_q): "U(k,l)", "P(k,l)", "L(k,l)" with k + l = n,
/// "B", "T", "W", "Z", and for n = 2 "ZN" and "E" (the embedded F_{q²}^*).
pub fn gl_subgroup(g: &GlGroup, spec: &str) -> Result<GlGroup, GlError> {
    let n = g.identity().n();
    let f = g.identity().field();
    let name = format!("{}/{}", g.name(), spec);
    let bad = || GlError::InvalidArgument(format!("unknown subgroup {spec:?} of {}", g.name()));
    let spec = spec.trim();
    if let Some(kind) = spec.chars().next().filter(|_| spec.len() > 1 && spec.as_bytes()[1] == b'(') {
        let (k, l) = parse_pair(&spec[1..]).ok_or_else(bad)?;
        if k + l != n {
            return Err(bad());
        }
        return match kind {
            'U' => g.subgroup(name, |x| x.lower_left_zero(k) && x.is_identity_block(0, k) && x.is_identity_block(k, n)),
            'P' => g.subgroup(name, |x| x.lower_left_zero(k)),
            'L' => g.subgroup(name, |x| x.lower_left_zero(k) && x.upper_right_zero(k)),
            _ => Err(bad()),
        };
    }
    match spec {
        "B" => g.subgroup(name, FqMatrix::is_upper_triangular),
        "T" => g.subgroup(name, FqMatrix::is_diagonal),
        "W" => g.subgroup(name, FqMatrix::is_permutation_matrix),
        "Z" => g.subgroup(name, FqMatrix::is_scalar),
        "ZN" if n == 2 => g.subgroup(name, |x| x.get(1, 0) == 0 && x.get(0, 0) == x.get(1, 1)),
        "E" if n == 2 => {
            let sigma = f
                .least_non_square()
                .ok_or_else(|| GlError::InvalidArgument("E needs odd characteristic".into()))?;
            nonsplit_torus(g, sigma)
        }
        _ => Err(bad()),
    }
}

/// {[[a, bσ], [b, a]]} ≅ F_{q²}^* for a non-square σ.
pub fn nonsplit_torus(g: &GlGroup, sigma: Fq) -> Result<GlGroup, GlError> {
    let f = g.identity().field();
    if f.is_square(sigma) {
        return Err(GlError::InvalidArgument(format!("{sigma} is a square")));
    }
    let name = format!("{}/E[{sigma}]", g.name());
    g.subgroup(name, |x| x.get(0, 0) == x.get(1, 1) && x.get(0, 1) == f.mul(x.get(1, 0), sigma))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        assert_eq!(gl_group(2, 3).unwrap().order(), 48);
        assert_eq!(gl_group(3, 2).unwrap().order(), 168);
        assert_eq!(gl_group(2, 4).unwrap().order(), 180);
        assert_eq!(gl_group(1, 5).unwrap().order(), 4);
        assert!(matches!(gl_group(4, 3), Err(GlError::GroupTooLarge { .. })));
    }

    #[test]
    fn unipotent_is_normal_in_parabolic() {
        let g = gl_group(2, 3).unwrap();
        let u = gl_subgroup(&g, "U(1,1)").unwrap();
        let p = gl_subgroup(&g, "P(1,1)").unwrap();
        let l = gl_subgroup(&g, "L(1,1)").unwrap();
        assert_eq!((u.order(), p.order(), l.order()), (3, 12, 4));
        for x in p.elements() {
            for y in u.elements() {
                assert!(u.contains(&p.conjugate(x, y)));
            }
        }
    }

    #[test]
    fn named_subgroups() {
        let g = gl_group(3, 2).unwrap();
        assert_eq!(gl_subgroup(&g, "W").unwrap().order(), 6);
        assert_eq!(gl_subgroup(&g, "B").unwrap().order(), 8);
        assert_eq!(gl_subgroup(&g, "P(1,2)").unwrap().order(), 24);
        assert_eq!(gl_subgroup(&g, "Z").unwrap().order(), 1);
        assert!(gl_subgroup(&g, "P(1,1)").is_err());
        let g = gl_group(2, 3).unwrap();
        let e = gl_subgroup(&g, "E").unwrap();
        assert_eq!(e.order(), 8);
        assert!(e.is_abelian());
        assert!((0..8).any(|i| e.element_order(i) == 8));
        assert_eq!(gl_subgroup(&g, "ZN").unwrap().order(), 6);
    }

    #[test]
    fn permutation_matrices_compose() {
        let f = field_of_order(2).unwrap();
        let s = Permutation::from_cycles("(1,2,3)", 3).unwrap();
        let t = Permutation::from_cycles("(1,2)", 3).unwrap();
        let lhs = FqMatrix::permutation(f, &(&s * &t));
        let rhs = FqMatrix::permutation(f, &s).mul(&FqMatrix::permutation(f, &t));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn determinant() {
        let f = field_of_order(3).unwrap();
        let m = FqMatrix::from_rows(f, &[vec![1, 2], vec![2, 1]]).unwrap();
        assert_eq!(m.det(), 0);
        let m = FqMatrix::from_rows(f, &[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(m.det(), 2);
        let g = gl_group(2, 3).unwrap();
        for x in g.elements() {
            assert_eq!(x.mul(&x.inverse().unwrap()), *g.identity());
        }
    }
}
