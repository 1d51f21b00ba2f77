//! Graded PSH algebras with integer structure constants, built from towers of
//! finite groups, and verifiers for the axioms.
//!
//! Every instance is materialized as dense tables: the product of two basis
//! labels and each (k, n−k) component of the coproduct of a basis label are
//! stored as integer vectors and matrices. The verifiers only read those
//! tables, so the three instances are checked by the same code.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::classfn::ClassFunction;
use crate::combinat::{partitions, Partition};
use crate::cyclo::{rat, CycloNumber, Rational};
use crate::glfq::{gl_group, gl_subgroup, induce, FiniteGroup, FqMatrix, GlError, GroupElement};
use crate::invariants::wreath::{wreath_group, WreathElement};
use crate::report::CheckReport;
use crate::specht::{induce_young, restrict_young, SpechtError, SymCharacterTable};
use crate::symgroup::Permutation;

#[derive(Debug, Error)]
pub enum PshError {
    #[error(transparent)]
    Group(#[from] GlError),
    #[error(transparent)]
    Specht(#[from] SpechtError),
    #[error("{0} is not an integer combination of irreducibles")]
    NotIntegral(String),
    #[error("degree {got} exceeds the instance bound {maxdeg}")]
    Degree { got: usize, maxdeg: usize },
}

/// Integer combination of basis labels, keyed by (degree, index).
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct PshElement {
    pub coeffs: BTreeMap<(usize, usize), i64>,
}

impl PshElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(deg: usize, idx: usize) -> Self {
        let mut e = Self::zero();
        e.coeffs.insert((deg, idx), 1);
        e
    }

    pub fn from_vec(deg: usize, v: &[i64]) -> Self {
        let mut e = Self::zero();
        for (i, &c) in v.iter().enumerate() {
            e.add_term(deg, i, c);
        }
        e
    }

    pub fn add_term(&mut self, deg: usize, idx: usize, c: i64) {
        if c == 0 {
            return;
        }
        let entry = self.coeffs.entry((deg, idx)).or_insert(0);
        *entry += c;
        if *entry == 0 {
            self.coeffs.remove(&(deg, idx));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// All coefficients non-negative.
    pub fn is_positive(&self) -> bool {
        self.coeffs.values().all(|&c| c >= 0)
    }

    pub fn coeff(&self, deg: usize, idx: usize) -> i64 {
        self.coeffs.get(&(deg, idx)).copied().unwrap_or(0)
    }
}

/// Σ over shared labels of coefficient products.
pub fn psh_inner(x: &PshElement, y: &PshElement) -> i64 {
    x.coeffs.iter().map(|(k, &c)| c * y.coeffs.get(k).copied().unwrap_or(0)).sum()
}

/// Dense product and coproduct tables of a graded PSH algebra truncated at `maxdeg`.
#[derive(Debug, Clone, Serialize)]
pub struct PshStructure {
    pub name: String,
    pub maxdeg: usize,
    pub labels: Vec<Vec<String>>,
    /// `product[a][b][i][j]` is the expansion of ω_{a,i}·ω_{b,j} in degree a+b.
    product: Vec<Vec<Vec<Vec<Vec<i64>>>>>,
    /// `coproduct[n][k][w][i][j]` is the coefficient of ω_{k,i}⊗ω_{n−k,j} in m*(ω_{n,w}).
    coproduct: Vec<Vec<Vec<Vec<Vec<i64>>>>>,
}

impl PshStructure {
    pub fn dim(&self, n: usize) -> usize {
        self.labels[n].len()
    }

    pub fn label(&self, n: usize, i: usize) -> &str {
        &self.labels[n][i]
    }

    pub fn index_of(&self, n: usize, label: &str) -> Option<usize> {
        self.labels.get(n)?.iter().position(|l| l == label)
    }

    pub fn product_rule(&self, a: usize, i: usize, b: usize, j: usize) -> &[i64] {
        &self.product[a][b][i][j]
    }

    pub fn coproduct_rule(&self, n: usize, k: usize, w: usize) -> &[Vec<i64>] {
        &self.coproduct[n][k][w]
    }

    /// Product of two elements; terms above maxdeg are an error.
    pub fn mul(&self, x: &PshElement, y: &PshElement) -> Result<PshElement, PshError> {
        let mut out = PshElement::zero();
        for (&(a, i), &c) in &x.coeffs {
            for (&(b, j), &d) in &y.coeffs {
                if a + b > self.maxdeg {
                    return Err(PshError::Degree { got: a + b, maxdeg: self.maxdeg });
                }
                for (k, &e) in self.product[a][b][i][j].iter().enumerate() {
                    out.add_term(a + b, k, c * d * e);
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, x: &PshElement, e: usize) -> Result<PshElement, PshError> {
        let mut acc = PshElement::basis(0, 0);
        for _ in 0..e {
            acc = self.mul(&acc, x)?;
        }
        Ok(acc)
    }

    /// Labels of degree n with no inner coproduct components.
    pub fn primitives(&self, n: usize) -> Vec<usize> {
        if n == 0 || n > self.maxdeg {
            return Vec::new();
        }
        (0..self.dim(n))
            .filter(|&w| (1..n).all(|k| self.coproduct[n][k][w].iter().flatten().all(|&c| c == 0)))
            .collect()
    }

    fn tuples(&self, maxdeg: usize) -> Vec<(usize, usize)> {
        (0..=maxdeg.min(self.maxdeg)).flat_map(|n| (0..self.dim(n)).map(move |i| (n, i))).collect()
    }

    fn name_of(&self, (n, i): (usize, usize)) -> String {
        self.labels[n][i].clone()
    }

    /// ⟨m(x⊗y), z⟩ = ⟨x⊗y, m*(z)⟩ on all basis triples.
    pub fn verify_self_adjoint(&self, maxdeg: usize) -> CheckReport {
        let mut r = CheckReport::new("self-adjoint", &self.name).with_maxdeg(maxdeg);
        for n in 0..=maxdeg.min(self.maxdeg) {
            for a in 0..=n {
                let b = n - a;
                for i in 0..self.dim(a) {
                    for j in 0..self.dim(b) {
                        for k in 0..self.dim(n) {
                            let lhs = self.product[a][b][i][j][k];
                            let rhs = self.coproduct[n][a][k][i][j];
                            r.record(lhs == rhs, || {
                                format!(
                                    "<{}*{}, {}> = {lhs} but <{}⊗{}, m*({})> = {rhs}",
                                    self.labels[a][i], self.labels[b][j], self.labels[n][k],
                                    self.labels[a][i], self.labels[b][j], self.labels[n][k]
                                )
                            });
                        }
                    }
                }
            }
        }
        r
    }

    pub fn verify_associative(&self, maxdeg: usize) -> CheckReport {
        let mut r = CheckReport::new("associative", &self.name).with_maxdeg(maxdeg);
        let t = self.tuples(maxdeg);
        for &x in &t {
            for &y in &t {
                for &z in &t {
                    if x.0 + y.0 + z.0 > maxdeg.min(self.maxdeg) {
                        continue;
                    }
                    let (ex, ey, ez) = (PshElement::basis(x.0, x.1), PshElement::basis(y.0, y.1), PshElement::basis(z.0, z.1));
                    let left = self.mul(&self.mul(&ex, &ey).expect("bounded"), &ez).expect("bounded");
                    let right = self.mul(&ex, &self.mul(&ey, &ez).expect("bounded")).expect("bounded");
                    r.record(left == right, || {
                        format!("({}·{})·{} ≠ {}·({}·{})", self.name_of(x), self.name_of(y), self.name_of(z), self.name_of(x), self.name_of(y), self.name_of(z))
                    });
                }
            }
        }
        r
    }

    /// (m*⊗1)m* = (1⊗m*)m* on every (a, b, c) component.
    pub fn verify_coassociative(&self, maxdeg: usize) -> CheckReport {
        let mut r = CheckReport::new("coassociative", &self.name).with_maxdeg(maxdeg);
        for n in 0..=maxdeg.min(self.maxdeg) {
            for w in 0..self.dim(n) {
                for a in 0..=n {
                    for b in 0..=n - a {
                        let c = n - a - b;
                        for i in 0..self.dim(a) {
                            for j in 0..self.dim(b) {
                                for k in 0..self.dim(c) {
                                    let left: i64 = (0..self.dim(a + b))
                                        .map(|u| self.coproduct[n][a + b][w][u][k] * self.coproduct[a + b][a][u][i][j])
                                        .sum();
                                    let right: i64 = (0..self.dim(b + c))
                                        .map(|v| self.coproduct[n][a][w][i][v] * self.coproduct[b + c][b][v][j][k])
                                        .sum();
                                    r.record(left == right, || {
                                        format!("m*({}) component ({a},{b},{c}) at ({i},{j},{k}): {left} vs {right}", self.labels[n][w])
                                    });
                                }
                            }
                        }
                    }
                }
            }
        }
        r
    }

    /// m*(x·y) = (m⊗m)(1⊗T⊗1)(m*⊗m*)(x⊗y), with the splittings indexed by k-matrices.
    pub fn verify_hopf(&self, maxdeg: usize) -> CheckReport {
        let mut r = CheckReport::new("hopf", &self.name).with_maxdeg(maxdeg);
        let top = maxdeg.min(self.maxdeg);
        let cases: Vec<(usize, usize, usize, usize)> = (0..=top)
            .flat_map(|a| (0..=top - a).map(move |b| (a, b)))
            .flat_map(|(a, b)| (0..self.dim(a)).flat_map(move |x| (0..self.dim(b)).map(move |y| (a, x, b, y))))
            .collect();
        let results: Vec<Vec<String>> = cases
            .par_iter()
            .map(|&(a, x, b, y)| {
                let n = a + b;
                let xy = &self.product[a][b][x][y];
                let mut failures = Vec::new();
                for c in 0..=n {
                    let (dl, dr) = (self.dim(c), self.dim(n - c));
                    let mut lhs = vec![vec![0i64; dr]; dl];
                    for (z, &m) in xy.iter().enumerate() {
                        if m == 0 {
                            continue;
                        }
                        for i in 0..dl {
                            for j in 0..dr {
                                lhs[i][j] += m * self.coproduct[n][c][z][i][j];
                            }
                        }
                    }
                    let mut rhs = vec![vec![0i64; dr]; dl];
                    let ks = crate::symgroup::KMatrix::solutions(c, a, n).expect("margins in range");
                    for k in ks {
                        let (x1, x2, y1, y2) = (k.k11, k.k12, k.k21, k.k22);
                        for i1 in 0..self.dim(x1) {
                            for i2 in 0..self.dim(x2) {
                                let cx = self.coproduct[a][x1][x][i1][i2];
                                if cx == 0 {
                                    continue;
                                }
                                for j1 in 0..self.dim(y1) {
                                    for j2 in 0..self.dim(y2) {
                                        let cy = self.coproduct[b][y1][y][j1][j2];
                                        if cy == 0 {
                                            continue;
                                        }
                                        let left = &self.product[x1][y1][i1][j1];
                                        let right = &self.product[x2][y2][i2][j2];
                                        for (u, &lu) in left.iter().enumerate() {
                                            if lu == 0 {
                                                continue;
                                            }
                                            for (v, &rv) in right.iter().enumerate() {
                                                rhs[u][v] += cx * cy * lu * rv;
                                            }
                                        }
                                    }
                                }
                            }
                        }
                    }
                    if lhs != rhs {
                        failures.push(format!(
                            "m*({}·{}) component ({c},{}) differs",
                            self.labels[a][x], self.labels[b][y], n - c
                        ));
                    }
                }
                failures
            })
            .collect();
        for f in results {
            r.record(f.is_empty(), || f.join("; "));
        }
        r
    }

    /// Unit and counit: 1·x = x = x·1 and the extreme coproduct components are 1⊗x and x⊗1.
    pub fn verify_unit_counit(&self, maxdeg: usize) -> CheckReport {
        let mut r = CheckReport::new("unit-counit", &self.name).with_maxdeg(maxdeg);
        r.record(self.dim(0) == 1, || format!("R_0 has {} labels", self.dim(0)));
        r.record(self.product[0][0][0][0] == vec![1], || "ε*(1)·ε*(1) ≠ ε*(1)".into());
        for n in 0..=maxdeg.min(self.maxdeg) {
            for w in 0..self.dim(n) {
                let e: Vec<i64> = (0..self.dim(n)).map(|k| (k == w) as i64).collect();
                r.record(self.product[0][n][0][w] == e && self.product[n][0][w][0] == e, || {
                    format!("unit does not fix {}", self.labels[n][w])
                });
                let left: Vec<i64> = self.coproduct[n][0][w][0].clone();
                let right: Vec<i64> = self.coproduct[n][n][w].iter().map(|row| row[0]).collect();
                r.record(left == e && right == e, || format!("counit components of {}", self.labels[n][w]));
            }
        }
        r
    }

    pub fn verify_positivity(&self, maxdeg: usize) -> CheckReport {
        let mut r = CheckReport::new("positivity", &self.name).with_maxdeg(maxdeg);
        for n in 0..=maxdeg.min(self.maxdeg) {
            for a in 0..=n {
                for i in 0..self.dim(a) {
                    for j in 0..self.dim(n - a) {
                        let ok = self.product[a][n - a][i][j].iter().all(|&c| c >= 0);
                        r.record(ok, || format!("{}·{} has a negative coefficient", self.labels[a][i], self.labels[n - a][j]));
                    }
                }
                for w in 0..self.dim(n) {
                    let ok = self.coproduct[n][a][w].iter().flatten().all(|&c| c >= 0);
                    r.record(ok, || format!("m*({}) ({a},{}) has a negative coefficient", self.labels[n][w], n - a));
                }
            }
        }
        r
    }

    /// m* = T∘m*.
    pub fn verify_cocommutative(&self, maxdeg: usize) -> CheckReport {
        let mut r = CheckReport::new("cocommutative", &self.name).with_maxdeg(maxdeg);
        for n in 0..=maxdeg.min(self.maxdeg) {
            for w in 0..self.dim(n) {
                for k in 0..=n {
                    let ok = (0..self.dim(k))
                        .all(|i| (0..self.dim(n - k)).all(|j| self.coproduct[n][k][w][i][j] == self.coproduct[n][n - k][w][j][i]));
                    r.record(ok, || format!("m*({}) is not symmetric in ({k},{})", self.labels[n][w], n - k));
                }
            }
        }
        r
    }

    /// The checks above, in a fixed order.
    pub fn verify_all(&self, maxdeg: usize) -> Vec<CheckReport> {
        vec![
            self.verify_unit_counit(maxdeg),
            self.verify_self_adjoint(maxdeg),
            self.verify_associative(maxdeg),
            self.verify_coassociative(maxdeg),
            self.verify_hopf(maxdeg),
            self.verify_positivity(maxdeg),
            self.verify_cocommutative(maxdeg),
        ]
    }

    /// Splits the basis into the blocks Ω(ρ) = {ω : ⟨ω, ρⁿ⟩ ≠ 0} of the primitives ρ
    /// and checks that products of one element from each block give every basis
    /// label exactly once.
    pub fn decompose(&self, maxdeg: usize) -> Result<Decomposition, PshError> {
        let top = maxdeg.min(self.maxdeg);
        let mut blocks = Vec::new();
        for d in 1..=top {
            for rho in self.primitives(d) {
                let base = PshElement::basis(d, rho);
                let mut members = BTreeSet::new();
                for e in 0..=top / d {
                    for (&key, &c) in &self.pow(&base, e)?.coeffs {
                        if c != 0 {
                            members.insert(key);
                        }
                    }
                }
                blocks.push(Block { primitive: (d, rho), label: self.labels[d][rho].clone(), members });
            }
        }
        let mut overlaps = Vec::new();
        for (x, bx) in blocks.iter().enumerate() {
            for by in &blocks[x + 1..] {
                for m in bx.members.intersection(&by.members) {
                    if m.0 > 0 {
                        overlaps.push(self.name_of(*m));
                    }
                }
            }
        }
        // products ω_1·ω_2⋯ with ω_t ∈ Ω(ρ_t), total degree ≤ top
        let mut products: Vec<PshElement> = vec![PshElement::basis(0, 0)];
        for b in &blocks {
            let mut next = Vec::new();
            for p in &products {
                let deg = p.coeffs.keys().next().map(|k| k.0).unwrap_or(0);
                for &(d, i) in &b.members {
                    if deg + d <= top {
                        next.push(self.mul(p, &PshElement::basis(d, i))?);
                    }
                }
            }
            products = next;
        }
        let mut hits: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        let mut non_basis = Vec::new();
        for p in &products {
            if p.coeffs.len() == 1 && p.coeffs.values().all(|&c| c == 1) {
                *hits.entry(*p.coeffs.keys().next().expect("one term")).or_default() += 1;
            } else {
                non_basis.push(format!("{:?}", p.coeffs));
            }
        }
        let mut unresolved = Vec::new();
        let mut repeated = Vec::new();
        for key in self.tuples(top) {
            match hits.get(&key).copied().unwrap_or(0) {
                0 => unresolved.push(self.name_of(key)),
                1 => {}
                _ => repeated.push(self.name_of(key)),
            }
        }
        Ok(Decomposition { maxdeg: top, blocks, overlaps, non_basis, unresolved, repeated })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Block {
    pub primitive: (usize, usize),
    pub label: String,
    pub members: BTreeSet<(usize, usize)>,
}

/// Outcome of the block decomposition up to `maxdeg`.
#[derive(Debug, Clone, Serialize)]
pub struct Decomposition {
    pub maxdeg: usize,
    pub blocks: Vec<Block>,
    /// Positive-degree labels lying in two blocks.
    pub overlaps: Vec<String>,
    /// Block products that are not a single basis label.
    pub non_basis: Vec<String>,
    /// Labels reached by no block product.
    pub unresolved: Vec<String>,
    /// Labels reached more than once.
    pub repeated: Vec<String>,
}

impl Decomposition {
    pub fn is_tensor_product(&self) -> bool {
        self.overlaps.is_empty() && self.non_basis.is_empty() && self.unresolved.is_empty() && self.repeated.is_empty()
    }

    pub fn report(&self, instance: &str) -> CheckReport {
        let mut r = CheckReport::new("decomposition", instance).with_maxdeg(self.maxdeg);
        r.record(self.overlaps.is_empty(), || format!("labels in two blocks: {:?}", self.overlaps));
        r.record(self.non_basis.is_empty(), || format!("reducible block products: {:?}", self.non_basis));
        r.record(self.unresolved.is_empty(), || format!("unresolved labels: {:?}", self.unresolved));
        r.record(self.repeated.is_empty(), || format!("labels hit twice: {:?}", self.repeated));
        r
    }
}

fn to_int(x: &CycloNumber, what: impl FnOnce() -> String) -> Result<i64, PshError> {
    x.to_rational()
        .filter(|r| r.is_integer())
        .and_then(|r| r.to_integer().to_i64())
        .ok_or_else(|| PshError::NotIntegral(what()))
}

/// The symmetric-group instance: R_n = characters of Σ_n, m = Ind from Σ_a×Σ_b, m* = Res.
pub fn symmetric_instance(maxdeg: usize) -> Result<PshStructure, PshError> {
    let tables: Vec<Arc<SymCharacterTable>> = (0..=maxdeg).map(SymCharacterTable::cached).collect::<Result<_, _>>()?;
    let labels: Vec<Vec<String>> = tables.iter().map(|t| t.partitions.iter().map(Partition::to_string).collect()).collect();
    let rows = |n: usize| -> Vec<Vec<Rational>> {
        tables[n].values.iter().map(|r| r.iter().map(|&v| rat(v)).collect()).collect()
    };
    let all_rows: Vec<Vec<Vec<Rational>>> = (0..=maxdeg).map(rows).collect();
    let z: Vec<Vec<Rational>> = (0..=maxdeg)
        .map(|n| partitions(n).iter().map(|p| Rational::from_integer(num_bigint::BigInt::from(p.z()))).collect())
        .collect();
    // ⟨f, χ⟩ = Σ_ν f(ν)χ(ν)/z_ν, everything real
    let inner = |n: usize, f: &[Rational], chi: &[Rational]| -> Rational {
        f.iter().zip(chi).zip(&z[n]).map(|((a, b), zz)| a * b / zz).sum()
    };
    let int = |r: Rational, what: &dyn Fn() -> String| -> Result<i64, PshError> {
        if r.is_integer() {
            r.to_integer().to_i64().ok_or_else(|| PshError::NotIntegral(what()))
        } else {
            Err(PshError::NotIntegral(what()))
        }
    };

    let mut product = vec![vec![Vec::new(); maxdeg + 1]; maxdeg + 1];
    for a in 0..=maxdeg {
        for b in 0..=maxdeg - a {
            let mut t = Vec::new();
            for (i, f) in all_rows[a].iter().enumerate() {
                let mut row = Vec::new();
                for (j, g) in all_rows[b].iter().enumerate() {
                    let ind = induce_young(a, b, f, g);
                    let v = all_rows[a + b]
                        .iter()
                        .map(|chi| int(inner(a + b, &ind, chi), &|| format!("{}·{}", labels[a][i], labels[b][j])))
                        .collect::<Result<Vec<_>, _>>()?;
                    row.push(v);
                }
                t.push(row);
            }
            product[a][b] = t;
        }
    }

    let mut coproduct = Vec::new();
    for n in 0..=maxdeg {
        let mut by_k = Vec::new();
        for k in 0..=n {
            let mut per_w = Vec::new();
            for (w, chi) in all_rows[n].iter().enumerate() {
                let res = restrict_young(k, n - k, chi);
                let mut m = vec![vec![0i64; all_rows[n - k].len()]; all_rows[k].len()];
                for (i, f) in all_rows[k].iter().enumerate() {
                    for (j, g) in all_rows[n - k].iter().enumerate() {
                        let mut s = Rational::from_integer(0.into());
                        for (li, l) in res.iter().enumerate() {
                            for (mi, v) in l.iter().enumerate() {
                                s += v * &f[li] * &g[mi] / (&z[k][li] * &z[n - k][mi]);
                            }
                        }
                        m[i][j] = int(s, &|| format!("m*({})", labels[n][w]))?;
                    }
                }
                per_w.push(m);
            }
            by_k.push(per_w);
        }
        coproduct.push(by_k);
    }
    Ok(PshStructure { name: format!("Sym(≤{maxdeg})"), maxdeg, labels, product, coproduct })
}

/// Groups G_n with subgroups P ⊇ L, U ◁ P, P = L ⋉ U, and L ≅ G_a × G_b.
pub trait GroupTower: Send + Sync {
    type Elem: GroupElement;

    fn name(&self) -> String;
    /// G_n for n ≥ 1.
    fn group(&self, n: usize) -> Result<Arc<FiniteGroup<Self::Elem>>, PshError>;
    fn parabolic(&self, a: usize, b: usize) -> Result<FiniteGroup<Self::Elem>, PshError>;
    fn levi(&self, a: usize, b: usize) -> Result<FiniteGroup<Self::Elem>, PshError>;
    fn unipotent(&self, a: usize, b: usize) -> Result<FiniteGroup<Self::Elem>, PshError>;
    /// The G_a and G_b components of the Levi part of x ∈ P.
    fn split(&self, x: &Self::Elem, a: usize, b: usize) -> (Self::Elem, Self::Elem);
}

/// Σ_n∫H for H a matrix group; P = L = (Σ_a∫H) × (Σ_b∫H), U = 1.
pub struct WreathTower {
    h: Arc<FiniteGroup<FqMatrix>>,
    hname: String,
    groups: Vec<Arc<FiniteGroup<WreathElement<FqMatrix>>>>,
}

impl WreathTower {
    pub fn new(h: Arc<FiniteGroup<FqMatrix>>, hname: &str, maxdeg: usize) -> Result<Self, PshError> {
        let groups = (1..=maxdeg).map(|n| wreath_group(n, &h, hname).map(Arc::new)).collect::<Result<_, _>>()?;
        Ok(WreathTower { h, hname: hname.to_string(), groups })
    }

    /// H = GL_1(F_3), the cyclic group of order 2.
    pub fn c2(maxdeg: usize) -> Result<Self, PshError> {
        Self::new(gl_group(1, 3)?, "C2", maxdeg)
    }

    pub fn base(&self) -> &FiniteGroup<FqMatrix> {
        &self.h
    }
}

impl GroupTower for WreathTower {
    type Elem = WreathElement<FqMatrix>;

    fn name(&self) -> String {
        format!("Wreath({})", self.hname)
    }

    fn group(&self, n: usize) -> Result<Arc<FiniteGroup<Self::Elem>>, PshError> {
        self.groups.get(n.wrapping_sub(1)).cloned().ok_or(PshError::Degree { got: n, maxdeg: self.groups.len() })
    }

    fn parabolic(&self, a: usize, b: usize) -> Result<FiniteGroup<Self::Elem>, PshError> {
        self.levi(a, b)
    }

    fn levi(&self, a: usize, b: usize) -> Result<FiniteGroup<Self::Elem>, PshError> {
        let g = self.group(a + b)?;
        Ok(g.subgroup(format!("{}/L({a},{b})", g.name()), |x| x.sigma.preserves_prefix(a))?)
    }

    fn unipotent(&self, a: usize, b: usize) -> Result<FiniteGroup<Self::Elem>, PshError> {
        let g = self.group(a + b)?;
        let id = g.identity().clone();
        Ok(g.subgroup(format!("{}/U({a},{b})", g.name()), |x| *x == id)?)
    }

    fn split(&self, x: &Self::Elem, a: usize, _b: usize) -> (Self::Elem, Self::Elem) {
        let im = x.sigma.images();
        let left = Permutation::from_images(&im[..a]).expect("σ preserves {1..a}");
        let right = Permutation::from_images(&im[a..].iter().map(|&v| v - a).collect::<Vec<_>>()).expect("σ preserves the rest");
        (WreathElement::new(left, x.alphas[..a].to_vec()), WreathElement::new(right, x.alphas[a..].to_vec()))
    }
}

/// GL_n(F_q) with the block parabolics P_{a,b} = L_{a,b} ⋉ U_{a,b}.
pub struct GlTower {
    pub q: u32,
}

impl GroupTower for GlTower {
    type Elem = FqMatrix;

    fn name(&self) -> String {
        format!("GL(q={})", self.q)
    }

    fn group(&self, n: usize) -> Result<Arc<FiniteGroup<FqMatrix>>, PshError> {
        Ok(gl_group(n, self.q)?)
    }

    fn parabolic(&self, a: usize, b: usize) -> Result<FiniteGroup<FqMatrix>, PshError> {
        Ok(gl_subgroup(&*self.group(a + b)?, &format!("P({a},{b})"))?)
    }

    fn levi(&self, a: usize, b: usize) -> Result<FiniteGroup<FqMatrix>, PshError> {
        Ok(gl_subgroup(&*self.group(a + b)?, &format!("L({a},{b})"))?)
    }

    fn unipotent(&self, a: usize, b: usize) -> Result<FiniteGroup<FqMatrix>, PshError> {
        Ok(gl_subgroup(&*self.group(a + b)?, &format!("U({a},{b})"))?)
    }

    fn split(&self, x: &FqMatrix, a: usize, b: usize) -> (FqMatrix, FqMatrix) {
        (x.block(0, a, 0, a), x.block(a, a + b, a, a + b))
    }
}

fn eval<E: GroupElement>(g: &FiniteGroup<E>, chi: &ClassFunction, x: &E) -> CycloNumber {
    g.eval(chi, x).expect("element of the tower group")
}

/// Builds the tables from a tower: m = Ind_P^G ∘ Inf_L^P, m* = U-invariants restricted to L.
pub fn from_tower<T: GroupTower>(tower: &T, maxdeg: usize) -> Result<PshStructure, PshError> {
    let mut groups = vec![None];
    for n in 1..=maxdeg {
        groups.push(Some(tower.group(n)?));
    }
    let tables = groups
        .iter()
        .map(|g| g.as_ref().map(|g| g.character_table()).transpose())
        .collect::<Result<Vec<_>, _>>()?;
    let dims: Vec<usize> = tables.iter().map(|t| t.as_ref().map_or(1, |t| t.len())).collect();
    let labels: Vec<Vec<String>> = (0..=maxdeg)
        .map(|n| match &tables[n] {
            None => vec!["1".to_string()],
            Some(t) => (0..t.len()).map(|i| format!("{n}:χ{i}[{}]", t.degree(i))).collect(),
        })
        .collect();
    let unit_vec = |n: usize, i: usize| -> Vec<i64> { (0..dims[n]).map(|k| (k == i) as i64).collect() };

    let mut product = vec![vec![Vec::new(); maxdeg + 1]; maxdeg + 1];
    for a in 0..=maxdeg {
        for b in 0..=maxdeg - a {
            let n = a + b;
            product[a][b] = if a == 0 {
                vec![(0..dims[b]).map(|j| unit_vec(b, j)).collect()]
            } else if b == 0 {
                (0..dims[a]).map(|i| vec![unit_vec(a, i)]).collect()
            } else {
                let (ga, gb, gn) = (groups[a].as_ref().expect("a ≥ 1"), groups[b].as_ref().expect("b ≥ 1"), groups[n].as_ref().expect("n ≥ 1"));
                let (ta, tb, tn) = (tables[a].as_ref().expect("a ≥ 1"), tables[b].as_ref().expect("b ≥ 1"), tables[n].as_ref().expect("n ≥ 1"));
                let p = tower.parabolic(a, b)?;
                let pairs: Vec<(usize, usize)> = (0..dims[a]).flat_map(|i| (0..dims[b]).map(move |j| (i, j))).collect();
                let flat = pairs
                    .par_iter()
                    .map(|&(i, j)| {
                        let inf = p.class_function(|x| {
                            let (xa, xb) = tower.split(x, a, b);
                            &eval(ga, ta.character(i), &xa) * &eval(gb, tb.character(j), &xb)
                        });
                        Ok(tn.decompose(&induce(gn, &p, &inf)?)?)
                    })
                    .collect::<Result<Vec<Vec<i64>>, PshError>>()?;
                flat.chunks(dims[b]).map(<[Vec<i64>]>::to_vec).collect()
            };
        }
    }

    let mut coproduct = Vec::new();
    for n in 0..=maxdeg {
        let mut by_k = Vec::new();
        for k in 0..=n {
            let per_w: Vec<Vec<Vec<i64>>> = if k == 0 {
                (0..dims[n]).map(|w| vec![unit_vec(n, w)]).collect()
            } else if k == n {
                (0..dims[n]).map(|w| unit_vec(n, w).into_iter().map(|c| vec![c]).collect()).collect()
            } else {
                let b = n - k;
                let (ga, gb, gn) = (groups[k].as_ref().expect("k ≥ 1"), groups[b].as_ref().expect("b ≥ 1"), groups[n].as_ref().expect("n ≥ 1"));
                let (ta, tb, tn) = (tables[k].as_ref().expect("k ≥ 1"), tables[b].as_ref().expect("b ≥ 1"), tables[n].as_ref().expect("n ≥ 1"));
                let l = tower.levi(k, b)?;
                let u = tower.unipotent(k, b)?;
                let uinv = Rational::new(1.into(), (u.order() as i64).into());
                let tensors: Vec<Vec<ClassFunction>> = (0..dims[k])
                    .map(|i| {
                        (0..dims[b])
                            .map(|j| {
                                l.class_function(|x| {
                                    let (xa, xb) = tower.split(x, k, b);
                                    &eval(ga, ta.character(i), &xa) * &eval(gb, tb.character(j), &xb)
                                })
                            })
                            .collect()
                    })
                    .collect();
                (0..dims[n])
                    .into_par_iter()
                    .map(|w| {
                        let chi = tn.character(w);
                        let fixed = l.class_function(|x| {
                            let mut acc = CycloNumber::zero();
                            for y in u.elements() {
                                acc += &eval(gn, chi, &x.compose(y));
                            }
                            acc.scale(&uinv)
                        });
                        tensors
                            .iter()
                            .enumerate()
                            .map(|(i, row)| {
                                row.iter()
                                    .enumerate()
                                    .map(|(j, t)| to_int(&l.inner(&fixed, t), || format!("m*({}) at ({i},{j})", labels[n][w])))
                                    .collect::<Result<Vec<i64>, _>>()
                            })
                            .collect::<Result<Vec<_>, _>>()
                    })
                    .collect::<Result<Vec<_>, _>>()?
            };
            by_k.push(per_w);
        }
        coproduct.push(by_k);
    }
    Ok(PshStructure { name: format!("{}(≤{maxdeg})", tower.name()), maxdeg, labels, product, coproduct })
}

/// Σ_n∫C_2 with C_2 = GL_1(F_3).
pub fn wreath_instance(maxdeg: usize) -> Result<PshStructure, PshError> {
    from_tower(&WreathTower::c2(maxdeg)?, maxdeg)
}

/// Σ_n∫H for H = GL_m(F_q).
pub fn wreath_instance_over(m: usize, q: u32, maxdeg: usize) -> Result<PshStructure, PshError> {
    let h = gl_group(m, q)?;
    let name = h.name().to_string();
    from_tower(&WreathTower::new(h, &name, maxdeg)?, maxdeg)
}

pub fn gl_instance(q: u32, maxdeg: usize) -> Result<PshStructure, PshError> {
    from_tower(&GlTower { q }, maxdeg)
}

/// Central character of an irreducible of GL_n(F_q) as the exponent j with
/// ω(zI) = dim·ζ_{q−1}^{j·log z}.
pub fn central_character(q: u32, n: usize, idx: usize) -> Result<usize, PshError> {
    let g = gl_group(n, q)?;
    let t = g.character_table()?;
    let chi = t.character(idx);
    let f = g.identity().field();
    let e = (q - 1) as usize;
    let gen = f.generator();
    let mut scalar = FqMatrix::identity(f, n);
    for i in 0..n {
        scalar.set(i, i, gen);
    }
    let dim = chi.values[0].clone();
    let v = eval(&g, chi, &scalar);
    (0..e.max(1))
        .find(|&j| v == dim.mul_root(e.max(1) as u32, j as i64))
        .ok_or_else(|| PshError::NotIntegral(format!("central character of {n}:χ{idx}")))
}

/// Central characters multiply under m and split under m*:
/// R_{a,φ}·R_{b,ψ} ⊆ R_{a+b,φψ}.
pub fn verify_fibred_grading(q: u32, structure: &PshStructure) -> Result<CheckReport, PshError> {
    let mut r = CheckReport::new("fibred-grading", &structure.name).with_maxdeg(structure.maxdeg);
    let e = (q - 1).max(1) as usize;
    let cc = |n: usize, i: usize| -> Result<usize, PshError> { if n == 0 { Ok(0) } else { central_character(q, n, i) } };
    for a in 0..=structure.maxdeg {
        for b in 0..=structure.maxdeg - a {
            for i in 0..structure.dim(a) {
                for j in 0..structure.dim(b) {
                    let expected = (cc(a, i)? + cc(b, j)?) % e;
                    for (k, &c) in structure.product_rule(a, i, b, j).iter().enumerate() {
                        if c != 0 {
                            let got = cc(a + b, k)?;
                            r.record(got == expected, || {
                                format!("{}·{} contains {} with central exponent {got}, expected {expected}", structure.labels[a][i], structure.labels[b][j], structure.labels[a + b][k])
                            });
                        }
                    }
                }
            }
        }
    }
    for n in 1..=structure.maxdeg {
        for w in 0..structure.dim(n) {
            let phi = cc(n, w)?;
            let allowed = CentralCharacterAlgebra::new(e).coproduct(phi);
            for k in 0..=n {
                for (i, row) in structure.coproduct_rule(n, k, w).iter().enumerate() {
                    for (j, &c) in row.iter().enumerate() {
                        if c != 0 {
                            let pair = (cc(k, i)?, cc(n - k, j)?);
                            r.record(allowed.contains(&pair), || {
                                format!("m*({}) has {}⊗{} outside the central-character coproduct", structure.labels[n][w], structure.labels[k][i], structure.labels[n - k][j])
                            });
                        }
                    }
                }
            }
        }
    }
    Ok(r)
}

/// Z[Â] for Â the character group of the cyclic group F_q^*, with ν_j ↦ Σ_i ν_{−i}⊗ν_{j+i}.
#[derive(Debug, Clone, Copy)]
pub struct CentralCharacterAlgebra {
    pub order: usize,
}

impl CentralCharacterAlgebra {
    pub fn new(order: usize) -> Self {
        CentralCharacterAlgebra { order: order.max(1) }
    }

    pub fn product(&self, i: usize, j: usize) -> usize {
        (i + j) % self.order
    }

    pub fn coproduct(&self, j: usize) -> Vec<(usize, usize)> {
        let e = self.order;
        (0..e).map(|i| ((e - i) % e, (j + i) % e)).collect()
    }

    /// m∘m* multiplies ν_j by |Â|; coproduct terms all multiply back to ν_j.
    pub fn verify(&self) -> CheckReport {
        let mut r = CheckReport::new("central-character-coproduct", format!("Z[Â], |Â|={}", self.order));
        for j in 0..self.order {
            let terms = self.coproduct(j);
            r.record(terms.len() == self.order, || format!("ν_{j} has {} terms", terms.len()));
            r.record(terms.iter().all(|&(a, b)| self.product(a, b) == j), || format!("m*(ν_{j}) leaves the fibre"));
            // coassociativity on the first factor
            let left: BTreeSet<(usize, usize, usize)> =
                terms.iter().flat_map(|&(a, b)| self.coproduct(a).into_iter().map(move |(x, y)| (x, y, b))).collect();
            let right: BTreeSet<(usize, usize, usize)> =
                terms.iter().flat_map(|&(a, b)| self.coproduct(b).into_iter().map(move |(y, z)| (a, y, z))).collect();
            r.record(left.iter().all(|&(x, y, z)| self.product(self.product(x, y), z) == j) && right.iter().all(|&(x, y, z)| self.product(self.product(x, y), z) == j), || {
                format!("iterated coproduct of ν_{j} leaves the fibre")
            });
        }
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symmetric_small_rules() {
        let r = symmetric_instance(3).unwrap();
        let one = r.index_of(1, "(1)").unwrap();
        let two = r.index_of(2, "(2)").unwrap();
        let oo = r.index_of(2, "(1^2)").unwrap();
        let v = r.product_rule(1, one, 1, one);
        assert_eq!((v[two], v[oo]), (1, 1));
        let w = r.index_of(3, "(2,1)").unwrap();
        assert_eq!(r.coproduct_rule(3, 1, w)[one], vec![1, 1]);
        let m = r.coproduct_rule(3, 2, w);
        assert_eq!(m[two][one] + m[oo][one], 2);
    }

    #[test]
    fn two_one_coproduct_in_single_boxes() {
        let r = symmetric_instance(3).unwrap();
        let w = r.index_of(3, "(2,1)").unwrap();
        let base = PshElement::basis(1, 0);
        let cube = r.pow(&base, 3).unwrap();
        assert_eq!(cube.coeff(3, w), 2);
    }

    #[test]
    fn symmetric_axioms_degree_4() {
        let r = symmetric_instance(4).unwrap();
        for rep in r.verify_all(4) {
            assert!(rep.passed(), "{:?}", rep);
        }
        let d = r.decompose(4).unwrap();
        assert_eq!(d.blocks.len(), 1);
        assert!(d.is_tensor_product(), "{d:?}");
    }

    #[test]
    fn spec_product_example() {
        let r = symmetric_instance(3).unwrap();
        let x = PshElement::basis(2, r.index_of(2, "(2)").unwrap());
        let y = PshElement::basis(1, 0);
        let z = PshElement::basis(3, r.index_of(3, "(2,1)").unwrap());
        assert_eq!(psh_inner(&r.mul(&x, &y).unwrap(), &z), 1);
    }

    #[test]
    fn wreath_two_primitives() {
        let r = wreath_instance(2).unwrap();
        assert_eq!(r.dim(2), 5);
        assert_eq!(r.primitives(1).len(), 2);
        for rep in r.verify_all(2) {
            assert!(rep.passed(), "{:?}", rep);
        }
        let d = r.decompose(2).unwrap();
        assert_eq!(d.blocks.len(), 2);
        assert!(d.is_tensor_product(), "{d:?}");
    }

    #[test]
    fn trivial_h_matches_symmetric() {
        let w = wreath_instance_over(1, 2, 3).unwrap();
        let s = symmetric_instance(3).unwrap();
        assert_eq!(w.dim(3), s.dim(3));
        let mut a = w.product_rule(1, 0, 1, 0).to_vec();
        let mut b = s.product_rule(1, 0, 1, 0).to_vec();
        a.sort_unstable();
        b.sort_unstable();
        assert_eq!(a, b);
    }

    #[test]
    fn gl2_over_f2() {
        let r = gl_instance(2, 2).unwrap();
        assert_eq!(r.dim(1), 1);
        assert_eq!(r.dim(2), 3);
        for rep in r.verify_all(2) {
            assert!(rep.passed(), "{:?}", rep);
        }
        // ρ² = 1 + St
        let sq = r.product_rule(1, 0, 1, 0);
        assert_eq!(sq.iter().sum::<i64>(), 2);
        let cusp = r.primitives(2);
        assert_eq!(cusp.len(), 1);
        assert_eq!(r.label(2, cusp[0]), "2:χ1[1]");
        let d = r.decompose(2).unwrap();
        assert_eq!(d.blocks.len(), 2);
        assert!(d.is_tensor_product(), "{d:?}");
    }

    #[test]
    fn gl_over_f3_fibred() {
        let r = gl_instance(3, 2).unwrap();
        assert_eq!(r.dim(2), 8);
        for rep in r.verify_all(2) {
            assert!(rep.passed(), "{:?}", rep);
        }
        assert!(verify_fibred_grading(3, &r).unwrap().passed());
        assert!(CentralCharacterAlgebra::new(2).verify().passed());
        assert!(CentralCharacterAlgebra::new(4).verify().passed());
    }

    #[test]
    fn elements_and_inner() {
        let mut x = PshElement::basis(2, 0);
        x.add_term(2, 1, 3);
        let y = PshElement::from_vec(2, &[2, 1]);
        assert_eq!(psh_inner(&x, &y), 5);
        x.add_term(2, 0, -1);
        assert_eq!(x.coeffs.len(), 1);
        assert!(x.is_positive());
    }
}
