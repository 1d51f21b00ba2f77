//! Specht modules over Q: polytabloids, the standard basis, matrix actions and
//! characters of the symmetric groups.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::classfn::ClassFunction;
use crate::combinat::{next_permutation, partitions, Partition, Tableau, Tabloid};
use crate::cyclo::{rat, CycloNumber, Rational};
use crate::linalg::{bareiss_det, bareiss_rank, RatMatrix};
pub use crate::report::CheckReport;
use crate::symgroup::{class_representative, Permutation, DEFAULT_MAX_N};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpechtError {
    #[error("n = {n} exceeds the configured bound {bound}")]
    TooLarge { n: usize, bound: usize },
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
    #[error("degree mismatch: permutation of {0} points acting on a module for n = {1}")]
    DegreeMismatch(usize, usize),
}

/// A vector of M^μ in tabloid coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TabloidVector {
    pub shape: Partition,
    pub coords: BTreeMap<Tabloid, Rational>,
}

impl TabloidVector {
    /// The form of Def 6.8: tabloids are orthonormal.
    pub fn dot(&self, other: &TabloidVector) -> Rational {
        self.coords
            .iter()
            .filter_map(|(t, a)| other.coords.get(t).map(|b| a * b))
            .sum()
    }

    fn from_sparse(shape: &Partition, v: &HashMap<Tabloid, i64>) -> Self {
        TabloidVector {
            shape: shape.clone(),
            coords: v.iter().filter(|(_, &c)| c != 0).map(|(t, &c)| (t.clone(), rat(c))).collect(),
        }
    }
}

type Sparse = HashMap<Tabloid, i64>;

/// Elements of the column stabilizer C_t as (x ↦ g(x) lookup on 1..=n, sign).
pub fn column_stabilizer(t: &Tableau) -> Vec<(Vec<usize>, i64)> {
    let n = t.n();
    let mut group: Vec<(Vec<usize>, i64)> = vec![((0..=n).collect(), 1)];
    for col in t.columns() {
        if col.len() < 2 {
            continue;
        }
        let mut idx: Vec<usize> = (0..col.len()).collect();
        let mut local = Vec::new();
        loop {
            let inversions = (0..idx.len())
                .flat_map(|i| (i + 1..idx.len()).map(move |j| (i, j)))
                .filter(|&(i, j)| idx[i] > idx[j])
                .count();
            let sign = if inversions % 2 == 0 { 1 } else { -1 };
            local.push((idx.clone(), sign));
            if !next_permutation(&mut idx) {
                break;
            }
        }
        let mut next = Vec::with_capacity(group.len() * local.len());
        for (g, s) in &group {
            for (perm, ls) in &local {
                let mut h = g.clone();
                for (i, &x) in col.iter().enumerate() {
                    h[x] = col[perm[i]];
                }
                next.push((h, s * ls));
            }
        }
        group = next;
    }
    group
}

/// κ_t applied to a tabloid: Σ_{g ∈ C_t} sign(g)·{g(s)}.
pub fn kappa_on_tabloid(t: &Tableau, s: &Tabloid) -> HashMap<Tabloid, i64> {
    kappa_with(&column_stabilizer(t), s)
}

fn kappa_with(group: &[(Vec<usize>, i64)], s: &Tabloid) -> Sparse {
    let mut out: Sparse = HashMap::new();
    for (g, sign) in group {
        *out.entry(s.map_entries(|x| g[x])).or_insert(0) += sign;
    }
    out.retain(|_, c| *c != 0);
    out
}

fn polytabloid_sparse(t: &Tableau) -> Sparse {
    kappa_on_tabloid(t, &t.tabloid())
}

/// e_t = κ_t({t}).
pub fn polytabloid(t: &Tableau) -> TabloidVector {
    TabloidVector::from_sparse(t.shape(), &polytabloid_sparse(t))
}

/// The Specht module S^μ with its standard polytabloid basis.
pub struct SpechtModule {
    shape: Partition,
    tableaux: Vec<Tableau>,
    basis: Vec<Sparse>,
    /// Standard tabloid {t_j}, used as the j-th solving coordinate.
    pivots: Vec<Tabloid>,
    pivot_inverse: RatMatrix,
}

impl SpechtModule {
    pub fn new(shape: &Partition) -> Result<Self, SpechtError> {
        Self::with_bound(shape, DEFAULT_MAX_N)
    }

    pub fn with_bound(shape: &Partition, bound: usize) -> Result<Self, SpechtError> {
        let n = shape.n();
        if n > bound {
            return Err(SpechtError::TooLarge { n, bound });
        }
        let tableaux = shape.standard_tableaux();
        let basis: Vec<Sparse> = tableaux.iter().map(polytabloid_sparse).collect();
        let pivots: Vec<Tabloid> = tableaux.iter().map(Tableau::tabloid).collect();
        let d = tableaux.len();
        let mut p = RatMatrix::zeros(d, d);
        for (i, e) in basis.iter().enumerate() {
            for (j, piv) in pivots.iter().enumerate() {
                if let Some(&c) = e.get(piv) {
                    p[(i, j)] = rat(c);
                }
            }
        }
        let pivot_inverse = p.inverse().ok_or_else(|| {
            SpechtError::Inconsistent(format!("standard tabloid minor of S^{shape} is singular"))
        })?;
        Ok(SpechtModule { shape: shape.clone(), tableaux, basis, pivots, pivot_inverse })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn dim(&self) -> usize {
        self.tableaux.len()
    }

    pub fn standard_tableaux(&self) -> &[Tableau] {
        &self.tableaux
    }

    /// Standard polytabloids as rows over all tabloids of the shape
    /// (columns in the order of `Tabloid::all_of_shape`).
    pub fn standard_basis(&self) -> RatMatrix {
        let cols = Tabloid::all_of_shape(&self.shape);
        let rows = self
            .basis
            .iter()
            .map(|e| cols.iter().map(|t| rat(e.get(t).copied().unwrap_or(0))).collect())
            .collect();
        RatMatrix::from_rows(rows)
    }

    /// Rank of the standard basis by fraction-free elimination.
    pub fn basis_rank(&self) -> usize {
        let cols = Tabloid::all_of_shape(&self.shape);
        let rows = self
            .basis
            .iter()
            .map(|e| cols.iter().map(|t| BigInt::from(e.get(t).copied().unwrap_or(0))).collect())
            .collect();
        bareiss_rank(rows)
    }

    pub fn gram_matrix(&self) -> Vec<Vec<i64>> {
        let d = self.dim();
        (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| {
                        self.basis[i]
                            .iter()
                            .filter_map(|(t, a)| self.basis[j].get(t).map(|b| a * b))
                            .sum()
                    })
                    .collect()
            })
            .collect()
    }

    pub fn gram_determinant(&self) -> BigInt {
        let g = self.gram_matrix();
        bareiss_det(g.into_iter().map(|r| r.into_iter().map(BigInt::from).collect()).collect())
    }

    /// Coordinates of a vector of S^μ in the standard basis, checked on every tabloid.
    pub fn coordinates(&self, v: &Sparse) -> Result<Vec<Rational>, SpechtError> {
        let d = self.dim();
        let vp: Vec<Rational> = self.pivots.iter().map(|t| rat(v.get(t).copied().unwrap_or(0))).collect();
        let coords: Vec<Rational> = (0..d)
            .map(|j| (0..d).map(|k| &vp[k] * &self.pivot_inverse[(k, j)]).sum())
            .collect();
        let mut recon: HashMap<&Tabloid, Rational> = HashMap::new();
        for (c, e) in coords.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            for (t, &x) in e {
                *recon.entry(t).or_insert_with(Rational::zero) += c * rat(x);
            }
        }
        let consistent = v.iter().all(|(t, &x)| recon.get(t).cloned().unwrap_or_else(Rational::zero) == rat(x))
            && recon.iter().all(|(t, x)| x.is_zero() || v.contains_key(*t));
        if !consistent {
            return Err(SpechtError::Inconsistent(format!(
                "vector does not lie in S^{}",
                self.shape
            )));
        }
        Ok(coords)
    }

    fn check_degree(&self, sigma: &Permutation) -> Result<(), SpechtError> {
        if sigma.degree() != self.shape.n() {
            return Err(SpechtError::DegreeMismatch(sigma.degree(), self.shape.n()));
        }
        Ok(())
    }

    /// Matrix of σ on the standard basis: column j holds the coordinates of σ·e_{t_j}.
    pub fn action(&self, sigma: &Permutation) -> Result<RatMatrix, SpechtError> {
        self.check_degree(sigma)?;
        let d = self.dim();
        let mut m = RatMatrix::zeros(d, d);
        for (j, t) in self.tableaux.iter().enumerate() {
            let moved = polytabloid_sparse(&t.map_entries(|x| sigma.apply(x)));
            let c = self.coordinates(&moved)?;
            for (i, v) in c.into_iter().enumerate() {
                m[(i, j)] = v;
            }
        }
        Ok(m)
    }

    /// Trace of σ, reading only the diagonal coordinates.
    pub fn trace(&self, sigma: &Permutation) -> Result<Rational, SpechtError> {
        self.check_degree(sigma)?;
        let mut tr = Rational::zero();
        for (j, t) in self.tableaux.iter().enumerate() {
            let moved = polytabloid_sparse(&t.map_entries(|x| sigma.apply(x)));
            for (k, piv) in self.pivots.iter().enumerate() {
                if let Some(&c) = moved.get(piv) {
                    tr += rat(c) * &self.pivot_inverse[(k, j)];
                }
            }
        }
        Ok(tr)
    }

    /// χ_{S^μ} on the classes of Σ_n in `partitions(n)` order.
    pub fn character_values(&self) -> Result<Vec<i64>, SpechtError> {
        partitions(self.shape.n())
            .iter()
            .map(|cls| {
                let tr = self.trace(&class_representative(cls))?;
                if !tr.is_integer() {
                    return Err(SpechtError::Inconsistent(format!("non-integral trace {tr}")));
                }
                tr.to_integer()
                    .to_i64()
                    .ok_or_else(|| SpechtError::Inconsistent("trace overflow".into()))
            })
            .collect()
    }
}

pub fn specht_action(sigma: &Permutation, mu: &Partition) -> Result<RatMatrix, SpechtError> {
    SpechtModule::new(mu)?.action(sigma)
}

pub fn sym_group_id(n: usize) -> String {
    format!("Sym({n})")
}

/// Class sizes of Σ_n in `partitions(n)` order.
pub fn sym_class_sizes(n: usize) -> Vec<u64> {
    partitions(n)
        .iter()
        .map(|l| l.class_size().to_u64().expect("class size fits in u64"))
        .collect()
}

pub fn specht_character(mu: &Partition) -> Result<ClassFunction, SpechtError> {
    let values = SpechtModule::new(mu)?.character_values()?;
    Ok(ClassFunction::from_ints(sym_group_id(mu.n()), &values))
}

/// Number of μ-tabloids fixed by a permutation of cycle type `cls`.
pub fn fixed_tabloids(mu: &Partition, cls: &Partition) -> u64 {
    fn go(cycles: &[usize], room: &mut Vec<usize>) -> u64 {
        let Some((&c, rest)) = cycles.split_first() else {
            return u64::from(room.iter().all(|&r| r == 0));
        };
        let mut total = 0;
        for i in 0..room.len() {
            if room[i] >= c {
                room[i] -= c;
                total += go(rest, room);
                room[i] += c;
            }
        }
        total
    }
    go(cls.parts(), &mut mu.parts().to_vec())
}

pub fn permutation_character(mu: &Partition) -> ClassFunction {
    let n = mu.n();
    let values: Vec<i64> = partitions(n).iter().map(|c| fixed_tabloids(mu, c) as i64).collect();
    ClassFunction::from_ints(sym_group_id(n), &values)
}

/// The character table of Σ_n computed from Specht module traces.
/// Rows and columns are both indexed by `partitions(n)` (lexicographically decreasing).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymCharacterTable {
    pub n: usize,
    pub partitions: Vec<Partition>,
    pub class_sizes: Vec<u64>,
    pub values: Vec<Vec<i64>>,
}

impl SymCharacterTable {
    pub fn compute(n: usize) -> Result<Self, SpechtError> {
        Self::compute_with_bound(n, DEFAULT_MAX_N)
    }

    pub fn compute_with_bound(n: usize, bound: usize) -> Result<Self, SpechtError> {
        use rayon::prelude::*;
        if n > bound {
            return Err(SpechtError::TooLarge { n, bound });
        }
        let parts = partitions(n);
        let values = parts
            .par_iter()
            .map(|mu| SpechtModule::with_bound(mu, bound)?.character_values())
            .collect::<Result<Vec<_>, _>>()?;
        Ok(SymCharacterTable { n, class_sizes: sym_class_sizes(n), partitions: parts, values })
    }

    /// Shared, lazily computed table for Σ_n (n ≤ the default bound).
    pub fn cached(n: usize) -> Result<Arc<Self>, SpechtError> {
        static CACHE: OnceLock<Mutex<HashMap<usize, Arc<SymCharacterTable>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        if let Some(t) = cache.lock().expect("table cache poisoned").get(&n) {
            return Ok(t.clone());
        }
        let t = Arc::new(Self::compute(n)?);
        cache.lock().expect("table cache poisoned").insert(n, t.clone());
        Ok(t)
    }

    pub fn index_of(&self, p: &Partition) -> Option<usize> {
        self.partitions.iter().position(|q| q == p)
    }

    pub fn character(&self, mu: &Partition) -> Option<ClassFunction> {
        let i = self.index_of(mu)?;
        Some(ClassFunction::from_ints(sym_group_id(self.n), &self.values[i]))
    }

    pub fn value(&self, mu: &Partition, cls: &Partition) -> Option<i64> {
        Some(self.values[self.index_of(mu)?][self.index_of(cls)?])
    }

    /// CSV with a header of class labels and one row per irreducible.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("irrep");
        for c in &self.partitions {
            out.push_str(&format!(",\"{c}\""));
        }
        out.push('\n');
        for (p, row) in self.partitions.iter().zip(&self.values) {
            out.push_str(&format!("\"{p}\""));
            for v in row {
                out.push_str(&format!(",{v}"));
            }
            out.push('\n');
        }
        out
    }
}

/// Integer-valued class function on Σ_n given by its values in `partitions(n)` order.
pub fn to_int_values(f: &ClassFunction) -> Option<Vec<i64>> {
    f.values
        .iter()
        .map(|v| {
            let r = v.to_rational()?;
            r.is_integer().then(|| r.to_integer().to_i64()).flatten()
        })
        .collect()
}

/// Ind from Σ_a × Σ_b to Σ_{a+b} by the centralizer-ratio formula
/// Ind(f⊗g)(ν) = Σ_{λ∪μ=ν} z_ν/(z_λ z_μ) f(λ) g(μ).
pub fn induce_young(a: usize, b: usize, f: &[Rational], g: &[Rational]) -> Vec<Rational> {
    let pa = partitions(a);
    let pb = partitions(b);
    let pn = partitions(a + b);
    let index: HashMap<&Partition, usize> = pn.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let mut out = vec![Rational::zero(); pn.len()];
    for (i, l) in pa.iter().enumerate() {
        if f[i].is_zero() {
            continue;
        }
        for (j, m) in pb.iter().enumerate() {
            if g[j].is_zero() {
                continue;
            }
            let mut parts = l.parts().to_vec();
            parts.extend_from_slice(m.parts());
            let nu = Partition::from_unsorted(parts);
            let ratio = Rational::new(
                BigInt::from(nu.z()),
                BigInt::from(l.z()) * BigInt::from(m.z()),
            );
            out[index[&nu]] += ratio * &f[i] * &g[j];
        }
    }
    out
}

/// Restriction of f to Σ_a × Σ_b, as a matrix indexed by (λ ⊢ a, μ ⊢ b).
pub fn restrict_young(a: usize, b: usize, f: &[Rational]) -> Vec<Vec<Rational>> {
    let pn = partitions(a + b);
    let index: HashMap<&Partition, usize> = pn.iter().enumerate().map(|(i, p)| (p, i)).collect();
    partitions(a)
        .iter()
        .map(|l| {
            partitions(b)
                .iter()
                .map(|m| {
                    let mut parts = l.parts().to_vec();
                    parts.extend_from_slice(m.parts());
                    f[index[&Partition::from_unsorted(parts)]].clone()
                })
                .collect()
        })
        .collect()
}

fn rationals(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| rat(x)).collect()
}

/// Branching rule for S^μ: induction to Σ_{n+1} is the sum over addable nodes,
/// restriction to Σ_{n-1} the sum over removable nodes.
pub fn verify_branching(mu: &Partition) -> Result<CheckReport, SpechtError> {
    let n = mu.n();
    let mut report = CheckReport::new("branching", mu.to_string());
    let here = SymCharacterTable::cached(n)?;
    let chi = rationals(&here.values[here.index_of(mu).expect("partition of n")]);

    let up = SymCharacterTable::cached(n + 1)?;
    let one = vec![rat(1)];
    let induced = induce_young(n, 1, &chi, &one);
    let mut expected = vec![Rational::zero(); up.partitions.len()];
    for node in mu.addable_nodes() {
        let lam = mu.add_node(node).expect("addable");
        for (e, &v) in expected.iter_mut().zip(&up.values[up.index_of(&lam).expect("partition")]) {
            *e += rat(v);
        }
    }
    report.record(induced == expected, || format!("Ind S^{mu} differs from the addable-node sum"));

    if n >= 1 {
        let down = SymCharacterTable::cached(n - 1)?;
        let restricted: Vec<Rational> =
            restrict_young(n - 1, 1, &chi).into_iter().map(|row| row[0].clone()).collect();
        let mut expected = vec![Rational::zero(); down.partitions.len()];
        for node in mu.removable_nodes() {
            let lam = mu.remove_node(node).expect("removable");
            for (e, &v) in expected.iter_mut().zip(&down.values[down.index_of(&lam).expect("partition")]) {
                *e += rat(v);
            }
        }
        report.record(restricted == expected, || format!("Res S^{mu} differs from the removable-node sum"));
    }
    Ok(report)
}

/// Nonsingular Gram matrix (so S^μ ∩ S^μ⊥ = 0) and Lemma 6.7: κ_t maps every
/// tabloid of shape μ to a multiple of e_t, and κ_t{t'} ≠ 0 for a λ-tableau t
/// forces λ ⊵ μ.
pub fn submodule_theorem_check(mu: &Partition) -> Result<CheckReport, SpechtError> {
    let n = mu.n();
    let mut report = CheckReport::new("submodule-theorem", mu.to_string());
    let module = SpechtModule::new(mu)?;
    let det = module.gram_determinant();
    report.record(!det.is_zero(), || format!("Gram matrix of S^{mu} is singular"));

    let tabloids = Tabloid::all_of_shape(mu);
    for t in Tableau::all_of_shape(mu) {
        let group = column_stabilizer(&t);
        let e_t = kappa_with(&group, &t.tabloid());
        for s in &tabloids {
            let img = kappa_with(&group, s);
            let proportional = img.is_empty()
                || ([1i64, -1].iter().any(|&c| {
                    img.len() == e_t.len() && e_t.iter().all(|(k, &v)| img.get(k) == Some(&(c * v)))
                }));
            report.record(proportional, || format!("κ_t{{{s:?}}} not a multiple of e_t for t = {t:?}"));
        }
    }
    for lam in partitions(n) {
        let dominates = lam.dominates(mu).expect("same n");
        if dominates {
            continue;
        }
        for t in Tableau::all_of_shape(&lam) {
            let group = column_stabilizer(&t);
            for s in &tabloids {
                report.record(kappa_with(&group, s).is_empty(), || {
                    format!("κ_t{{t'}} ≠ 0 with shape(t) = {lam} not dominating {mu}")
                });
            }
        }
    }
    Ok(report)
}

/// κ_t extended linearly to a vector of M^μ.
pub fn kappa_vector(t: &Tableau, v: &TabloidVector) -> TabloidVector {
    let group = column_stabilizer(t);
    let mut coords: BTreeMap<Tabloid, Rational> = BTreeMap::new();
    for (s, c) in &v.coords {
        for (img, k) in kappa_with(&group, s) {
            *coords.entry(img).or_insert_with(Rational::zero) += c * rat(k);
        }
    }
    coords.retain(|_, c| !c.is_zero());
    TabloidVector { shape: v.shape.clone(), coords }
}

pub fn character_as_cyclo(values: &[i64], n: usize) -> ClassFunction {
    ClassFunction::new(sym_group_id(n), values.iter().map(|&v| CycloNumber::from_int(v)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::Tableau;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn one_row_polytabloid_is_single_tabloid() {
        let t = Tableau::row_reading(&p("(4)"));
        let e = polytabloid(&t);
        assert_eq!(e.coords.len(), 1);
        assert_eq!(e.coords.values().next().unwrap(), &rat(1));
    }

    #[test]
    fn reference_polytabloid() {
        let t = Tableau::new(vec![vec![2, 5, 1], vec![3, 4]]).unwrap();
        let e = polytabloid(&t);
        let tab = |a: &[usize], b: &[usize]| Tabloid::from_rows(vec![a.to_vec(), b.to_vec()]);
        let mut want = BTreeMap::new();
        want.insert(tab(&[1, 2, 5], &[3, 4]), rat(1));
        want.insert(tab(&[1, 3, 5], &[2, 4]), rat(-1));
        want.insert(tab(&[1, 2, 4], &[3, 5]), rat(-1));
        want.insert(tab(&[1, 3, 4], &[2, 5]), rat(1));
        assert_eq!(e.coords, want);
    }

    #[test]
    fn polytabloid_meets_own_tabloid_once() {
        for shape in partitions(4) {
            for t in Tableau::all_of_shape(&shape) {
                let e = polytabloid(&t);
                assert_eq!(e.coords.get(&t.tabloid()), Some(&rat(1)));
                assert!(e.coords.values().all(|c| c == &rat(1) || c == &rat(-1)));
            }
        }
    }

    #[test]
    fn polytabloid_equivariance() {
        let t = Tableau::new(vec![vec![2, 5, 1], vec![3, 4]]).unwrap();
        let pi = Permutation::from_cycles("(1,2,3,4,5)", 5).unwrap();
        let moved = polytabloid(&t.map_entries(|x| pi.apply(x)));
        let e = polytabloid(&t);
        let acted: BTreeMap<Tabloid, Rational> =
            e.coords.iter().map(|(s, c)| (s.map_entries(|x| pi.apply(x)), c.clone())).collect();
        assert_eq!(moved.coords, acted);
    }

    #[test]
    fn basis_ranks() {
        assert_eq!(SpechtModule::new(&p("(2,1)")).unwrap().basis_rank(), 2);
        assert_eq!(SpechtModule::new(&p("(5)")).unwrap().basis_rank(), 1);
        let sign = SpechtModule::new(&p("(1^4)")).unwrap();
        assert_eq!(sign.basis_rank(), 1);
        assert_eq!(sign.standard_basis().cols(), 24);
        assert!((0..24).all(|j| !sign.standard_basis()[(0, j)].is_zero()));
    }

    #[test]
    fn actions() {
        let m = SpechtModule::new(&p("(3,1)")).unwrap();
        assert_eq!(m.action(&Permutation::identity(4)).unwrap(), RatMatrix::identity(3));
        let sign = SpechtModule::new(&p("(1^4)")).unwrap();
        for s in Permutation::all(4) {
            assert_eq!(sign.action(&s).unwrap()[(0, 0)], rat(s.sign() as i64));
        }
        let m = SpechtModule::new(&p("(2,1)")).unwrap();
        let c = Permutation::from_cycles("(1,2,3)", 3).unwrap();
        assert_eq!(m.action(&c).unwrap().trace(), rat(-1));
    }

    #[test]
    fn action_is_multiplicative() {
        let m = SpechtModule::new(&p("(3,2)")).unwrap();
        let all = Permutation::all(5);
        for s in all.iter().step_by(7) {
            for t in all.iter().step_by(11) {
                let lhs = m.action(&(s * t)).unwrap();
                let rhs = m.action(s).unwrap().mul(&m.action(t).unwrap());
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn permutation_characters() {
        let reg = permutation_character(&p("(1^4)"));
        assert_eq!(to_int_values(&reg).unwrap(), vec![0, 0, 0, 0, 24]);
        let triv = permutation_character(&p("(4)"));
        assert_eq!(to_int_values(&triv).unwrap(), vec![1; 5]);
        assert_eq!(fixed_tabloids(&p("(3,2)"), &p("(2,1^3)")), 4);
    }

    #[test]
    fn characters_are_orthonormal() {
        for n in 1..=6 {
            let t = SymCharacterTable::compute(n).unwrap();
            for (i, a) in t.values.iter().enumerate() {
                for (j, b) in t.values.iter().enumerate() {
                    let fa = character_as_cyclo(a, n);
                    let fb = character_as_cyclo(b, n);
                    assert_eq!(fa.multiplicity(&fb, &t.class_sizes), Some(i64::from(i == j)));
                }
            }
        }
    }

    #[test]
    fn conjugate_shape_is_sign_twist() {
        for n in 1..=6 {
            let t = SymCharacterTable::compute(n).unwrap();
            let signs: Vec<i64> = t.partitions.iter().map(|c| class_representative(c).sign() as i64).collect();
            for (mu, row) in t.partitions.iter().zip(&t.values) {
                let conj = &t.values[t.index_of(&mu.conjugate()).unwrap()];
                let twisted: Vec<i64> = row.iter().zip(&signs).map(|(a, s)| a * s).collect();
                assert_eq!(conj, &twisted, "{mu}");
            }
        }
    }

    #[test]
    fn permutation_module_is_unitriangular() {
        for n in 1..=6 {
            let t = SymCharacterTable::compute(n).unwrap();
            for mu in &t.partitions {
                let m = permutation_character(mu);
                for lam in &t.partitions {
                    let k = m.multiplicity(&t.character(lam).unwrap(), &t.class_sizes).unwrap();
                    if lam == mu {
                        assert_eq!(k, 1);
                    } else if !lam.dominates(mu).unwrap() {
                        assert_eq!(k, 0, "{lam} in M^{mu}");
                    }
                }
            }
        }
    }

    #[test]
    fn sigma5_table() {
        let t = SymCharacterTable::compute(5).unwrap();
        let want: Vec<Vec<i64>> = vec![
            vec![1, 1, 1, 1, 1, 1, 1],
            vec![-1, 0, -1, 1, 0, 2, 4],
            vec![0, -1, 1, -1, 1, 1, 5],
            vec![1, 0, 0, 0, -2, 0, 6],
            vec![0, 1, -1, -1, 1, -1, 5],
            vec![-1, 0, 1, 1, 0, -2, 4],
            vec![1, -1, -1, 1, 1, -1, 1],
        ];
        assert_eq!(t.values, want);
        assert_eq!(t.class_sizes, vec![24, 30, 20, 20, 15, 10, 1]);
        assert!(t.to_csv().starts_with("irrep,\"(5)\",\"(4,1)\""));
    }

    #[test]
    fn gram_determinants() {
        assert_eq!(SpechtModule::new(&p("(2,1)")).unwrap().gram_determinant(), BigInt::from(3));
        assert_eq!(SpechtModule::new(&p("(4)")).unwrap().gram_matrix(), vec![vec![1]]);
    }

    #[test]
    fn kappa_is_self_adjoint() {
        let shape = p("(2,2)");
        let t = Tableau::new(vec![vec![3, 1], vec![4, 2]]).unwrap();
        let tabloids = Tabloid::all_of_shape(&shape);
        let unit = |s: &Tabloid| TabloidVector {
            shape: shape.clone(),
            coords: [(s.clone(), rat(1))].into_iter().collect(),
        };
        for u in &tabloids {
            for v in &tabloids {
                let lhs = kappa_vector(&t, &unit(u)).dot(&unit(v));
                let rhs = unit(u).dot(&kappa_vector(&t, &unit(v)));
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn branching_examples() {
        assert!(verify_branching(&p("(1)")).unwrap().passed());
        for n in 1..=5 {
            for mu in partitions(n) {
                let r = verify_branching(&mu).unwrap();
                assert!(r.passed(), "{:?}", r.failures);
            }
        }
    }

    #[test]
    fn submodule_theorem_small() {
        for n in 1..=5 {
            for mu in partitions(n) {
                let r = submodule_theorem_check(&mu).unwrap();
                assert!(r.passed(), "{:?}", r.failures);
            }
        }
    }

    #[test]
    fn too_large_is_an_error() {
        assert!(matches!(
            SpechtModule::new(&p("(5,4)")),
            Err(SpechtError::TooLarge { n: 9, bound: 8 })
        ));
    }
}
