//! Exact character tables by the Burnside–Dixon method.
//!
//! Class multiplication coefficients are reduced modulo a prime ℓ ≡ 1 (mod e),
//! the common eigenvectors of the class matrices give the characters mod ℓ, and
//! the values are lifted to Q(ζ_e) through the power maps.

use serde::{Deserialize, Serialize};

use crate::classfn::ClassFunction;
use crate::cyclo::{CycloNumber, CycloSum};

use super::group::{FiniteGroup, GroupElement};
use super::GlError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterTable {
    pub group: String,
    pub order: u64,
    pub exponent: u64,
    pub class_sizes: Vec<u64>,
    pub class_orders: Vec<usize>,
    pub inverse_class: Vec<usize>,
    pub irreducibles: Vec<ClassFunction>,
}

fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn powmod(mut a: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    a %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, a, m);
        }
        a = mulmod(a, a, m);
        e >>= 1;
    }
    acc
}

fn invmod(a: u64, m: u64) -> u64 {
    powmod(a, m - 2, m)
}

fn is_prime_u64(n: u64) -> bool {
    n >= 2 && (2..).take_while(|k: &u64| k * k <= n).all(|k| n % k != 0)
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut k = 2;
    while k * k <= n {
        if n % k == 0 {
            out.push(k);
            while n % k == 0 {
                n /= k;
            }
        }
        k += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Smallest prime ℓ ≡ 1 (mod e) exceeding `floor`, and a primitive e-th root of unity mod ℓ.
fn choose_prime(e: u64, floor: u64) -> (u64, u64) {
    let mut l = (floor / e + 1) * e + 1;
    while !is_prime_u64(l) {
        l += e;
    }
    let factors = prime_factors(l - 1);
    let g = (2..l)
        .find(|&g| factors.iter().all(|&f| powmod(g, (l - 1) / f, l) != 1))
        .expect("F_l^* is cyclic");
    (l, powmod(g, (l - 1) / e, l))
}

fn char_poly(a: &[Vec<u64>], l: u64) -> Vec<u64> {
    // Faddeev–LeVerrier; coefficients from the constant term up.
    let n = a.len();
    let mut c = vec![0u64; n + 1];
    c[n] = 1;
    let mut m = vec![vec![0u64; n]; n];
    for k in 1..=n {
        let mut next = vec![vec![0u64; n]; n];
        for i in 0..n {
            for j in 0..n {
                let mut s = 0u64;
                for t in 0..n {
                    s = (s + mulmod(a[i][t], m[t][j], l)) % l;
                }
                next[i][j] = s;
            }
            next[i][i] = (next[i][i] + c[n - k + 1]) % l;
        }
        m = next;
        let mut tr = 0u64;
        for i in 0..n {
            for t in 0..n {
                tr = (tr + mulmod(a[i][t], m[t][i], l)) % l;
            }
        }
        c[n - k] = mulmod(l - tr % l, invmod(k as u64, l), l) % l;
    }
    c
}

/// A nonzero kernel vector of a, assuming a one-dimensional kernel.
fn kernel_vector(mut a: Vec<Vec<u64>>, l: u64) -> Option<Vec<u64>> {
    let n = a.len();
    let mut pivot_cols = Vec::new();
    let mut row = 0;
    for col in 0..n {
        let Some(p) = (row..n).find(|&r| a[r][col] != 0) else { continue };
        a.swap(row, p);
        let inv = invmod(a[row][col], l);
        for x in a[row].iter_mut() {
            *x = mulmod(*x, inv, l);
        }
        for r in 0..n {
            if r != row && a[r][col] != 0 {
                let f = a[r][col];
                for k in 0..n {
                    a[r][k] = (a[r][k] + l - mulmod(f, a[row][k], l)) % l;
                }
            }
        }
        pivot_cols.push(col);
        row += 1;
    }
    if pivot_cols.len() != n - 1 {
        return None;
    }
    let free = (0..n).find(|c| !pivot_cols.contains(c))?;
    let mut v = vec![0u64; n];
    v[free] = 1;
    for (r, &pc) in pivot_cols.iter().enumerate() {
        v[pc] = (l - a[r][free]) % l;
    }
    Some(v)
}

impl CharacterTable {
    pub fn compute<E: GroupElement>(g: &FiniteGroup<E>) -> Result<Self, GlError> {
        let r = g.num_classes();
        let order = g.order() as u64;
        let e = g.exponent();
        let (l, z) = choose_prime(e, 2 * order);
        let sizes = g.class_sizes();
        let inverse_class: Vec<usize> = (0..r).map(|c| g.class_of_idx(g.inverse_idx(g.class_rep_idx(c)))).collect();

        // coef[j][k][t] = #{(x, y) ∈ C_j × C_k : xy = g_t}
        let mut coef = vec![vec![vec![0u64; r]; r]; r];
        for t in 0..r {
            let gt = g.class_rep_idx(t);
            for x in 0..g.order() {
                let y = g.mul_idx(g.inverse_idx(x), gt);
                coef[g.class_of_idx(x)][g.class_of_idx(y)][t] += 1;
            }
        }

        let mut seed = 0x9e37_79b9_u64;
        let mut vectors: Option<Vec<Vec<u64>>> = None;
        for _ in 0..64 {
            let weights: Vec<u64> = (0..r)
                .map(|_| {
                    seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    (seed >> 33) % l
                })
                .collect();
            let mut a = vec![vec![0u64; r]; r];
            for (j, w) in weights.iter().enumerate() {
                for k in 0..r {
                    for t in 0..r {
                        a[k][t] = (a[k][t] + mulmod(*w, coef[j][k][t] % l, l)) % l;
                    }
                }
            }
            let poly = char_poly(&a, l);
            let roots: Vec<u64> = (0..l)
                .filter(|&x| poly.iter().rev().fold(0u64, |acc, &c| (mulmod(acc, x, l) + c) % l) == 0)
                .collect();
            if roots.len() != r {
                continue;
            }
            let found: Option<Vec<Vec<u64>>> = roots
                .iter()
                .map(|&lam| {
                    let mut m = a.clone();
                    for (i, row) in m.iter_mut().enumerate() {
                        row[i] = (row[i] + l - lam) % l;
                    }
                    kernel_vector(m, l)
                })
                .collect();
            if found.is_some() {
                vectors = found;
                break;
            }
        }
        let vectors = vectors.ok_or_else(|| GlError::Inconsistent("class matrices did not split".into()))?;

        // power classes along each class: pc[c][t] = class of g_c^t
        let eu = e as usize;
        let power_classes: Vec<Vec<usize>> = (0..r)
            .map(|c| {
                let x = g.class_rep_idx(c);
                let mut cur = 0;
                (0..eu)
                    .map(|_| {
                        let k = g.class_of_idx(cur);
                        cur = g.mul_idx(cur, x);
                        k
                    })
                    .collect()
            })
            .collect();
        let zinv = invmod(z, l);
        let einv = invmod(e % l, l);

        let mut rows: Vec<(u64, Vec<u64>, ClassFunction)> = Vec::with_capacity(r);
        for v in vectors {
            let v0inv = invmod(v[0], l);
            let w: Vec<u64> = v.iter().map(|&x| mulmod(x, v0inv, l)).collect();
            let mut s = 0u64;
            for t in 0..r {
                s = (s + mulmod(mulmod(w[t], w[inverse_class[t]], l), invmod(sizes[t] % l, l), l)) % l;
            }
            let d2 = mulmod(order % l, invmod(s, l), l);
            let degree = (1..=order)
                .take_while(|d| d * d <= order)
                .find(|d| d * d % l == d2)
                .ok_or_else(|| GlError::Inconsistent("no integral degree".into()))?;
            let modvals: Vec<u64> = (0..r)
                .map(|t| mulmod(mulmod(degree, w[t], l), invmod(sizes[t] % l, l), l))
                .collect();
            let mut values = Vec::with_capacity(r);
            for pcs in &power_classes {
                let mut sum = CycloSum::new(e as u32);
                for k in 0..eu {
                    let mut m = 0u64;
                    let step = powmod(zinv, k as u64, l);
                    let mut zt = 1u64;
                    for &pc in pcs {
                        m = (m + mulmod(modvals[pc], zt, l)) % l;
                        zt = mulmod(zt, step, l);
                    }
                    let m = mulmod(m, einv, l);
                    if m > degree {
                        return Err(GlError::Inconsistent("eigenvalue multiplicity out of range".into()));
                    }
                    sum.add_root_int(k as i64, m as i64);
                }
                values.push(sum.finish());
            }
            rows.push((degree, modvals, ClassFunction::new(g.name(), values)));
        }
        rows.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
        if let Some(pos) = rows.iter().position(|row| row.1.iter().all(|&x| x == 1)) {
            let triv = rows.remove(pos);
            rows.insert(0, triv);
        }

        let table = CharacterTable {
            group: g.name().to_string(),
            order,
            exponent: e,
            class_sizes: sizes,
            class_orders: (0..r).map(|c| g.element_order(g.class_rep_idx(c))).collect(),
            inverse_class,
            irreducibles: rows.into_iter().map(|row| row.2).collect(),
        };
        table.verify()?;
        Ok(table)
    }

    /// Both orthogonality relations, exactly.
    pub fn verify(&self) -> Result<(), GlError> {
        let r = self.irreducibles.len();
        let sum_sq: u64 = (0..r).map(|i| self.degree(i).pow(2)).sum();
        if sum_sq != self.order {
            return Err(GlError::Inconsistent(format!("Σ dim² = {sum_sq} ≠ {}", self.order)));
        }
        for i in 0..r {
            for j in i..r {
                let ip = self.irreducibles[i].inner(&self.irreducibles[j], &self.class_sizes);
                if ip != CycloNumber::from_int(i64::from(i == j)) {
                    return Err(GlError::Inconsistent(format!("⟨χ{i}, χ{j}⟩ = {ip}")));
                }
            }
        }
        for a in 0..r {
            for b in a..r {
                let s: CycloNumber = self
                    .irreducibles
                    .iter()
                    .map(|chi| &chi.values[a] * &chi.values[b].conj())
                    .sum();
                let want = if a == b { (self.order / self.class_sizes[a]) as i64 } else { 0 };
                if s != CycloNumber::from_int(want) {
                    return Err(GlError::Inconsistent(format!("column orthogonality fails at ({a}, {b})")));
                }
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.irreducibles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.irreducibles.is_empty()
    }

    pub fn degree(&self, i: usize) -> u64 {
        let d = self.irreducibles[i].values[0].to_rational().expect("degree is rational");
        num_traits::ToPrimitive::to_u64(&d.to_integer()).expect("degree fits in u64")
    }

    pub fn degrees(&self) -> Vec<u64> {
        (0..self.len()).map(|i| self.degree(i)).collect()
    }

    pub fn character(&self, i: usize) -> &ClassFunction {
        &self.irreducibles[i]
    }

    /// Multiplicities of the irreducibles in a virtual character.
    pub fn decompose(&self, chi: &ClassFunction) -> Result<Vec<i64>, GlError> {
        self.irreducibles
            .iter()
            .map(|irr| {
                chi.multiplicity(irr, &self.class_sizes)
                    .ok_or_else(|| GlError::InvalidArgument("not a virtual character".into()))
            })
            .collect()
    }

    /// Index of an irreducible equal to chi.
    pub fn find(&self, chi: &ClassFunction) -> Option<usize> {
        self.irreducibles.iter().position(|x| x.values == chi.values)
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("irrep");
        for (k, (s, o)) in self.class_sizes.iter().zip(&self.class_orders).enumerate() {
            out.push_str(&format!(",c{k}[size={s};order={o}]"));
        }
        out.push('\n');
        for (i, chi) in self.irreducibles.iter().enumerate() {
            out.push_str(&format!("X.{}", i + 1));
            for v in &chi.values {
                out.push_str(&format!(",\"{}\"", v.minimize()));
            }
            out.push('\n');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::Partition;
    use crate::glfq::matrix::{gl_group, gl_subgroup};
    use crate::specht::SymCharacterTable;
    use crate::symgroup::Permutation;

    #[test]
    fn gl23_degrees() {
        let g = gl_group(2, 3).unwrap();
        let t = g.character_table().unwrap();
        assert_eq!(t.degrees(), vec![1, 1, 2, 2, 2, 3, 3, 4]);
        assert_eq!(t.exponent, 24);
    }

    #[test]
    fn other_gl_tables() {
        assert_eq!(gl_group(3, 2).unwrap().character_table().unwrap().degrees(), vec![1, 3, 3, 6, 7, 8]);
        assert_eq!(gl_group(2, 2).unwrap().character_table().unwrap().degrees(), vec![1, 1, 2]);
        let t = gl_group(2, 5).unwrap().character_table().unwrap();
        assert_eq!(t.len(), 24);
        assert!(t.to_csv().lines().count() == 25);
    }

    #[test]
    fn abelian_groups_have_linear_characters() {
        let g = gl_group(2, 3).unwrap();
        for spec in ["T", "E", "ZN", "U(1,1)"] {
            let h = gl_subgroup(&g, spec).unwrap();
            let t = h.character_table().unwrap();
            assert!(t.degrees().iter().all(|&d| d == 1), "{spec}");
            assert_eq!(t.len(), h.order());
        }
    }

    #[test]
    fn matches_specht_table_for_sigma5() {
        let gens = [Permutation::from_cycles("(1,2)", 5).unwrap(), Permutation::from_cycles("(1,2,3,4,5)", 5).unwrap()];
        let g = FiniteGroup::generate("Sym(5)", Permutation::identity(5), &gens).unwrap();
        let dixon = g.character_table().unwrap();
        let specht = SymCharacterTable::compute(5).unwrap();
        assert_eq!(dixon.len(), specht.partitions.len());
        for (mu, row) in specht.partitions.iter().zip(&specht.values) {
            let chi = ClassFunction::new(
                "Sym(5)",
                (0..g.num_classes())
                    .map(|c| {
                        let cls: Partition = g.class_rep(c).cycle_type();
                        CycloNumber::from_int(row[specht.index_of(&cls).unwrap()])
                    })
                    .collect(),
            );
            assert!(dixon.find(&chi).is_some(), "S^{mu} missing from the Dixon table");
        }
    }

    #[test]
    fn decompose_regular() {
        let g = gl_group(2, 3).unwrap();
        let t = g.character_table().unwrap();
        let m = t.decompose(&g.regular_character()).unwrap();
        assert_eq!(m, t.degrees().iter().map(|&d| d as i64).collect::<Vec<_>>());
    }
}
