//! The symmetric-group invariant W^x and the node polynomials f_λ.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::classfn::ClassFunction;
use crate::combinat::{partitions, Partition};
use crate::cyclo::{rat, CycloNumber, Rational};
use crate::glfq::{induce, FiniteGroup, GlError};
use crate::report::CheckReport;
use crate::specht::{induce_young, SpechtError, SymCharacterTable};
use crate::symgroup::Permutation;

use super::poly::{CycloPoly, QPoly};

/// ψ_x(σ) = x^{l(σ)} with l the number of cycles.
pub fn psi_x(sigma: &Permutation) -> QPoly {
    QPoly::monomial(sigma.num_cycles(), rat(1))
}

/// f_λ(x) = Π_{(i,j) ∈ [λ]} (x − i + j).
pub fn f_lambda(lambda: &Partition) -> QPoly {
    lambda.contents().into_iter().fold(QPoly::one(), |acc, c| &acc * &QPoly::linear(c))
}

fn sym_group(n: usize) -> Result<FiniteGroup<Permutation>, GlError> {
    let mut gens = Vec::new();
    if n >= 2 {
        gens.push(Permutation::from_cycle_list(&[vec![1, 2]], n).expect("valid"));
        gens.push(Permutation::from_cycle_list(&[(1..=n).collect()], n).expect("valid"));
    }
    FiniteGroup::generate(format!("Sym({n})"), Permutation::identity(n), &gens)
}

/// W^x_H(ρ) = (1/dim ρ) Σ_{h ∈ H} χ_ρ(h) ψ_x(h) for H a permutation group.
pub fn w_x_group(h: &FiniteGroup<Permutation>, chi: &ClassFunction) -> Result<CycloPoly, GlError> {
    if chi.len() != h.num_classes() {
        return Err(GlError::InvalidArgument(format!("class function is not on {}", h.name())));
    }
    let dim = chi.values[0].clone();
    let inv = dim.inv().map_err(|_| GlError::ZeroDimension)?;
    let mut total = CycloPoly::zero();
    for (c, members) in h.classes().iter().enumerate() {
        let l = h.class_rep(c).num_cycles();
        let coeff = chi.values[c].scale(&rat(members.len() as i64));
        total = &total + &CycloPoly::monomial(l, coeff);
    }
    Ok(total.scale(&inv))
}

/// W^x_{Σ_n} of an integer class function by summing over every permutation.
pub fn w_x_brute_force(n: usize, chi_by_type: impl Fn(&Partition) -> i64) -> QPoly {
    let mut counts = vec![BigInt::zero(); n + 1];
    for sigma in Permutation::all(n) {
        counts[sigma.num_cycles()] += chi_by_type(&sigma.cycle_type());
    }
    let dim = chi_by_type(&Partition::from_unsorted(vec![1; n]));
    QPoly::new(counts.into_iter().map(|c| Rational::new(c, BigInt::from(dim))).collect())
}

/// W^x_{Σ_n} of a class function given on `partitions(n)`, via class sizes.
pub fn w_x_classes(n: usize, values: &[Rational]) -> QPoly {
    let parts = partitions(n);
    let dim = values[parts.len() - 1].clone();
    let total: QPoly = parts
        .iter()
        .zip(values)
        .map(|(p, v)| QPoly::monomial(p.len(), v * Rational::from_integer(BigInt::from(p.class_size()))))
        .sum();
    total.scale(&(Rational::from_integer(1.into()) / dim))
}

fn table(n: usize) -> Result<std::sync::Arc<SymCharacterTable>, SpechtError> {
    SymCharacterTable::cached(n)
}

fn row(t: &SymCharacterTable, p: &Partition) -> Vec<Rational> {
    t.values[t.index_of(p).expect("partition of n")].iter().map(|&v| rat(v)).collect()
}

fn dim_of(t: &SymCharacterTable, p: &Partition) -> i64 {
    *t.values[t.index_of(p).expect("partition of n")].last().expect("identity class")
}

/// W^x_{Σ_n}(ρ_λ) = f_λ for all λ ⊢ n, by brute force, with the auxiliary identities
/// used in the inductive proof.
pub fn verify_mezzadri(n: usize) -> Result<CheckReport, SpechtError> {
    let mut report = CheckReport::new("mezzadri", format!("n={n}"));
    let t = table(n)?;
    for lam in &t.partitions {
        let i = t.index_of(lam).expect("partition");
        let w = w_x_brute_force(n, |ty| t.values[i][t.index_of(ty).expect("cycle type")]);
        let f = f_lambda(lam);
        report.record(w == f, || format!("W^x(ρ_{lam}) = {w} but f_{lam} = {f}"));
        report.record(f.is_monic() && f.is_integral() && f.degree() == Some(n), || {
            format!("f_{lam} is not monic integral of degree {n}")
        });
        let conj = lam.conjugate();
        let sign = if n % 2 == 0 { rat(1) } else { rat(-1) };
        let wc = w_x_classes(n, &row(&t, &conj)).negate_x().scale(&sign);
        report.record(w == wc, || format!("conjugate identity fails for {lam}"));
    }
    if n >= 1 {
        let down = table(n - 1)?;
        for mu in &down.partitions {
            let mut step = 0i64;
            let mut rhs = QPoly::zero();
            for node in mu.addable_nodes() {
                let lam = mu.add_node(node).expect("addable");
                let d = dim_of(&t, &lam);
                step += d * (node.i as i64 - node.j as i64);
                rhs = &rhs + &f_lambda(&lam).scale(&rat(d));
            }
            report.record(step == 0, || format!("Σ dim(S^λ)(i − j) = {step} over addable nodes of {mu}"));
            let lhs = (&QPoly::x() * &f_lambda(mu)).scale(&rat(n as i64 * dim_of(&down, mu)));
            report.record(lhs == rhs, || format!("branching recursion fails at {mu}"));
        }
    }
    Ok(report)
}

/// W^x_{Σ_n}(m(V₁⊗V₂)) = W^x(V₁)·W^x(V₂) for irreducible V₁ of Σ_k, V₂ of Σ_{n−k}.
pub fn verify_psh_multiplicativity(k: usize, n: usize) -> Result<CheckReport, SpechtError> {
    let mut report = CheckReport::new("mezzadri-multiplicativity", format!("k={k},n={n}"));
    if k > n {
        return Ok(report);
    }
    let ta = table(k)?;
    let tb = table(n - k)?;
    for a in &ta.partitions {
        for b in &tb.partitions {
            let ind = induce_young(k, n - k, &row(&ta, a), &row(&tb, b));
            let lhs = w_x_classes(n, &ind);
            let rhs = &f_lambda(a) * &f_lambda(b);
            report.record(lhs == rhs, || format!("W^x(m({a}⊗{b})) = {lhs}, expected {rhs}"));
        }
    }
    Ok(report)
}

/// W^x_H(σ) = W^x_{Σ_n}(Ind σ) for every cyclic H ≤ Σ_n and every character σ of H.
pub fn verify_cyclic_inductivity(n: usize) -> Result<CheckReport, GlError> {
    let mut report = CheckReport::new("mezzadri-cyclic-induction", format!("n={n}"));
    let g = sym_group(n)?;
    let mut seen = std::collections::HashSet::new();
    for x in g.elements() {
        let h = g.subgroup_generated(format!("<{x}>"), &[x.clone()])?;
        let mut key: Vec<Permutation> = h.elements().to_vec();
        key.sort_by_key(Permutation::images);
        if !seen.insert(key) {
            continue;
        }
        let order = h.order();
        let pos: std::collections::HashMap<Permutation, usize> = {
            let mut m = std::collections::HashMap::new();
            let mut y = Permutation::identity(n);
            for k in 0..order {
                m.insert(y.clone(), k);
                y = &y * x;
            }
            m
        };
        for j in 0..order as i64 {
            let chi = h.class_function(|y| {
                CycloNumber::root_of_unity(order as u32, j * pos[y] as i64).expect("order > 0")
            });
            let lhs = w_x_group(&h, &chi)?;
            let rhs = w_x_group(&g, &induce(&g, &h, &chi)?)?;
            report.record(lhs == rhs, || format!("H = <{x}>, j = {j}: {lhs} vs {rhs}"));
        }
    }
    Ok(report)
}

pub fn dimension(lambda: &Partition) -> u64 {
    lambda.count_standard_tableaux()
}

pub fn as_i64(r: &Rational) -> Option<i64> {
    r.is_integer().then(|| r.to_integer().to_i64()).flatten()
}
