//! Wreath products Σ_n∫H and the invariant W^{x,H}.
//!
//! The product is (σ, α)(σ', α') = (σσ', α_i α'_{σ(i)}) where σσ' applies σ
//! first; with that reading the law is associative.

use std::fmt;
use std::hash::Hash;

use serde::Serialize;

use crate::classfn::ClassFunction;
use crate::combinat::{partitions, Partition};
use crate::cyclo::{rat, CycloNumber, Rational};
use crate::glfq::{gl_group, induce, FiniteGroup, FqMatrix, GlError, GlGroup, GroupElement};
use crate::specht::SymCharacterTable;
use crate::symgroup::Permutation;

use super::mezzadri::f_lambda;
use super::poly::CycloPoly;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct WreathElement<E> {
    pub sigma: Permutation,
    pub alphas: Vec<E>,
}

impl<E: GroupElement> WreathElement<E> {
    pub fn new(sigma: Permutation, alphas: Vec<E>) -> Self {
        assert_eq!(sigma.degree(), alphas.len(), "one α per point");
        WreathElement { sigma, alphas }
    }

    pub fn n(&self) -> usize {
        self.alphas.len()
    }

    /// σ(i) on 0-based positions.
    fn image(&self, i: usize) -> usize {
        self.sigma.apply(i + 1) - 1
    }

    /// Cycles of σ as 0-based position lists (x, σ(x), σ²(x), …).
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut c = vec![s];
            seen[s] = true;
            let mut x = self.image(s);
            while x != s {
                seen[x] = true;
                c.push(x);
                x = self.image(x);
            }
            out.push(c);
        }
        out
    }
}

impl<E: GroupElement> GroupElement for WreathElement<E> {
    fn compose(&self, other: &Self) -> Self {
        let sigma = &other.sigma * &self.sigma;
        let alphas = (0..self.n()).map(|i| self.alphas[i].compose(&other.alphas[self.image(i)])).collect();
        WreathElement { sigma, alphas }
    }

    /// (σ, α)⁻¹ = (σ⁻¹, (α_{σ⁻¹(i)})⁻¹).
    fn invert(&self) -> Self {
        let inv = self.sigma.inverse();
        let alphas = (0..self.n()).map(|i| self.alphas[inv.apply(i + 1) - 1].invert()).collect();
        WreathElement { sigma: inv, alphas }
    }
}

impl<E: fmt::Debug> fmt::Debug for WreathElement<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}; {:?})", self.sigma, self.alphas)
    }
}

pub type WreathGroup = FiniteGroup<WreathElement<FqMatrix>>;

/// Σ_n∫H generated by (1,2), the n-cycle and the generators of H in the first slot.
pub fn wreath_group<E: GroupElement>(
    n: usize,
    h: &FiniteGroup<E>,
    hname: &str,
) -> Result<FiniteGroup<WreathElement<E>>, GlError> {
    let one = h.identity().clone();
    let identity = WreathElement::new(Permutation::identity(n), vec![one.clone(); n]);
    let mut gens = Vec::new();
    if n >= 2 {
        for cyc in [vec![1, 2], (1..=n).collect::<Vec<_>>()] {
            let s = Permutation::from_cycle_list(&[cyc], n).expect("valid cycle");
            gens.push(WreathElement::new(s, vec![one.clone(); n]));
        }
    }
    if n >= 1 {
        for g in h.generators() {
            let mut alphas = vec![one.clone(); n];
            alphas[0] = g.clone();
            gens.push(WreathElement::new(Permutation::identity(n), alphas));
        }
    }
    FiniteGroup::generate(format!("Wreath({n},{hname})"), identity, &gens)
}

/// H = GL_1(F_q) or another registered matrix group, with Σ_n∫H.
pub fn wreath_over_gl(n: usize, m: usize, q: u32) -> Result<WreathGroup, GlError> {
    let h = gl_group(m, q)?;
    wreath_group(n, &h, h.name())
}

fn trace_exponent(product: &FqMatrix) -> u32 {
    product.psi_exponent()
}

fn cycle_product(alphas: &[FqMatrix], cycle: &[usize]) -> FqMatrix {
    let mut acc = alphas[cycle[0]];
    for &i in &cycle[1..] {
        acc = acc.mul(&alphas[i]);
    }
    acc
}

/// Λ(X) = Π_cycles ζ_p^{Tr(Trace(α_{x_1} ⋯ α_{x_r}))}, returned as the exponent of ζ_p.
pub fn lambda_exponent(x: &WreathElement<FqMatrix>) -> u32 {
    let p = x.alphas[0].field().p();
    x.cycles().iter().map(|c| trace_exponent(&cycle_product(&x.alphas, c))).sum::<u32>() % p
}

/// μ(W, Y): the cycles of Y⁻¹WY with the α's of W placed along them.
pub fn mu_exponent(w: &WreathElement<FqMatrix>, y: &WreathElement<FqMatrix>) -> u32 {
    let p = w.alphas[0].field().p();
    let c = y.invert().compose(w).compose(y);
    c.cycles().iter().map(|cyc| trace_exponent(&cycle_product(&w.alphas, cyc))).sum::<u32>() % p
}

fn field_p(j: &WreathGroup) -> u32 {
    j.identity().alphas.first().map(|a| a.field().p()).unwrap_or(2)
}

/// W^{x,H}_{n,J}(ρ) = (1/dim ρ) Σ_{X∈J} χ_ρ(X) ψ_{n,x}(σ) Λ(X).
pub fn wreath_invariant(j: &WreathGroup, chi: &ClassFunction) -> Result<CycloPoly, GlError> {
    if chi.len() != j.num_classes() {
        return Err(GlError::InvalidArgument(format!("class function is not on {}", j.name())));
    }
    let p = field_p(j);
    let inv = chi.values[0].inv().map_err(|_| GlError::ZeroDimension)?;
    let n = j.identity().n();
    let mut coeffs = vec![CycloNumber::zero(); n + 1];
    for (c, members) in j.classes().iter().enumerate() {
        if chi.values[c].is_zero() {
            continue;
        }
        for &i in members {
            let x = j.element(i);
            let term = chi.values[c].mul_root(p, lambda_exponent(x) as i64);
            coeffs[x.sigma.num_cycles()] += &term;
        }
    }
    Ok(CycloPoly::new(coeffs).scale(&inv))
}

/// The double sum of the Theorem 7.2 formula over all (W, Y) ∈ G × J.
pub fn theorem72_formula(g: &WreathGroup, j: &WreathGroup, chi: &ClassFunction) -> Result<CycloPoly, GlError> {
    let p = field_p(j);
    let n = j.identity().n();
    let mut coeffs = vec![CycloNumber::zero(); n + 1];
    for (c, members) in g.classes().iter().enumerate() {
        for &i in members {
            let w = g.element(i);
            let mut s = crate::cyclo::CycloSum::new(p);
            for y in j.elements() {
                s.add_root_int(mu_exponent(w, y) as i64, 1);
            }
            coeffs[w.sigma.num_cycles()] += &(&chi.values[c] * &s.finish());
        }
    }
    let denom = chi.values[0].scale(&rat(j.order() as i64));
    Ok(CycloPoly::new(coeffs).scale(&denom.inv().map_err(|_| GlError::ZeroDimension)?))
}

/// The Σ_n copy {(σ, 1, …, 1)} inside Σ_n∫H.
pub fn symmetric_subgroup(j: &WreathGroup) -> Result<WreathGroup, GlError> {
    let name = format!("{}/Sym", j.name());
    j.subgroup(name, |x| x.alphas.iter().all(|a| *a == FqMatrix::identity(a.field(), a.n())))
}

/// Theorem 7.3: W^{x,H}(Ind_{Σ_n}^{Σ_n∫H} S^λ) against f_λ(x ζ_p^{md}).
#[derive(Debug, Clone, Serialize)]
pub struct Theorem73Case {
    pub lambda: Partition,
    pub computed: CycloPoly,
    pub expected: CycloPoly,
    pub equal: bool,
}

pub fn verify_theorem73(n: usize, m: usize, q: u32) -> Result<Vec<Theorem73Case>, GlError> {
    let j = wreath_over_gl(n, m, q)?;
    let s = symmetric_subgroup(&j)?;
    let table = SymCharacterTable::cached(n).map_err(|e| GlError::Inconsistent(e.to_string()))?;
    let f = j.identity().alphas.first().map(|a| a.field()).ok_or_else(|| GlError::InvalidArgument("n ≥ 1".into()))?;
    let p = f.p();
    let md = (m as i64 * f.degree() as i64) % p as i64;
    table
        .partitions
        .iter()
        .map(|lam| {
            let chi = s.class_function(|x| CycloNumber::from_int(table.value(lam, &x.sigma.cycle_type()).expect("class")));
            let computed = wreath_invariant(&j, &induce(&j, &s, &chi)?)?;
            let expected = CycloPoly::from(&f_lambda(lam)).twist(p, md);
            Ok(Theorem73Case { lambda: lam.clone(), equal: computed == expected, computed, expected })
        })
        .collect()
}

/// The configuration G = Σ_2 ⋉ {(α₁, α₂, 1)} ≤ J = Σ_3∫H for H = GL_1(F_q).
pub struct Example74 {
    pub h: std::sync::Arc<GlGroup>,
    pub j: WreathGroup,
    pub g: WreathGroup,
}

#[derive(Debug, Clone, Serialize)]
pub struct Example74Case {
    pub character: usize,
    pub dim: CycloNumber,
    pub w_g: CycloPoly,
    pub w_j_ind: CycloPoly,
    pub theorem72: CycloPoly,
    pub display_g: CycloPoly,
    pub display_j: CycloPoly,
    /// W_{3,G}(λ) ≠ W_{3,J}(Ind λ), both computed from Def 7.1.
    pub direct_differ: bool,
    pub display_g_matches: bool,
    pub display_j_matches: bool,
    pub theorem72_differs: bool,
}

impl Example74 {
    pub fn new(q: u32) -> Result<Self, GlError> {
        let h = gl_group(1, q)?;
        let j = wreath_group(3, &h, h.name())?;
        let one = *h.identity();
        let g = j.subgroup(format!("{}/G", j.name()), |x| {
            x.alphas[2] == one && x.sigma.apply(3) == 3
        })?;
        Ok(Example74 { h, j, g })
    }

    fn element(&self, swap: bool, a1: FqMatrix, a2: FqMatrix) -> WreathElement<FqMatrix> {
        let sigma = if swap {
            Permutation::from_cycles("(1,2)", 3).expect("valid")
        } else {
            Permutation::identity(3)
        };
        WreathElement::new(sigma, vec![a1, a2, *self.h.identity()])
    }

    /// The two displayed sums, each multiplied out as a polynomial (dim·W form).
    fn displays(&self, chi: &ClassFunction) -> (CycloPoly, CycloPoly) {
        let f = self.h.identity().field();
        let p = f.p();
        let md = f.degree() as i64 % p as i64;
        let mut x3 = CycloNumber::zero();
        let mut x2_prod = CycloNumber::zero();
        let mut x2_sum = CycloNumber::zero();
        for a1 in self.h.elements() {
            for a2 in self.h.elements() {
                let id = self.element(false, *a1, *a2);
                let sw = self.element(true, *a1, *a2);
                let chi_id = self.g.eval(chi, &id).expect("in G");
                let chi_sw = self.g.eval(chi, &sw).expect("in G");
                let tr_sum = f.trace(f.add(a1.get(0, 0), a2.get(0, 0))) as i64;
                let tr_prod = f.trace(a1.mul(a2).get(0, 0)) as i64;
                x3 += &chi_id.mul_root(p, tr_sum + md);
                x2_prod += &chi_sw.mul_root(p, tr_prod + md);
                x2_sum += &chi_sw.mul_root(p, tr_sum + md);
            }
        }
        let half = Rational::new(1.into(), 2.into());
        let d1 = &CycloPoly::monomial(3, x3.clone()) + &CycloPoly::monomial(2, x2_prod.clone());
        let mixed = &x2_prod.scale(&half) + &x2_sum.scale(&half);
        let d2 = &CycloPoly::monomial(3, x3) + &CycloPoly::monomial(2, mixed);
        (d1, d2)
    }

    pub fn cases(&self) -> Result<Vec<Example74Case>, GlError> {
        let table = self.g.character_table()?;
        table
            .irreducibles
            .iter()
            .enumerate()
            .map(|(k, chi)| {
                let dim = chi.values[0].clone();
                let w_g = wreath_invariant(&self.g, chi)?;
                let w_j_ind = wreath_invariant(&self.j, &induce(&self.j, &self.g, chi)?)?;
                let theorem72 = theorem72_formula(&self.g, &self.j, chi)?;
                let (display_g, display_j) = self.displays(chi);
                Ok(Example74Case {
                    character: k,
                    direct_differ: w_g != w_j_ind,
                    display_g_matches: display_g == w_g.scale(&dim),
                    display_j_matches: display_j == w_j_ind.scale(&dim),
                    theorem72_differs: theorem72 != w_g,
                    dim,
                    w_g,
                    w_j_ind,
                    theorem72,
                    display_g,
                    display_j,
                })
            })
            .collect()
    }
}

/// Number of conjugacy classes of Σ_n∫H with |H| = h classes: partitions-valued functions.
pub fn expected_class_count(n: usize, h_classes: usize) -> usize {
    // coefficient of t^n in Π_k (1 − t^k)^{−h}
    let mut poly = vec![0usize; n + 1];
    poly[0] = 1;
    for k in 1..=n {
        for _ in 0..h_classes {
            for i in k..=n {
                poly[i] += poly[i - k];
            }
        }
    }
    let _ = partitions;
    poly[n]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::glfq::field;

    fn c2() -> std::sync::Arc<GlGroup> {
        gl_group(1, 3).unwrap()
    }

    #[test]
    fn wreath_orders_and_classes() {
        let h = c2();
        let w2 = wreath_group(2, &h, "C2").unwrap();
        assert_eq!(w2.order(), 8);
        assert_eq!(w2.num_classes(), 5);
        let w3 = wreath_group(3, &h, "C2").unwrap();
        assert_eq!(w3.order(), 48);
        assert_eq!(w3.num_classes(), expected_class_count(3, 2));
        assert_eq!(w3.num_classes(), 10);
    }

    #[test]
    fn group_law_round_trips() {
        use rand::{Rng, SeedableRng};
        let h = gl_group(2, 2).unwrap();
        let w = wreath_group(3, &h, "GL(2,2)").unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let a = w.element(rng.gen_range(0..w.order())).clone();
            let b = w.element(rng.gen_range(0..w.order())).clone();
            let c = w.element(rng.gen_range(0..w.order())).clone();
            assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
            assert_eq!(a.compose(&a.invert()), *w.identity());
            assert_eq!(a.invert().compose(&a), *w.identity());
        }
    }

    #[test]
    fn trivial_h_is_symmetric() {
        let h = gl_group(1, 2).unwrap();
        let w = wreath_group(4, &h, "1").unwrap();
        assert_eq!(w.order(), 24);
        assert_eq!(w.num_classes(), 5);
    }

    #[test]
    fn lambda_is_class_function() {
        let j = wreath_over_gl(3, 1, 3).unwrap();
        for class in j.classes() {
            let e = lambda_exponent(j.element(class[0]));
            assert!(class.iter().all(|&i| lambda_exponent(j.element(i)) == e));
        }
    }

    #[test]
    fn mu_with_identity_is_lambda() {
        let j = wreath_over_gl(3, 1, 3).unwrap();
        for x in j.elements() {
            assert_eq!(mu_exponent(x, j.identity()), lambda_exponent(x));
        }
    }

    #[test]
    fn trace_is_conjugation_invariant() {
        let g = gl_group(2, 3).unwrap();
        for (k, b) in g.elements().iter().enumerate().step_by(5) {
            let c = g.element((k * 7) % g.order());
            assert_eq!(b.invert().mul(c).mul(b).trace(), c.trace());
        }
    }

    #[test]
    fn theorem73_small() {
        for n in 1..=3 {
            for case in verify_theorem73(n, 1, 3).unwrap() {
                assert!(case.equal, "{}: {} vs {}", case.lambda, case.computed, case.expected);
            }
        }
    }

    #[test]
    fn trivial_rho_on_sigma_part() {
        let j = wreath_over_gl(2, 1, 3).unwrap();
        let s = symmetric_subgroup(&j).unwrap();
        let w = wreath_invariant(&s, &s.trivial_character()).unwrap();
        let expected = CycloPoly::from(&crate::invariants::poly::QPoly::from_ints(&[0, 1, 1])).twist(3, 1);
        assert_eq!(w, expected);
        assert_eq!(field(3, 1).unwrap().p(), 3);
    }

    #[test]
    fn example74_direct_route_is_inductive() {
        let ex = Example74::new(3).unwrap();
        assert_eq!(ex.g.order(), 8);
        let cases = ex.cases().unwrap();
        assert_eq!(cases.len(), 5);
        for c in &cases {
            assert!(!c.direct_differ);
            assert!(c.display_g_matches);
        }
    }

    #[test]
    fn example74_theorem72_integrand_differs_on_linear_characters() {
        let ex = Example74::new(3).unwrap();
        let cases = ex.cases().unwrap();
        let differing: Vec<bool> = cases.iter().map(|c| c.theorem72_differs).collect();
        let linear: Vec<bool> = cases.iter().map(|c| c.dim == CycloNumber::one()).collect();
        assert_eq!(differing, linear);
        // only the 2-dimensional character, whose x² part vanishes, agrees
        let matches: Vec<bool> = cases.iter().map(|c| c.display_j_matches).collect();
        assert_eq!(matches, linear.iter().map(|l| !l).collect::<Vec<_>>());
    }
}
