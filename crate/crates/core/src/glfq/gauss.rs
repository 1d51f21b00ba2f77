//! The additive measure Ψ, Kondo–Gauss sums, the Weil representation of
//! GL_2(F_q) and the Hasse–Davenport relation.

use std::collections::HashMap;

use serde::Serialize;

use crate::classfn::ClassFunction;
use crate::cyclo::{rat, CycloNumber, CycloSum, Rational};

use super::field::{field, Fq};
use super::group::{induce, FiniteGroup, GroupElement};
use super::matrix::{gl_group, gl_subgroup, nonsplit_torus, FqMatrix, GlGroup};
use super::GlError;

/// Ψ(X) = ζ_p^{Tr(trace X)}.
pub fn psi_measure(x: &FqMatrix) -> CycloNumber {
    CycloNumber::root_of_unity(x.field().p(), x.psi_exponent() as i64).expect("p > 0")
}

/// Σ_{x ∈ C} ζ_p^{f(x)} for every class C.
pub fn measure_class_sums<E: GroupElement>(
    h: &FiniteGroup<E>,
    p: u32,
    f: impl Fn(&E) -> u32,
) -> Vec<CycloNumber> {
    h.classes()
        .iter()
        .map(|class| {
            let mut s = CycloSum::new(p);
            for &i in class {
                s.add_root_int(f(h.element(i)) as i64, 1);
            }
            s.finish()
        })
        .collect()
}

/// (1/χ(1)) Σ_{x∈H} χ(x) ζ_p^{f(x)}.
pub fn gauss_sum_with<E: GroupElement>(
    h: &FiniteGroup<E>,
    chi: &ClassFunction,
    p: u32,
    f: impl Fn(&E) -> u32,
) -> Result<CycloNumber, GlError> {
    if chi.len() != h.num_classes() {
        return Err(GlError::InvalidArgument(format!("class function is not on {}", h.name())));
    }
    let dim = &chi.values[0];
    if dim.is_zero() {
        return Err(GlError::ZeroDimension);
    }
    let sums = measure_class_sums(h, p, f);
    let total: CycloNumber = chi.values.iter().zip(&sums).map(|(a, b)| a * b).sum();
    total.checked_div(dim).map_err(|_| GlError::ZeroDimension)
}

/// W_H(ρ) = (1/dim ρ) Σ_{X∈H} χ_ρ(X) Ψ(X).
pub fn kondo_gauss(h: &GlGroup, chi: &ClassFunction) -> Result<CycloNumber, GlError> {
    let p = h.identity().field().p();
    gauss_sum_with(h, chi, p, FqMatrix::psi_exponent)
}

/// A cyclic group together with a generator and discrete logarithms.
pub struct CyclicLog {
    pub generator: FqMatrix,
    pub order: usize,
    log: HashMap<FqMatrix, usize>,
}

impl CyclicLog {
    pub fn new(h: &GlGroup) -> Result<Self, GlError> {
        let order = h.order();
        let gi = (0..order)
            .find(|&i| h.element_order(i) == order)
            .ok_or_else(|| GlError::InvalidArgument(format!("{} is not cyclic", h.name())))?;
        let generator = *h.element(gi);
        let mut log = HashMap::new();
        let mut x = *h.identity();
        for k in 0..order {
            log.insert(x, k);
            x = x.mul(&generator);
        }
        Ok(CyclicLog { generator, order, log })
    }

    pub fn log(&self, x: &FqMatrix) -> Option<usize> {
        self.log.get(x).copied()
    }

    /// The character generator^k ↦ ζ^{jk}.
    pub fn character(&self, h: &GlGroup, j: i64) -> ClassFunction {
        let n = self.order as u32;
        h.class_function(|x| CycloNumber::root_of_unity(n, j * self.log(x).expect("element of h") as i64).expect("n > 0"))
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct WeilData {
    pub q: u32,
    pub theta_exponent: i64,
    pub sigma: Fq,
    pub character: ClassFunction,
    pub degree: i64,
    pub norm: CycloNumber,
    pub w_gl: CycloNumber,
    pub w_torus: CycloNumber,
    pub w_top: CycloNumber,
}

impl WeilData {
    /// W_{GL_2}(r(Θ)) = −q·W_{F_{q²}^*}(Θ).
    pub fn identity_holds(&self) -> bool {
        self.w_gl == -self.w_torus.scale(&rat(self.q as i64))
    }
}

/// r(Θ) = Ind_{ZN}(Θ⊗Ψ) − Ind_{F_{q²}^*}(Θ) for the character Θ = ζ^{j·log} of the
/// embedded F_{q²}^*, with (Θ⊗Ψ)([[a, b], [0, a]]) = Θ(a)Ψ(b/a).
pub fn weil_character(q: u32, j: i64) -> Result<WeilData, GlError> {
    let g = gl_group(2, q)?;
    let f = g.identity().field();
    let sigma = f
        .least_non_square()
        .ok_or_else(|| GlError::InvalidArgument("the Weil construction needs q odd".into()))?;
    weil_character_with(&g, sigma, j)
}

pub fn weil_character_with(g: &GlGroup, sigma: Fq, j: i64) -> Result<WeilData, GlError> {
    let f = g.identity().field();
    let q = f.order();
    let n = (q * q - 1) as i64;
    if j.rem_euclid(q as i64 + 1) == 0 {
        return Err(GlError::InvalidArgument(format!("Θ = ζ^{j} is fixed by Frobenius")));
    }
    if f.degree() != 1 {
        return Err(GlError::InvalidArgument("the Weil construction is implemented over prime fields".into()));
    }
    let torus = nonsplit_torus(g, sigma)?;
    let logs = CyclicLog::new(&torus)?;
    let theta = logs.character(&torus, j);
    let zn = gl_subgroup(g, "ZN")?;
    let p = f.p();
    let theta_scalar = |a: Fq| {
        let k = logs.log(&FqMatrix::diag(f, &[a, a])).expect("scalars lie in the torus");
        CycloNumber::root_of_unity(n as u32, j * k as i64).expect("n > 0")
    };
    let top = zn.class_function(|m| {
        let a = m.get(0, 0);
        let b_over_a = f.mul(m.get(0, 1), f.inv(a).expect("a ≠ 0"));
        theta_scalar(a).mul_root(p, f.trace(b_over_a) as i64)
    });
    let character = induce(g, &zn, &top)?.sub(&induce(g, &torus, &theta)?);
    let degree = character.values[0]
        .to_rational()
        .filter(Rational::is_integer)
        .and_then(|r| num_traits::ToPrimitive::to_i64(&r.to_integer()))
        .ok_or_else(|| GlError::Inconsistent("non-integral degree".into()))?;
    Ok(WeilData {
        q,
        theta_exponent: j,
        sigma,
        norm: g.inner(&character, &character),
        degree,
        w_gl: kondo_gauss(g, &character)?,
        w_torus: kondo_gauss(&torus, &theta)?,
        w_top: kondo_gauss(&zn, &top)?,
        character,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct HasseDavenport {
    pub p: u32,
    pub m: u32,
    pub lambda_exponent: i64,
    pub tau_base: CycloNumber,
    pub tau_lifted: CycloNumber,
    pub holds: bool,
}

/// τ(λ) = Σ_{x∈F_p^*} λ(x) ψ(x) against τ(λ∘N) over F_{p^m}: −τ(λ∘N) = (−1)^m τ(λ)^m,
/// for λ(g^k) = ζ_{p−1}^{jk} with g the fixed generator of F_p^*.
pub fn hasse_davenport_check(p: u32, j: i64, m: u32) -> Result<HasseDavenport, GlError> {
    let base = field(p, 1)?;
    let ext = field(p, m)?;
    let conductor = p * (p - 1);
    let lambda = |x: Fq| -> i64 { j * base.log(x).expect("unit") as i64 * p as i64 };
    let psi = |t: u32| -> i64 { t as i64 * (p - 1) as i64 };
    let mut s = CycloSum::new(conductor);
    for x in base.units() {
        s.add_root_int(lambda(x) + psi(base.trace(x)), 1);
    }
    let tau_base = s.finish();
    let mut s = CycloSum::new(conductor);
    for x in ext.units() {
        s.add_root_int(lambda(ext.norm(x)) + psi(ext.trace(x)), 1);
    }
    let tau_lifted = s.finish();
    let sign = if m % 2 == 0 { 1 } else { -1 };
    let holds = -tau_lifted.clone() == tau_base.pow(m).scale(&rat(sign));
    Ok(HasseDavenport { p, m, lambda_exponent: j, tau_base, tau_lifted, holds })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::glfq::group::restrict;

    #[test]
    fn psi_examples() {
        let f3 = field(3, 1).unwrap();
        assert_eq!(psi_measure(&FqMatrix::zero(f3, 2)), CycloNumber::one());
        assert_eq!(psi_measure(&FqMatrix::diag(f3, &[1, 2])), CycloNumber::one());
        let f5 = field(5, 1).unwrap();
        assert_eq!(psi_measure(&FqMatrix::identity(f5, 3)), CycloNumber::root_of_unity(5, 3).unwrap());
    }

    #[test]
    fn trivial_character_of_units() {
        for p in [2, 3, 5, 7] {
            let g = gl_group(1, p).unwrap();
            assert_eq!(kondo_gauss(&g, &g.trivial_character()).unwrap(), CycloNumber::from_int(-1));
        }
    }

    #[test]
    fn full_group_trivial_is_direct_sum() {
        let g = gl_group(2, 3).unwrap();
        let direct: CycloNumber = g.elements().iter().map(psi_measure).sum();
        assert_eq!(kondo_gauss(&g, &g.trivial_character()).unwrap(), direct);
    }

    #[test]
    fn zero_dimension_rejected() {
        let g = gl_group(1, 3).unwrap();
        let zero = ClassFunction::zero(g.name(), g.num_classes());
        assert_eq!(kondo_gauss(&g, &zero).unwrap_err(), GlError::ZeroDimension);
    }

    #[test]
    fn weil_q3() {
        for j in [1, 2, 3, 5, 6, 7] {
            let w = weil_character(3, j).unwrap();
            assert_eq!(w.degree, 2);
            assert_eq!(w.norm, CycloNumber::one(), "r(Θ) irreducible for j = {j}");
            assert!(w.identity_holds(), "j = {j}");
            assert!(w.w_top.is_zero());
        }
        assert!(weil_character(3, 4).is_err());
        assert!(weil_character(2, 1).is_err());
    }

    #[test]
    fn weil_q5_embedding_independent() {
        let g = gl_group(2, 5).unwrap();
        let mut a: Vec<String> = Vec::new();
        let mut b: Vec<String> = Vec::new();
        for j in 1..24 {
            if j % 6 == 0 {
                continue;
            }
            let x = weil_character_with(&g, 2, j).unwrap();
            let y = weil_character_with(&g, 3, j).unwrap();
            assert!(x.identity_holds() && y.identity_holds());
            assert_eq!(x.degree, 4);
            a.push(x.w_gl.minimize().to_string());
            b.push(y.w_gl.minimize().to_string());
        }
        a.sort();
        b.sort();
        assert_eq!(a, b);
    }

    #[test]
    fn hasse_davenport() {
        for (p, m) in [(3, 2), (5, 2), (3, 3), (7, 2), (2, 4)] {
            for j in 0..(p as i64 - 1) {
                let r = hasse_davenport_check(p, j, m).unwrap();
                assert!(r.holds, "p={p} m={m} j={j}");
            }
        }
        let r = hasse_davenport_check(3, 0, 2).unwrap();
        assert_eq!(r.tau_base, CycloNumber::from_int(-1));
    }

    #[test]
    fn inductivity_on_cyclic_subgroups() {
        let g = gl_group(2, 2).unwrap();
        for i in 0..g.order() {
            let h = g.subgroup_generated(format!("C{i}"), &[*g.element(i)]).unwrap();
            let logs = CyclicLog::new(&h).unwrap();
            for j in 0..h.order() as i64 {
                let chi = logs.character(&h, j);
                let ind = induce(&g, &h, &chi).unwrap();
                assert_eq!(kondo_gauss(&h, &chi).unwrap(), kondo_gauss(&g, &ind).unwrap());
            }
        }
    }

    #[test]
    fn induction_is_transitive() {
        let g = gl_group(2, 3).unwrap();
        let b = gl_subgroup(&g, "B").unwrap();
        let t = gl_subgroup(&g, "T").unwrap();
        let table = t.character_table().unwrap();
        for chi in &table.irreducibles {
            let direct = induce(&g, &t, chi).unwrap();
            let staged = induce(&g, &b, &induce(&b, &t, chi).unwrap()).unwrap();
            assert_eq!(direct, staged);
            let back = restrict(&g, &t, &direct).unwrap();
            assert_eq!(back.values[0], CycloNumber::from_int(12));
        }
    }

    #[test]
    fn direct_sums_and_products() {
        let g = gl_group(2, 3).unwrap();
        let table = g.character_table().unwrap();
        let (a, b) = (table.character(2), table.character(5));
        let da = a.values[0].clone();
        let db = b.values[0].clone();
        let lhs = kondo_gauss(&g, &a.add(b)).unwrap() * (&da + &db);
        let rhs = kondo_gauss(&g, a).unwrap() * da + kondo_gauss(&g, b).unwrap() * db;
        assert_eq!(lhs, rhs);

        // GL_1 × GL_1 inside GL_2 as the Levi block
        let l = gl_subgroup(&g, "L(1,1)").unwrap();
        let g1 = gl_group(1, 3).unwrap();
        let t1 = g1.character_table().unwrap();
        for x in &t1.irreducibles {
            for y in &t1.irreducibles {
                let prod = l.class_function(|m| {
                    let a = FqMatrix::diag(m.field(), &[m.get(0, 0)]);
                    let b = FqMatrix::diag(m.field(), &[m.get(1, 1)]);
                    g1.eval(x, &a).unwrap() * g1.eval(y, &b).unwrap()
                });
                let w = kondo_gauss(&l, &prod).unwrap();
                assert_eq!(w, kondo_gauss(&g1, x).unwrap() * kondo_gauss(&g1, y).unwrap());
            }
        }
    }
}
