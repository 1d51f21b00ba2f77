//! The hyperHecke algebra of GL_n(F_q).
//!
//! A generator is a triple [(K, ψ), g, (H, φ)] with K ≤ g⁻¹Hg and ψ(k) = φ(gkg⁻¹),
//! taken modulo
//!
//! ```text
//! [(K,ψ), gk, (H,φ)] = ψ(k⁻¹)[(K,ψ), g, (H,φ)]
//! [(K,ψ), hg, (H,φ)] = φ(h⁻¹)[(K,ψ), g, (H,φ)]
//! ```
//!
//! Subgroups are index sets in the enumeration of the ambient GL_n(F_q) and
//! characters are linear, stored as exponents of a root of unity whose order is
//! the exponent of the subgroup. Triples act on induced modules by
//! g' ⊗_K v ↦ g'g⁻¹ ⊗_H v, which is the oracle for the product.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::sync::Arc;

use rand::Rng;
use rayon::prelude::*;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::cyclo::{lcm, CycloError, CycloNumber};
use crate::glfq::matrix::gl_name;
use crate::glfq::{gl_group, gl_subgroup, FqMatrix, GlError, GlGroup};
use crate::report::CheckReport;
use crate::symgroup::KMatrix;

#[derive(Debug, Error)]
pub enum HeckeError {
    #[error(transparent)]
    Group(#[from] GlError),
    #[error(transparent)]
    Cyclo(#[from] CycloError),
    #[error("K is not contained in g⁻¹Hg")]
    Containment,
    #[error("ψ(k) ≠ φ(gkg⁻¹) for some k ∈ K")]
    CharacterMismatch,
    #[error("triples live in different groups: {0} and {1}")]
    AmbientMismatch(String, String),
    #[error("the values do not define a linear character: {0}")]
    NotACharacter(String),
    #[error("{0}")]
    Invalid(String),
}

/// ζ_from^k as a power of ζ_to, if it lies in μ_to.
fn rescale(k: u64, from: u64, to: u64) -> Option<u32> {
    let num = (k % from) * to;
    (num % from == 0).then(|| (num / from) as u32)
}

/// A subgroup of GL_n(F_q) with a linear character.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubgroupChar {
    pub n: usize,
    pub q: u32,
    /// Sorted indices into `gl_group(n, q)`.
    pub members: Vec<usize>,
    /// Exponent of the subgroup; values are powers of ζ_conductor.
    pub conductor: u32,
    pub chi: Vec<u32>,
}

impl SubgroupChar {
    pub fn order(&self) -> usize {
        self.members.len()
    }

    fn position(&self, idx: usize) -> Option<usize> {
        self.members.binary_search(&idx).ok()
    }

    pub fn contains(&self, idx: usize) -> bool {
        self.position(idx).is_some()
    }

    /// χ(x) as a power of ζ_conductor.
    pub fn exponent_at(&self, idx: usize) -> Option<u32> {
        self.position(idx).map(|p| self.chi[p])
    }

    pub fn value(&self, idx: usize) -> Option<CycloNumber> {
        self.exponent_at(idx).map(|k| CycloNumber::root_of_unity(self.conductor, k as i64).expect("conductor ≥ 1"))
    }

    pub fn is_trivial(&self) -> bool {
        self.chi.iter().all(|&k| k == 0)
    }

    /// Subgroup path in the form "GL(2,3)/[0,5,17]".
    pub fn path(&self) -> String {
        let ids: Vec<String> = self.members.iter().map(usize::to_string).collect();
        format!("{}/[{}]", gl_name(self.n, self.q), ids.join(","))
    }
}

impl fmt::Display for SubgroupChar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = if self.is_trivial() { "1" } else { "χ" };
        write!(f, "(|{}|,{kind})", self.order())
    }
}

impl Serialize for SubgroupChar {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("SubgroupChar", 3)?;
        st.serialize_field("subgroup", &self.path())?;
        st.serialize_field("conductor", &self.conductor)?;
        st.serialize_field("chi", &self.chi)?;
        st.end()
    }
}

/// A normalized-or-not generator [(K, ψ), g, (H, φ)].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HeckeTriple {
    pub source: Arc<SubgroupChar>,
    pub g: usize,
    pub target: Arc<SubgroupChar>,
}

impl HeckeTriple {
    pub fn ambient(&self) -> (usize, u32) {
        (self.source.n, self.source.q)
    }

    pub fn matrix(&self) -> FqMatrix {
        *gl_group(self.source.n, self.source.q).expect("registered").element(self.g)
    }
}

impl fmt::Display for HeckeTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}, {}]", self.source, self.matrix(), self.target)
    }
}

impl Serialize for HeckeTriple {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("HeckeTriple", 3)?;
        st.serialize_field("source", &*self.source)?;
        st.serialize_field("g", &self.matrix())?;
        st.serialize_field("target", &*self.target)?;
        st.end()
    }
}

/// Linear combination of normalized triples.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct HeckeElement {
    pub terms: BTreeMap<HeckeTriple, CycloNumber>,
}

impl HeckeElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds c·t after normalizing t.
    pub fn add(&mut self, c: &CycloNumber, t: &HeckeTriple) {
        let (c, t) = normalize(c, t);
        self.add_normalized(c, t);
    }

    fn add_normalized(&mut self, c: CycloNumber, t: HeckeTriple) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(t.clone()).or_insert_with(CycloNumber::zero);
        *entry += &c;
        if entry.is_zero() {
            self.terms.remove(&t);
        }
    }

    pub fn add_element(&mut self, other: &HeckeElement) {
        for (t, c) in &other.terms {
            self.add_normalized(c.clone(), t.clone());
        }
    }

    pub fn scale(&self, c: &CycloNumber) -> HeckeElement {
        let mut out = HeckeElement::zero();
        for (t, v) in &self.terms {
            out.add_normalized(v * c, t.clone());
        }
        out
    }

    /// Bilinear extension of the product of triples.
    pub fn mul(&self, other: &HeckeElement) -> HeckeElement {
        let mut out = HeckeElement::zero();
        for (t1, c1) in &self.terms {
            for (t2, c2) in &other.terms {
                for (t, c) in hecke_product(t1, t2).terms {
                    out.add_normalized(&(c1 * c2) * &c, t);
                }
            }
        }
        out
    }
}

impl Serialize for HeckeElement {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term<'a> {
            #[serde(flatten)]
            triple: &'a HeckeTriple,
            coeff: &'a CycloNumber,
        }
        let terms: Vec<Term> = self.terms.iter().map(|(triple, coeff)| Term { triple, coeff }).collect();
        terms.serialize(s)
    }
}

/// GL_n(F_q) with its centre, as the ambient group for triples.
#[derive(Clone)]
pub struct HyperHecke {
    pub n: usize,
    pub q: u32,
    group: Arc<GlGroup>,
    center: Vec<usize>,
}

impl HyperHecke {
    pub fn new(n: usize, q: u32) -> Result<Self, HeckeError> {
        let group = gl_group(n, q)?;
        let center = (0..group.order()).filter(|&i| group.element(i).is_scalar()).collect();
        Ok(HyperHecke { n, q, group, center })
    }

    pub fn group(&self) -> &GlGroup {
        &self.group
    }

    pub fn center(&self) -> &[usize] {
        &self.center
    }

    pub fn index(&self, m: &FqMatrix) -> usize {
        self.group.index_of(m).expect("element of the ambient group")
    }

    fn exponent_of(&self, members: &[usize]) -> u64 {
        members.iter().fold(1, |acc, &i| lcm(acc, self.group.element_order(i) as u64))
    }

    /// Builds (members, χ) from χ given as ζ_m^k pairs (k, m).
    pub fn character(&self, mut members: Vec<usize>, turns: impl Fn(usize) -> (u64, u64)) -> Result<SubgroupChar, HeckeError> {
        members.sort_unstable();
        members.dedup();
        let conductor = self.exponent_of(&members);
        let chi = members
            .iter()
            .map(|&x| {
                let (k, m) = turns(x);
                rescale(k, m, conductor).ok_or_else(|| HeckeError::NotACharacter(format!("ζ_{m}^{k} on an element of {}", gl_name(self.n, self.q))))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(SubgroupChar { n: self.n, q: self.q, members, conductor: conductor as u32, chi })
    }

    pub fn trivial(&self, members: Vec<usize>) -> Result<SubgroupChar, HeckeError> {
        self.character(members, |_| (0, 1))
    }

    pub fn is_homomorphism(&self, s: &SubgroupChar) -> bool {
        let c = s.conductor;
        s.members.iter().all(|&x| {
            s.members.iter().all(|&y| {
                let xy = self.group.mul_idx(x, y);
                s.exponent_at(xy) == Some((s.exponent_at(x).unwrap_or(0) + s.exponent_at(y).unwrap_or(0)) % c)
            })
        })
    }

    /// Members of a named subgroup ("B", "U(1,1)", …) or the whole group for "G".
    pub fn subgroup(&self, spec: &str) -> Result<Vec<usize>, HeckeError> {
        if spec == "G" {
            return Ok((0..self.group.order()).collect());
        }
        let h = gl_subgroup(&self.group, spec)?;
        let mut v: Vec<usize> = h.elements().iter().map(|e| self.index(e)).collect();
        v.sort_unstable();
        Ok(v)
    }

    pub fn closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = BTreeSet::from([0usize]);
        let mut frontier = vec![0usize];
        while let Some(x) = frontier.pop() {
            for &s in gens {
                let y = self.group.mul_idx(x, s);
                if seen.insert(y) {
                    frontier.push(y);
                }
            }
        }
        seen.into_iter().collect()
    }

    /// Subgroups ⟨Z, x, y⟩; for the groups used here this is every subgroup containing Z.
    pub fn subgroups_containing_center(&self) -> Vec<Vec<usize>> {
        let n = self.group.order();
        let zgens: Vec<usize> = self.center.clone();
        let found: BTreeSet<Vec<usize>> = (0..n)
            .into_par_iter()
            .flat_map_iter(|x| {
                let zgens = zgens.clone();
                (x..n).map(move |y| {
                    let mut gens = zgens.clone();
                    gens.extend([x, y]);
                    gens
                })
            })
            .map(|gens| self.closure(&gens))
            .collect::<Vec<_>>()
            .into_iter()
            .collect();
        found.into_iter().collect()
    }

    /// All linear characters of a subgroup.
    pub fn linear_characters(&self, members: &[usize]) -> Result<Vec<SubgroupChar>, HeckeError> {
        let elems: Vec<FqMatrix> = members.iter().map(|&i| *self.group.element(i)).collect();
        let h = self.group.subgroup_from_elements(format!("{}/[{}]", self.group.name(), members.len()), elems)?;
        let table = h.character_table()?;
        let conductor = self.exponent_of(members);
        let mut out = Vec::new();
        for chi in table.irreducibles.iter().filter(|c| c.values[0] == CycloNumber::one()) {
            let exps: HashMap<usize, u64> = (0..h.num_classes())
                .map(|c| {
                    let k = (0..conductor)
                        .find(|&k| chi.values[c] == CycloNumber::root_of_unity(conductor as u32, k as i64).expect("conductor ≥ 1"))
                        .ok_or_else(|| HeckeError::NotACharacter("value is not a root of unity".into()))?;
                    Ok((c, k))
                })
                .collect::<Result<_, HeckeError>>()?;
            out.push(self.character(members.to_vec(), |x| {
                let c = h.class_of(self.group.element(x)).expect("member");
                (exps[&c], conductor)
            })?);
        }
        out.sort();
        Ok(out)
    }

    /// Pairs (H, φ) with Z ≤ H and φ trivial on Z.
    pub fn poset(&self) -> Result<Vec<Arc<SubgroupChar>>, HeckeError> {
        let mut out = Vec::new();
        for h in self.subgroups_containing_center() {
            for chi in self.linear_characters(&h)? {
                if self.center.iter().all(|&z| chi.exponent_at(z) == Some(0)) {
                    out.push(Arc::new(chi));
                }
            }
        }
        Ok(out)
    }

    fn conj(&self, g: usize, x: usize) -> usize {
        self.group.mul_idx(self.group.mul_idx(g, x), self.group.inverse_idx(g))
    }

    /// Checks gKg⁻¹ ⊆ H and ψ(k) = φ(gkg⁻¹).
    pub fn validate(&self, source: &Arc<SubgroupChar>, g: usize, target: &Arc<SubgroupChar>) -> Result<HeckeTriple, HeckeError> {
        for s in [source, target] {
            if (s.n, s.q) != (self.n, self.q) {
                return Err(HeckeError::AmbientMismatch(gl_name(s.n, s.q), gl_name(self.n, self.q)));
            }
        }
        let mut mismatch = false;
        for (p, &k) in source.members.iter().enumerate() {
            let h = self.conj(g, k);
            match target.value(h) {
                None => return Err(HeckeError::Containment),
                Some(v) => {
                    let w = CycloNumber::root_of_unity(source.conductor, source.chi[p] as i64)?;
                    mismatch |= v != w;
                }
            }
        }
        if mismatch {
            return Err(HeckeError::CharacterMismatch);
        }
        Ok(HeckeTriple { source: source.clone(), g, target: target.clone() })
    }

    /// Identity triple on (H, φ).
    pub fn identity_triple(&self, pair: &Arc<SubgroupChar>) -> HeckeTriple {
        HeckeTriple { source: pair.clone(), g: 0, target: pair.clone() }
    }

    /// Normalized generators: every pair of poset entries and every double coset HgK that gives a valid triple.
    pub fn generators(&self) -> Result<Vec<HeckeTriple>, HeckeError> {
        let poset = self.poset()?;
        let mut out: Vec<HeckeTriple> = poset
            .par_iter()
            .flat_map_iter(|k| {
                poset.iter().flat_map(move |h| {
                    double_coset_reps(self, &h.members, &k.members)
                        .into_iter()
                        .filter_map(move |g| self.validate(k, g, h).ok())
                })
            })
            .collect();
        out.sort();
        Ok(out)
    }

    /// Random valid triple: a poset pair, g random, and the largest source inside g⁻¹Hg.
    pub fn random_triple(&self, poset: &[Arc<SubgroupChar>], rng: &mut impl Rng) -> HeckeTriple {
        loop {
            let target = &poset[rng.gen_range(0..poset.len())];
            let source = &poset[rng.gen_range(0..poset.len())];
            let g = rng.gen_range(0..self.group.order());
            if let Ok(t) = self.validate(source, g, target) {
                return t;
            }
        }
    }
}

fn context(n: usize, q: u32) -> HyperHecke {
    HyperHecke::new(n, q).expect("ambient group already built")
}

/// Least elements of the double cosets H\G/K.
pub fn double_coset_reps(ctx: &HyperHecke, h: &[usize], k: &[usize]) -> Vec<usize> {
    let n = ctx.group.order();
    let mut seen = vec![false; n];
    let mut reps = Vec::new();
    for x in 0..n {
        if seen[x] {
            continue;
        }
        reps.push(x);
        for &a in h {
            let ax = ctx.group.mul_idx(a, x);
            for &b in k {
                seen[ctx.group.mul_idx(ax, b)] = true;
            }
        }
    }
    reps
}

/// Rewrites c·[(K,ψ), g, (H,φ)] with g replaced by the least element of HgK.
pub fn normalize(c: &CycloNumber, t: &HeckeTriple) -> (CycloNumber, HeckeTriple) {
    let ctx = context(t.source.n, t.source.q);
    let grp = &ctx.group;
    let mut best = (t.g, 0usize, 0usize);
    for (hp, &h) in t.target.members.iter().enumerate() {
        let hg = grp.mul_idx(h, t.g);
        for (kp, &k) in t.source.members.iter().enumerate() {
            let x = grp.mul_idx(hg, k);
            if x < best.0 {
                best = (x, hp, kp);
            }
        }
    }
    let (g0, hp, kp) = best;
    if g0 == t.g {
        return (c.clone(), t.clone());
    }
    // [g] = φ(h)ψ(k)[hgk]
    let scalar = c
        .mul_root(t.target.conductor, t.target.chi[hp] as i64)
        .mul_root(t.source.conductor, t.source.chi[kp] as i64);
    (scalar, HeckeTriple { source: t.source.clone(), g: g0, target: t.target.clone() })
}

/// [(H,φ), g₁, (J,μ)]·[(K,ψ), g₂, (H,φ)] = [(K,ψ), g₁g₂, (J,μ)], zero when the middle pairs differ.
pub fn hecke_product(t1: &HeckeTriple, t2: &HeckeTriple) -> HeckeElement {
    let mut out = HeckeElement::zero();
    if t1.source != t2.target {
        return out;
    }
    let ctx = context(t1.source.n, t1.source.q);
    let t = HeckeTriple { source: t2.source.clone(), g: ctx.group.mul_idx(t1.g, t2.g), target: t1.target.clone() };
    out.add(&CycloNumber::one(), &t);
    out
}

/// Ind_K^G(ψ) with basis r ⊗ 1 over the least elements r of the cosets gK.
pub struct InducedModule {
    pub pair: Arc<SubgroupChar>,
    pub reps: Vec<usize>,
    /// For each x ∈ G: (index of its coset rep r, κ ∈ K) with x = rκ.
    coset: Vec<(usize, usize)>,
}

impl InducedModule {
    pub fn new(ctx: &HyperHecke, pair: &Arc<SubgroupChar>) -> Self {
        let n = ctx.group.order();
        let mut coset = vec![(usize::MAX, 0); n];
        let mut reps = Vec::new();
        for x in 0..n {
            if coset[x].0 != usize::MAX {
                continue;
            }
            let r = reps.len();
            reps.push(x);
            for &k in &pair.members {
                coset[ctx.group.mul_idx(x, k)] = (r, k);
            }
        }
        InducedModule { pair: pair.clone(), reps, coset }
    }

    pub fn dim(&self) -> usize {
        self.reps.len()
    }

    /// x ⊗ 1 = r ⊗ ψ(κ): the basis index and the exponent of ψ(κ).
    pub fn reduce(&self, x: usize) -> (usize, u32) {
        let (r, k) = self.coset[x];
        (r, self.pair.exponent_at(k).expect("κ ∈ K"))
    }
}

/// Monomial matrix: column j has the single entry `cols[j] = (row, value)`.
#[derive(Debug, Clone, PartialEq)]
pub struct MonomialMatrix {
    pub rows: usize,
    pub cols: Vec<(usize, CycloNumber)>,
}

impl MonomialMatrix {
    /// self ∘ other.
    pub fn compose(&self, other: &MonomialMatrix) -> MonomialMatrix {
        let cols = other.cols.iter().map(|(r, v)| (self.cols[*r].0, &self.cols[*r].1 * v)).collect();
        MonomialMatrix { rows: self.rows, cols }
    }

    pub fn scale(&self, c: &CycloNumber) -> MonomialMatrix {
        MonomialMatrix { rows: self.rows, cols: self.cols.iter().map(|(r, v)| (*r, v * c)).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|(_, v)| v.is_zero())
    }
}

/// Matrix of g' ⊗_K v ↦ g'g⁻¹ ⊗_H v between the induced modules.
pub fn apply_triple(ctx: &HyperHecke, t: &HeckeTriple, from: &InducedModule, to: &InducedModule) -> MonomialMatrix {
    assert!(from.pair == t.source && to.pair == t.target, "modules do not match the triple");
    let ginv = ctx.group.inverse_idx(t.g);
    let cols = from
        .reps
        .iter()
        .map(|&r| {
            let (row, e) = to.reduce(ctx.group.mul_idx(r, ginv));
            (row, CycloNumber::root_of_unity(to.pair.conductor, e as i64).expect("conductor ≥ 1"))
        })
        .collect();
    MonomialMatrix { rows: to.dim(), cols }
}

/// Left multiplication by x on an induced module.
pub fn left_action(ctx: &HyperHecke, x: usize, m: &InducedModule) -> MonomialMatrix {
    let cols = m
        .reps
        .iter()
        .map(|&r| {
            let (row, e) = m.reduce(ctx.group.mul_idx(x, r));
            (row, CycloNumber::root_of_unity(m.pair.conductor, e as i64).expect("conductor ≥ 1"))
        })
        .collect();
    MonomialMatrix { rows: m.dim(), cols }
}

/// Levi part diag(x₁₁, x₂₂) of x for the split (a, n−a).
fn levi_index(ctx: &HyperHecke, x: usize, a: usize) -> usize {
    if a == 0 || a == ctx.n {
        return x;
    }
    let m = ctx.group.element(x);
    ctx.index(&FqMatrix::block_diag(&m.block(0, a, 0, a), &m.block(a, ctx.n, a, ctx.n)))
}

fn in_parabolic(ctx: &HyperHecke, x: usize, a: usize) -> bool {
    ctx.group.element(x).lower_left_zero(a)
}

fn in_unipotent(ctx: &HyperHecke, x: usize, a: usize) -> bool {
    let m = ctx.group.element(x);
    m.lower_left_zero(a) && m.is_identity_block(0, a) && m.is_identity_block(a, ctx.n)
}

/// Inflation of ψ₁ ⊗ ψ₂ along (K₁ × K₂)U_{n,m} ≤ GL_{n+m}, or only K₁ × K₂ when `levi_only`.
fn inflate(
    big: &HyperHecke,
    left: Option<&SubgroupChar>,
    right: Option<&SubgroupChar>,
    a: usize,
    levi_only: bool,
) -> Result<SubgroupChar, HeckeError> {
    let n = big.n;
    let left_ctx = left.map(|s| context(s.n, s.q));
    let right_ctx = right.map(|s| context(s.n, s.q));
    let mut members = Vec::new();
    let mut turns = HashMap::new();
    let conductor = lcm(left.map_or(1, |s| s.conductor as u64), right.map_or(1, |s| s.conductor as u64));
    for x in 0..big.group.order() {
        if !in_parabolic(big, x, a) || (levi_only && !big.group.element(x).upper_right_zero(a)) {
            continue;
        }
        let m = big.group.element(x);
        let mut k = 0u64;
        let mut ok = true;
        if let (Some(s), Some(c)) = (left, &left_ctx) {
            match s.exponent_at(c.index(&m.block(0, a, 0, a))) {
                Some(e) => k += e as u64 * (conductor / s.conductor as u64),
                None => ok = false,
            }
        }
        if let (Some(s), Some(c)) = (right, &right_ctx) {
            match s.exponent_at(c.index(&m.block(a, n, a, n))) {
                Some(e) => k += e as u64 * (conductor / s.conductor as u64),
                None => ok = false,
            }
        }
        if ok {
            members.push(x);
            turns.insert(x, k % conductor);
        }
    }
    big.character(members, |x| (turns[&x], conductor))
}

/// The graded product: [(K_{n,m}, Inf(ψ₁⊗ψ₂)), diag(g₁, g₂), (H_{n,m}, Inf(φ₁⊗φ₂))].
/// A `None` factor is the unit of 𝓗(GL_0).
pub fn graded_product(t1: Option<&HeckeTriple>, t2: Option<&HeckeTriple>) -> Result<HeckeTriple, HeckeError> {
    let (n1, q1) = t1.map_or((0, 0), HeckeTriple::ambient);
    let (n2, q2) = t2.map_or((0, 0), HeckeTriple::ambient);
    let q = q1.max(q2);
    if q1 != 0 && q2 != 0 && q1 != q2 {
        return Err(HeckeError::AmbientMismatch(gl_name(n1, q1), gl_name(n2, q2)));
    }
    match (t1, t2) {
        (None, None) => Err(HeckeError::Invalid("both factors have degree 0".into())),
        (Some(t), None) | (None, Some(t)) => Ok(t.clone()),
        (Some(t1), Some(t2)) => {
            let big = HyperHecke::new(n1 + n2, q)?;
            let k = Arc::new(inflate(&big, Some(&t1.source), Some(&t2.source), n1, false)?);
            let h = Arc::new(inflate(&big, Some(&t1.target), Some(&t2.target), n1, false)?);
            let g = big.index(&FqMatrix::block_diag(&t1.matrix(), &t2.matrix()));
            big.validate(&k, g, &h).map_err(|e| HeckeError::Invalid(format!("graded product is not a triple: {e}")))
        }
    }
}

/// t₁ ⊗ t₂ as a triple on block-diagonal subgroups of L_{n,m} ≤ GL_{n+m}, the form the coproduct takes.
pub fn levi_embedding(t1: Option<&HeckeTriple>, t2: Option<&HeckeTriple>) -> Result<HeckeTriple, HeckeError> {
    match (t1, t2) {
        (Some(t1), Some(t2)) => {
            let (n1, q) = t1.ambient();
            let big = HyperHecke::new(n1 + t2.source.n, q)?;
            let k = Arc::new(inflate(&big, Some(&t1.source), Some(&t2.source), n1, true)?);
            let h = Arc::new(inflate(&big, Some(&t1.target), Some(&t2.target), n1, true)?);
            let g = big.index(&FqMatrix::block_diag(&t1.matrix(), &t2.matrix()));
            big.validate(&k, g, &h)
        }
        _ => graded_product(t1, t2),
    }
}

/// One double coset P_{a,n−a} z K of the coproduct sum.
#[derive(Debug, Clone, Serialize)]
pub struct CoproductTerm {
    pub z: FqMatrix,
    /// The quotient triple, or None when (zg⁻¹)⁻¹*(φ) is non-trivial on U ∩ zg⁻¹Hgz⁻¹.
    pub triple: Option<HeckeTriple>,
}

/// Subgroup yXy⁻¹ ∩ P with character x ↦ χ(y⁻¹xy), projected to the Levi factor.
fn conjugate_section(ctx: &HyperHecke, s: &SubgroupChar, y: usize, a: usize) -> Result<(SubgroupChar, bool), HeckeError> {
    let yinv = ctx.group.inverse_idx(y);
    let mut image: HashMap<usize, u32> = HashMap::new();
    let mut consistent = true;
    let mut trivial_on_u = true;
    for (p, &k) in s.members.iter().enumerate() {
        let x = ctx.conj(y, k);
        if !in_parabolic(ctx, x, a) {
            continue;
        }
        let e = s.chi[p];
        if in_unipotent(ctx, x, a) && e != 0 {
            trivial_on_u = false;
        }
        let l = levi_index(ctx, x, a);
        if let Some(&old) = image.get(&l) {
            consistent &= old == e;
        } else {
            image.insert(l, e);
        }
    }
    let _ = yinv;
    let conductor = s.conductor as u64;
    let members: Vec<usize> = image.keys().copied().collect();
    let sub = ctx.character(members, |x| (image[&x] as u64, conductor))?;
    Ok((sub, trivial_on_u && consistent))
}

/// m*_a of a triple: one term per double coset P_{a,n−a}\G/K.
pub fn coproduct_terms(t: &HeckeTriple, a: usize) -> Result<Vec<CoproductTerm>, HeckeError> {
    let ctx = context(t.source.n, t.source.q);
    if a > ctx.n {
        return Err(HeckeError::Invalid(format!("split {a} exceeds {}", ctx.n)));
    }
    let p: Vec<usize> = (0..ctx.group.order()).filter(|&x| in_parabolic(&ctx, x, a)).collect();
    let ginv = ctx.group.inverse_idx(t.g);
    double_coset_reps(&ctx, &p, &t.source.members)
        .into_iter()
        .map(|z| {
            let y = ctx.group.mul_idx(z, ginv);
            let (hbar, passes) = conjugate_section(&ctx, &t.target, y, a)?;
            let triple = if passes {
                let (kbar, _) = conjugate_section(&ctx, &t.source, z, a)?;
                Some(ctx.validate(&Arc::new(kbar), 0, &Arc::new(hbar)).map_err(|e| HeckeError::Invalid(format!("coproduct term is not a triple: {e}")))?)
            } else {
                None
            };
            Ok(CoproductTerm { z: *ctx.group.element(z), triple })
        })
        .collect()
}

/// m*_a as an element of 𝓗(GL_a × GL_{n−a}), realised inside GL_n on block-diagonal subgroups.
pub fn coproduct(t: &HeckeTriple, a: usize) -> Result<HeckeElement, HeckeError> {
    let mut out = HeckeElement::zero();
    for term in coproduct_terms(t, a)? {
        if let Some(tr) = term.triple {
            out.add(&CycloNumber::one(), &tr);
        }
    }
    Ok(out)
}

/// The double-check that the coproduct does not depend on the representative z:
/// for z' = uzk the conjugation by u⁻¹ gives a triple between the two summands,
/// and the filter gives the same verdict.
pub fn verify_coproduct_representatives(t: &HeckeTriple, a: usize) -> Result<CheckReport, HeckeError> {
    let ctx = context(t.source.n, t.source.q);
    let mut r = CheckReport::new("coproduct-representatives", gl_name(ctx.n, ctx.q));
    let p: Vec<usize> = (0..ctx.group.order()).filter(|&x| in_parabolic(&ctx, x, a)).collect();
    let ginv = ctx.group.inverse_idx(t.g);
    let unprojected = |y: usize, s: &SubgroupChar| -> Result<Arc<SubgroupChar>, HeckeError> {
        let mut turns = HashMap::new();
        for (pos, &k) in s.members.iter().enumerate() {
            let x = ctx.conj(y, k);
            if in_parabolic(&ctx, x, a) {
                turns.insert(x, s.chi[pos] as u64);
            }
        }
        Ok(Arc::new(ctx.character(turns.keys().copied().collect(), |x| (turns[&x], s.conductor as u64))?))
    };
    for z in double_coset_reps(&ctx, &p, &t.source.members) {
        let base_k = unprojected(z, &t.source)?;
        let base_pass = conjugate_section(&ctx, &t.target, ctx.group.mul_idx(z, ginv), a)?.1;
        for &u in &p {
            for &k in t.source.members.iter().step_by(t.source.order().div_ceil(4).max(1)) {
                let z2 = ctx.group.mul_idx(ctx.group.mul_idx(u, z), k);
                let other_k = unprojected(z2, &t.source)?;
                let uinv = ctx.group.inverse_idx(u);
                let ok = ctx.validate(&other_k, uinv, &base_k).is_ok();
                let pass = conjugate_section(&ctx, &t.target, ctx.group.mul_idx(z2, ginv), a)?.1;
                r.record(ok && pass == base_pass, || format!("representative {} of the coset of {}", ctx.group.element(z2), ctx.group.element(z)));
            }
        }
    }
    Ok(r)
}

/// Splits a subgroup of L_{a,n−a} ≤ GL_n as X₁ × X₂ with X_i ≤ GL_{a}, GL_{n−a};
/// None when it is not a direct product of its projections.
fn split_pair(ctx: &HyperHecke, s: &SubgroupChar, a: usize) -> Result<Option<(Option<SubgroupChar>, Option<SubgroupChar>)>, HeckeError> {
    let n = ctx.n;
    if a == 0 {
        return Ok(Some((None, Some(s.clone()))));
    }
    if a == n {
        return Ok(Some((Some(s.clone()), None)));
    }
    let (lc, rc) = (HyperHecke::new(a, ctx.q)?, HyperHecke::new(n - a, ctx.q)?);
    let mut left = BTreeMap::new();
    let mut right = BTreeMap::new();
    let mut lproj = BTreeSet::new();
    let mut rproj = BTreeSet::new();
    for (p, &x) in s.members.iter().enumerate() {
        let m = ctx.group.element(x);
        let (l, r) = (m.block(0, a, 0, a), m.block(a, n, a, n));
        lproj.insert(lc.index(&l));
        rproj.insert(rc.index(&r));
        if r == FqMatrix::identity(r.field(), n - a) {
            left.insert(lc.index(&l), s.chi[p]);
        }
        if l == FqMatrix::identity(l.field(), a) {
            right.insert(rc.index(&r), s.chi[p]);
        }
    }
    if left.len() * right.len() != s.order() || lproj.len() != left.len() || rproj.len() != right.len() {
        return Ok(None);
    }
    let c = s.conductor as u64;
    let l = lc.character(left.keys().copied().collect(), |x| (left[&x] as u64, c))?;
    let r = rc.character(right.keys().copied().collect(), |x| (right[&x] as u64, c))?;
    Ok(Some((Some(l), Some(r))))
}

/// A g = 1 triple of 𝓗(GL_a × GL_{n−a}) written as a pair of triples (None in degree 0).
type SplitTriple = (Option<HeckeTriple>, Option<HeckeTriple>);

fn split_triple(ctx: &HyperHecke, t: &HeckeTriple, a: usize) -> Result<Option<SplitTriple>, HeckeError> {
    if t.g != 0 {
        return Err(HeckeError::Invalid("only g = 1 coproduct terms are split".into()));
    }
    let (Some(src), Some(tgt)) = (split_pair(ctx, &t.source, a)?, split_pair(ctx, &t.target, a)?) else {
        return Ok(None);
    };
    let build = |s: Option<SubgroupChar>, h: Option<SubgroupChar>, d: usize| -> Result<Option<HeckeTriple>, HeckeError> {
        match (s, h) {
            (Some(s), Some(h)) => {
                let c = HyperHecke::new(d, ctx.q)?;
                Ok(Some(c.validate(&Arc::new(s), 0, &Arc::new(h))?))
            }
            _ => Ok(None),
        }
    };
    Ok(Some((build(src.0, tgt.0, a)?, build(src.1, tgt.1, ctx.n - a)?)))
}

/// Outcome of one generator pair in the Hopflike comparison.
#[derive(Debug, Clone, Serialize)]
pub struct HopflikeFinding {
    pub left: String,
    pub right: String,
    pub b: usize,
    pub equal: bool,
    /// Equality after moving every term to its least L_{b,n−b}-conjugate.
    pub equal_up_to_levi: bool,
    /// Terms of m*_b(m(t₁⊗t₂)).
    pub lhs_terms: usize,
    /// Terms of Σ_x (m⊗m)(1⊗T⊗1)(m*⊗m*)(t₁⊗t₂).
    pub rhs_terms: usize,
    /// Coproduct terms whose subgroups are not products, hence outside 𝓗 ⊗ 𝓗.
    pub non_product_terms: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct HopflikeReport {
    pub n: usize,
    pub q: u32,
    pub a: usize,
    pub b: usize,
    pub pairs: usize,
    pub equal: usize,
    pub unequal: usize,
    pub equal_up_to_levi: usize,
    pub findings: Vec<HopflikeFinding>,
}

/// Right-hand side of the compatibility: Σ over k-matrices of (m⊗m)(1⊗T⊗1)(m*⊗m*).
fn hopf_rhs(t1: &HeckeTriple, t2: &HeckeTriple, b: usize, big: &HyperHecke) -> Result<(HeckeElement, usize), HeckeError> {
    let (a, n2) = (t1.source.n, t2.source.n);
    let n = a + n2;
    let c1 = context(a, t1.source.q);
    let c2 = context(n2, t2.source.q);
    let mut out = HeckeElement::zero();
    let mut non_product = 0;
    for k in KMatrix::solutions(b, a, n).map_err(|e| HeckeError::Invalid(e.to_string()))? {
        // t₁ splits as (x11, x12), t₂ as (x21, x22)
        let (x11, x21) = (k.k11, k.k21);
        for (s1, c1v) in coproduct(t1, x11)?.terms {
            let Some((p11, p12)) = split_triple(&c1, &s1, x11)? else {
                non_product += 1;
                continue;
            };
            for (s2, c2v) in coproduct(t2, x21)?.terms {
                let Some((p21, p22)) = split_triple(&c2, &s2, x21)? else {
                    non_product += 1;
                    continue;
                };
                let left = graded_product(p11.as_ref(), p21.as_ref()).ok();
                let right = graded_product(p12.as_ref(), p22.as_ref()).ok();
                let t = levi_embedding(left.as_ref(), right.as_ref())?;
                debug_assert_eq!(t.source.n, big.n);
                out.add(&(&c1v * &c2v), &t);
            }
        }
    }
    Ok((out, non_product))
}

/// (lKl⁻¹, ψ(l⁻¹·l)).
fn conjugate_pair(ctx: &HyperHecke, s: &SubgroupChar, l: usize) -> SubgroupChar {
    let mut pairs: Vec<(usize, u32)> = s.members.iter().zip(&s.chi).map(|(&x, &e)| (ctx.conj(l, x), e)).collect();
    pairs.sort_unstable();
    let (members, chi) = pairs.into_iter().unzip();
    SubgroupChar { members, chi, ..s.clone() }
}

/// Each g = 1 term replaced by its least conjugate under `levi`; other terms are kept.
fn levi_canonical(ctx: &HyperHecke, e: &HeckeElement, levi: &[usize]) -> Result<HeckeElement, HeckeError> {
    let mut out = HeckeElement::zero();
    for (t, c) in &e.terms {
        if t.g != 0 {
            out.add_normalized(c.clone(), t.clone());
            continue;
        }
        let best = levi
            .iter()
            .map(|&l| (conjugate_pair(ctx, &t.source, l), conjugate_pair(ctx, &t.target, l)))
            .min()
            .expect("identity is in the Levi subgroup");
        out.add_normalized(c.clone(), HeckeTriple { source: Arc::new(best.0), g: 0, target: Arc::new(best.1) });
    }
    Ok(out)
}

/// Compares m*_b ∘ m with the k-matrix sum on one pair of generators.
pub fn hopflike_pair(t1: &HeckeTriple, t2: &HeckeTriple, b: usize) -> Result<HopflikeFinding, HeckeError> {
    let n = t1.source.n + t2.source.n;
    let big = HyperHecke::new(n, t1.source.q)?;
    let lhs = coproduct(&graded_product(Some(t1), Some(t2))?, b)?;
    let (rhs, non_product) = hopf_rhs(t1, t2, b, &big)?;
    let levi: Vec<usize> = (0..big.group.order())
        .filter(|&x| in_parabolic(&big, x, b) && big.group.element(x).upper_right_zero(b))
        .collect();
    Ok(HopflikeFinding {
        left: t1.to_string(),
        right: t2.to_string(),
        b,
        equal: lhs == rhs,
        equal_up_to_levi: levi_canonical(&big, &lhs, &levi)? == levi_canonical(&big, &rhs, &levi)?,
        lhs_terms: lhs.len(),
        rhs_terms: rhs.len(),
        non_product_terms: non_product,
    })
}

/// Runs the compatibility over all generator pairs of 𝓗(GL_a) × 𝓗(GL_{n−a}),
/// at most `limit` of them. Unequal pairs are findings, not failures.
pub fn verify_hopflike(a: usize, b: usize, n: usize, q: u32, limit: Option<usize>) -> Result<HopflikeReport, HeckeError> {
    if a == 0 || a >= n || b > n {
        return Err(HeckeError::Invalid(format!("need 0 < a < n and b ≤ n, got a={a}, b={b}, n={n}")));
    }
    let g1 = HyperHecke::new(a, q)?.generators()?;
    let g2 = HyperHecke::new(n - a, q)?.generators()?;
    let pairs: Vec<(&HeckeTriple, &HeckeTriple)> = g1
        .iter()
        .flat_map(|x| g2.iter().map(move |y| (x, y)))
        .take(limit.unwrap_or(usize::MAX))
        .collect();
    let findings = pairs.par_iter().map(|(x, y)| hopflike_pair(x, y, b)).collect::<Result<Vec<_>, _>>()?;
    let equal = findings.iter().filter(|f| f.equal).count();
    let equal_up_to_levi = findings.iter().filter(|f| f.equal_up_to_levi).count();
    Ok(HopflikeReport { n, q, a, b, pairs: findings.len(), equal, unequal: findings.len() - equal, equal_up_to_levi, findings })
}

/// Normal-form idempotence and constancy on the rewrite orbit {hgk}.
pub fn verify_normal_form(ctx: &HyperHecke, triples: &[HeckeTriple]) -> CheckReport {
    let name = gl_name(ctx.n, ctx.q);
    let results: Vec<(usize, Vec<String>)> = triples
        .par_iter()
        .map(|t| {
            let mut cases = 0;
            let mut failures = Vec::new();
            let one = CycloNumber::one();
            let (c0, n0) = normalize(&one, t);
            cases += 1;
            if normalize(&c0, &n0) != (c0.clone(), n0.clone()) {
                failures.push(format!("normalize is not idempotent on {t}"));
            }
            for (hp, &h) in t.target.members.iter().enumerate() {
                let hg = ctx.group.mul_idx(h, t.g);
                for (kp, &k) in t.source.members.iter().enumerate() {
                    // [g] = φ(h)ψ(k)[hgk]
                    let c = one.mul_root(t.target.conductor, t.target.chi[hp] as i64).mul_root(t.source.conductor, t.source.chi[kp] as i64);
                    let rewritten = HeckeTriple { source: t.source.clone(), g: ctx.group.mul_idx(hg, k), target: t.target.clone() };
                    cases += 1;
                    if normalize(&c, &rewritten) != (c0.clone(), n0.clone()) {
                        failures.push(format!("orbit of {t} is not constant"));
                    }
                }
            }
            (cases, failures)
        })
        .collect();
    let mut r = CheckReport::new("normal-form", name);
    for (cases, failures) in results {
        r.cases += cases - 1;
        r.record(failures.is_empty(), || failures.join("; "));
    }
    r
}

/// (t₁t₂)t₃ = t₁(t₂t₃) on composable chains.
pub fn verify_associativity(ctx: &HyperHecke, triples: &[HeckeTriple]) -> CheckReport {
    let mut by_target: BTreeMap<&Arc<SubgroupChar>, Vec<&HeckeTriple>> = BTreeMap::new();
    for t in triples {
        by_target.entry(&t.target).or_default().push(t);
    }
    let chains: Vec<(&HeckeTriple, &HeckeTriple)> = triples
        .iter()
        .flat_map(|t1| by_target.get(&t1.source).into_iter().flatten().map(move |t2| (t1, *t2)))
        .collect();
    let results: Vec<Vec<String>> = chains
        .par_iter()
        .map(|&(t1, t2)| {
            let e1 = HeckeElement { terms: BTreeMap::from([(t1.clone(), CycloNumber::one())]) };
            let e2 = HeckeElement { terms: BTreeMap::from([(t2.clone(), CycloNumber::one())]) };
            by_target
                .get(&t2.source)
                .into_iter()
                .flatten()
                .filter_map(|t3| {
                    let e3 = HeckeElement { terms: BTreeMap::from([((*t3).clone(), CycloNumber::one())]) };
                    let left = e1.mul(&e2).mul(&e3);
                    let right = e1.mul(&e2.mul(&e3));
                    (left != right).then(|| format!("({t1}·{t2})·{t3}"))
                })
                .collect()
        })
        .collect();
    let mut r = CheckReport::new("associativity", gl_name(ctx.n, ctx.q));
    for failures in results {
        r.record(failures.is_empty(), || failures.join("; "));
    }
    r
}

/// Triples act on induced modules compatibly with the product, the relations and G.
pub fn verify_faithfulness(ctx: &HyperHecke, triples: &[HeckeTriple]) -> CheckReport {
    let pairs: BTreeSet<&Arc<SubgroupChar>> = triples.iter().flat_map(|t| [&t.source, &t.target]).collect();
    let modules: BTreeMap<&Arc<SubgroupChar>, InducedModule> = pairs.into_iter().map(|p| (p, InducedModule::new(ctx, p))).collect();
    let gens: Vec<usize> = ctx.group.generators().iter().map(|e| ctx.index(e)).collect();
    let mut by_target: BTreeMap<&Arc<SubgroupChar>, Vec<&HeckeTriple>> = BTreeMap::new();
    for t in triples {
        by_target.entry(&t.target).or_default().push(t);
    }
    let matrix = |t: &HeckeTriple| apply_triple(ctx, t, &modules[&t.source], &modules[&t.target]);
    let results: Vec<Vec<String>> = triples
        .par_iter()
        .map(|t1| {
            let mut failures = Vec::new();
            let m1 = matrix(t1);
            let (c, nt) = normalize(&CycloNumber::one(), t1);
            if matrix(&nt).scale(&c) != m1 {
                failures.push(format!("normal form of {t1} acts differently"));
            }
            for &x in &gens {
                let lhs = m1.compose(&left_action(ctx, x, &modules[&t1.source]));
                let rhs = left_action(ctx, x, &modules[&t1.target]).compose(&m1);
                if lhs != rhs {
                    failures.push(format!("{t1} is not G-equivariant"));
                }
            }
            for t2 in by_target.get(&t1.source).into_iter().flatten() {
                let composite = m1.compose(&matrix(t2));
                let prod = hecke_product(t1, t2);
                let via_product = prod.terms.iter().map(|(t, c)| matrix(t).scale(c)).next();
                if via_product.as_ref() != Some(&composite) {
                    failures.push(format!("{t1}·{t2} does not act as the composite"));
                }
            }
            failures
        })
        .collect();
    let mut r = CheckReport::new("faithfulness", gl_name(ctx.n, ctx.q));
    for failures in results {
        r.record(failures.is_empty(), || failures.join("; "));
    }
    r
}

/// graded_product of generators is always a valid triple.
pub fn verify_graded_product(t1s: &[HeckeTriple], t2s: &[HeckeTriple]) -> CheckReport {
    let name = match (t1s.first(), t2s.first()) {
        (Some(x), Some(y)) => format!("{} x {}", gl_name(x.source.n, x.source.q), gl_name(y.source.n, y.source.q)),
        _ => "empty".into(),
    };
    let mut r = CheckReport::new("graded-product", name);
    for x in t1s {
        for y in t2s {
            let res = graded_product(Some(x), Some(y));
            r.record(res.is_ok(), || format!("{x} ⊗ {y}: {}", res.as_ref().err().map(ToString::to_string).unwrap_or_default()));
        }
    }
    r
}

/// The extreme components a = 0 and a = n are never filtered out.
pub fn verify_extreme_components(triples: &[HeckeTriple]) -> Result<CheckReport, HeckeError> {
    let name = triples.first().map(|t| gl_name(t.source.n, t.source.q)).unwrap_or_default();
    let mut r = CheckReport::new("coproduct-extremes", name);
    for t in triples {
        for a in [0, t.source.n] {
            let terms = coproduct_terms(t, a)?;
            r.record(terms.len() == 1 && terms[0].triple.is_some(), || format!("m*_{a}({t}) is empty"));
        }
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    fn gl22() -> HyperHecke {
        HyperHecke::new(2, 2).unwrap()
    }

    #[test]
    fn poset_of_gl22() {
        let h = gl22();
        assert_eq!(h.subgroups_containing_center().len(), 6);
        let poset = h.poset().unwrap();
        // 1 + 3·2 + 3 + 2 linear characters
        assert_eq!(poset.len(), 12);
        assert!(poset.iter().all(|p| h.is_homomorphism(p)));
    }

    #[test]
    fn containment_error() {
        let h = gl22();
        let b = Arc::new(h.trivial(h.subgroup("B").unwrap()).unwrap());
        let w = h.subgroup("W").unwrap().into_iter().find(|&x| x != 0).unwrap();
        assert!(matches!(h.validate(&b, w, &b), Err(HeckeError::Containment)));
        assert!(h.validate(&b, 0, &b).is_ok());
    }

    #[test]
    fn character_mismatch() {
        let h = gl22();
        let b = h.subgroup("B").unwrap();
        let chars = h.linear_characters(&b).unwrap();
        assert_eq!(chars.len(), 2);
        let (triv, sign) = (Arc::new(chars[0].clone()), Arc::new(chars[1].clone()));
        assert!(matches!(h.validate(&triv, 0, &sign), Err(HeckeError::CharacterMismatch)));
    }

    #[test]
    fn center_triple_on_gl23() {
        let h = HyperHecke::new(2, 3).unwrap();
        let z = Arc::new(h.trivial(h.center().to_vec()).unwrap());
        for g in 0..h.group().order() {
            assert!(h.validate(&z, g, &z).is_ok());
        }
    }

    #[test]
    fn normalize_on_rewrites() {
        let h = gl22();
        let gens = h.generators().unwrap();
        assert!(!gens.is_empty());
        let r = verify_normal_form(&h, &gens);
        assert!(r.passed(), "{:?}", r.failures);
    }

    #[test]
    fn product_with_identity() {
        let h = gl22();
        for t in h.generators().unwrap() {
            let id = h.identity_triple(&t.target);
            let p = hecke_product(&id, &t);
            assert_eq!(p.terms.get(&t), Some(&CycloNumber::one()));
            let wrong = h.identity_triple(&t.source);
            if t.source != t.target {
                assert!(hecke_product(&wrong, &t).is_zero());
            }
        }
    }

    #[test]
    fn gl22_exhaustive_checks() {
        let h = gl22();
        let gens = h.generators().unwrap();
        assert!(verify_associativity(&h, &gens).passed());
        let f = verify_faithfulness(&h, &gens);
        assert!(f.passed(), "{:?}", f.failures);
    }

    #[test]
    fn gl23_sampled() {
        let h = HyperHecke::new(2, 3).unwrap();
        let poset = h.poset().unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let sample: Vec<HeckeTriple> = (0..40).map(|_| h.random_triple(&poset, &mut rng)).collect();
        assert!(verify_normal_form(&h, &sample).passed());
        assert!(verify_faithfulness(&h, &sample).passed());
    }

    #[test]
    fn graded_product_embeds_blocks() {
        let h1 = HyperHecke::new(1, 3).unwrap();
        let g1 = h1.generators().unwrap();
        let t = graded_product(Some(&g1[0]), Some(&g1[0])).unwrap();
        assert_eq!(t.ambient(), (2, 3));
        // (GL_1 × GL_1)U_{1,1} is the Borel subgroup
        assert_eq!(t.source.order(), 12);
        assert!(verify_graded_product(&g1, &g1).passed());
    }

    #[test]
    fn coproduct_of_center_identity() {
        let h = gl22();
        let z = Arc::new(h.trivial(h.center().to_vec()).unwrap());
        let t = h.identity_triple(&z);
        for a in 0..=2 {
            let terms = coproduct_terms(&t, a).unwrap();
            // |B\GL_2(F_2)| = 3 cosets for a = 1
            assert_eq!(terms.len(), if a == 1 { 3 } else { 1 });
            assert!(verify_coproduct_representatives(&t, a).unwrap().passed());
        }
        assert!(verify_extreme_components(&h.generators().unwrap()).unwrap().passed());
    }

    #[test]
    fn hopflike_runs_at_n2() {
        let rep = verify_hopflike(1, 1, 2, 2, None).unwrap();
        assert_eq!(rep.pairs, 1);
        assert_eq!(rep.equal + rep.unequal, rep.pairs);
        let json = serde_json::to_string(&rep).unwrap();
        assert!(json.contains("findings"));
    }

    #[test]
    fn element_serializes() {
        let h = gl22();
        let t = h.generators().unwrap().remove(0);
        let mut e = HeckeElement::zero();
        e.add(&CycloNumber::from_int(2), &t);
        let v = serde_json::to_value(&e).unwrap();
        assert!(v[0]["source"]["subgroup"].as_str().unwrap().starts_with("GL(2,2)/"));
        assert!(v[0]["coeff"].is_object());
    }
}
