//! Finite groups given by generators, with conjugacy classes, power maps and
//! induction/restriction of class functions.

use std::collections::{HashMap, VecDeque};
use std::fmt::Debug;
use std::hash::Hash;
use std::sync::{Arc, OnceLock};

use crate::classfn::ClassFunction;
use crate::cyclo::{lcm, CycloNumber, Rational};
use crate::symgroup::Permutation;

use super::chartable::CharacterTable;
use super::{max_group_order, GlError};

pub trait GroupElement: Clone + Eq + Hash + Debug + Send + Sync {
    fn compose(&self, other: &Self) -> Self;
    fn invert(&self) -> Self;
}

impl GroupElement for Permutation {
    fn compose(&self, other: &Self) -> Self {
        self * other
    }

    fn invert(&self) -> Self {
        self.inverse()
    }
}

pub struct FiniteGroup<E: GroupElement> {
    name: String,
    elements: Vec<E>,
    index: HashMap<E, usize>,
    generators: Vec<usize>,
    inverse: Vec<usize>,
    orders: Vec<usize>,
    class_of: Vec<usize>,
    classes: Vec<Vec<usize>>,
    exponent: u64,
    table: OnceLock<Result<Arc<CharacterTable>, GlError>>,
}

impl<E: GroupElement> Debug for FiniteGroup<E> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("name", &self.name)
            .field("order", &self.elements.len())
            .field("classes", &self.classes.len())
            .finish()
    }
}

impl<E: GroupElement> FiniteGroup<E> {
    pub fn generate(name: impl Into<String>, identity: E, gens: &[E]) -> Result<Self, GlError> {
        Self::generate_with_bound(name, identity, gens, max_group_order())
    }

    pub fn generate_with_bound(
        name: impl Into<String>,
        identity: E,
        gens: &[E],
        bound: usize,
    ) -> Result<Self, GlError> {
        let name = name.into();
        let mut elements = vec![identity.clone()];
        let mut index = HashMap::from([(identity, 0usize)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for g in gens {
                let y = elements[i].compose(g);
                if !index.contains_key(&y) {
                    if elements.len() >= bound {
                        return Err(GlError::GroupTooLarge { name, bound });
                    }
                    index.insert(y.clone(), elements.len());
                    queue.push_back(elements.len());
                    elements.push(y);
                }
            }
        }
        let generators = gens.iter().map(|g| index[g]).collect();
        Ok(Self::finish(name, elements, index, generators))
    }

    fn finish(name: String, elements: Vec<E>, index: HashMap<E, usize>, generators: Vec<usize>) -> Self {
        let n = elements.len();
        let mut orders = vec![0; n];
        let mut inverse = vec![0; n];
        for i in 0..n {
            let mut k = 1;
            let mut prev = 0;
            let mut x = i;
            while x != 0 {
                prev = x;
                x = index[&elements[x].compose(&elements[i])];
                k += 1;
            }
            orders[i] = k;
            inverse[i] = prev;
        }
        let exponent = orders.iter().fold(1u64, |acc, &o| lcm(acc, o as u64));

        let mut class_of = vec![usize::MAX; n];
        let mut classes = Vec::new();
        for start in 0..n {
            if class_of[start] != usize::MAX {
                continue;
            }
            let c = classes.len();
            let mut members = vec![start];
            class_of[start] = c;
            let mut k = 0;
            while k < members.len() {
                let x = &elements[members[k]];
                for &g in &generators {
                    let conj = elements[g].compose(x).compose(&elements[inverse[g]]);
                    let y = index[&conj];
                    if class_of[y] == usize::MAX {
                        class_of[y] = c;
                        members.push(y);
                    }
                }
                k += 1;
            }
            members.sort_unstable();
            classes.push(members);
        }
        FiniteGroup {
            name,
            elements,
            index,
            generators,
            inverse,
            orders,
            class_of,
            classes,
            exponent,
            table: OnceLock::new(),
        }
    }

    /// The subgroup of elements satisfying `pred` (which must define a subgroup).
    pub fn subgroup(&self, name: impl Into<String>, pred: impl Fn(&E) -> bool) -> Result<Self, GlError> {
        let members: Vec<E> = self.elements.iter().filter(|e| pred(e)).cloned().collect();
        self.subgroup_from_elements(name, members)
    }

    pub fn subgroup_from_elements(&self, name: impl Into<String>, members: Vec<E>) -> Result<Self, GlError> {
        let name = name.into();
        let identity = self.identity().clone();
        let mut gens: Vec<E> = Vec::new();
        let mut current = Self::generate(name.clone(), identity.clone(), &gens)?;
        for m in &members {
            if !self.index.contains_key(m) {
                return Err(GlError::NotSubgroup(name));
            }
            if !current.index.contains_key(m) {
                gens.push(m.clone());
                current = Self::generate(name.clone(), identity.clone(), &gens)?;
            }
        }
        if current.order() != members.len() {
            return Err(GlError::NotSubgroup(name));
        }
        Ok(current)
    }

    pub fn subgroup_generated(&self, name: impl Into<String>, gens: &[E]) -> Result<Self, GlError> {
        let name = name.into();
        if gens.iter().any(|g| !self.index.contains_key(g)) {
            return Err(GlError::NotSubgroup(name));
        }
        Self::generate(name, self.identity().clone(), gens)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn identity(&self) -> &E {
        &self.elements[0]
    }

    pub fn elements(&self) -> &[E] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &E {
        &self.elements[i]
    }

    pub fn index_of(&self, e: &E) -> Option<usize> {
        self.index.get(e).copied()
    }

    pub fn contains(&self, e: &E) -> bool {
        self.index.contains_key(e)
    }

    pub fn generators(&self) -> Vec<&E> {
        self.generators.iter().map(|&g| &self.elements[g]).collect()
    }

    pub fn mul_idx(&self, i: usize, j: usize) -> usize {
        self.index[&self.elements[i].compose(&self.elements[j])]
    }

    pub fn inverse_idx(&self, i: usize) -> usize {
        self.inverse[i]
    }

    pub fn inverse(&self, e: &E) -> E {
        self.elements[self.inverse[self.index[e]]].clone()
    }

    pub fn element_order(&self, i: usize) -> usize {
        self.orders[i]
    }

    pub fn pow_idx(&self, i: usize, k: i64) -> usize {
        let k = k.rem_euclid(self.orders[i] as i64);
        let mut x = 0;
        for _ in 0..k {
            x = self.mul_idx(x, i);
        }
        x
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class_of_idx(&self, i: usize) -> usize {
        self.class_of[i]
    }

    pub fn class_of(&self, e: &E) -> Option<usize> {
        self.index.get(e).map(|&i| self.class_of[i])
    }

    pub fn class_rep(&self, c: usize) -> &E {
        &self.elements[self.classes[c][0]]
    }

    pub fn class_rep_idx(&self, c: usize) -> usize {
        self.classes[c][0]
    }

    pub fn class_sizes(&self) -> Vec<u64> {
        self.classes.iter().map(|c| c.len() as u64).collect()
    }

    pub fn is_abelian(&self) -> bool {
        self.classes.len() == self.elements.len()
    }

    /// Class of g^k for g in class c.
    pub fn power_class(&self, c: usize, k: i64) -> usize {
        self.class_of[self.pow_idx(self.classes[c][0], k)]
    }

    pub fn conjugate(&self, g: &E, x: &E) -> E {
        g.compose(x).compose(&self.inverse(g))
    }

    /// The exact character table, computed on first use.
    pub fn character_table(&self) -> Result<Arc<CharacterTable>, GlError> {
        self.table.get_or_init(|| CharacterTable::compute(self).map(Arc::new)).clone()
    }

    pub fn trivial_character(&self) -> ClassFunction {
        ClassFunction::new(self.name.clone(), vec![CycloNumber::one(); self.num_classes()])
    }

    /// Regular character: |G| at the identity, 0 elsewhere.
    pub fn regular_character(&self) -> ClassFunction {
        let mut v = vec![CycloNumber::zero(); self.num_classes()];
        v[0] = CycloNumber::from_int(self.order() as i64);
        ClassFunction::new(self.name.clone(), v)
    }

    /// Builds a class function from a value on elements.
    pub fn class_function(&self, f: impl Fn(&E) -> CycloNumber) -> ClassFunction {
        ClassFunction::new(self.name.clone(), (0..self.num_classes()).map(|c| f(self.class_rep(c))).collect())
    }

    /// χ evaluated at an element of the group.
    pub fn eval(&self, chi: &ClassFunction, e: &E) -> Option<CycloNumber> {
        self.class_of(e).map(|c| chi.values[c].clone())
    }

    pub fn inner(&self, a: &ClassFunction, b: &ClassFunction) -> CycloNumber {
        a.inner(b, &self.class_sizes())
    }

    pub fn is_subgroup_of(&self, other: &FiniteGroup<E>) -> bool {
        self.elements.iter().all(|e| other.contains(e))
    }
}

/// Ind_H^G χ(x) = (1/|H|) Σ_{y∈G, yxy⁻¹∈H} χ(yxy⁻¹).
pub fn induce<E: GroupElement>(
    g: &FiniteGroup<E>,
    h: &FiniteGroup<E>,
    chi: &ClassFunction,
) -> Result<ClassFunction, GlError> {
    use rayon::prelude::*;
    if chi.len() != h.num_classes() {
        return Err(GlError::InvalidArgument(format!("class function is not on {}", h.name())));
    }
    let values = (0..g.num_classes())
        .into_par_iter()
        .map(|c| {
            let x = g.class_rep(c);
            let mut counts = vec![0i64; h.num_classes()];
            for y in g.elements() {
                if let Some(c) = h.class_of(&g.conjugate(y, x)) {
                    counts[c] += 1;
                }
            }
            let mut acc = CycloNumber::zero();
            for (k, &n) in counts.iter().enumerate() {
                if n != 0 {
                    acc += &chi.values[k].scale(&Rational::from_integer(n.into()));
                }
            }
            acc.scale(&Rational::new(1.into(), (h.order() as i64).into()))
        })
        .collect();
    Ok(ClassFunction::new(g.name(), values))
}

pub fn restrict<E: GroupElement>(
    g: &FiniteGroup<E>,
    h: &FiniteGroup<E>,
    chi: &ClassFunction,
) -> Result<ClassFunction, GlError> {
    if chi.len() != g.num_classes() {
        return Err(GlError::InvalidArgument(format!("class function is not on {}", g.name())));
    }
    let values = (0..h.num_classes())
        .map(|c| {
            g.class_of(h.class_rep(c))
                .map(|k| chi.values[k].clone())
                .ok_or_else(|| GlError::NotSubgroup(h.name().to_string()))
        })
        .collect::<Result<_, _>>()?;
    Ok(ClassFunction::new(h.name(), values))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(n: usize) -> FiniteGroup<Permutation> {
        let mut gens = vec![Permutation::from_cycles("(1,2)", n).unwrap()];
        let cyc: Vec<usize> = (1..=n).collect();
        gens.push(Permutation::from_cycle_list(&[cyc], n).unwrap());
        FiniteGroup::generate(format!("S{n}"), Permutation::identity(n), &gens).unwrap()
    }

    #[test]
    fn symmetric_groups() {
        let g = sym(4);
        assert_eq!(g.order(), 24);
        assert_eq!(g.num_classes(), 5);
        assert_eq!(g.exponent(), 12);
        let mut sizes = g.class_sizes();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 3, 6, 6, 8]);
        for i in 0..g.order() {
            assert_eq!(g.mul_idx(i, g.inverse_idx(i)), 0);
        }
    }

    #[test]
    fn bound_is_enforced() {
        let gens = [Permutation::from_cycles("(1,2)", 5).unwrap(), Permutation::from_cycles("(1,2,3,4,5)", 5).unwrap()];
        let err = FiniteGroup::generate_with_bound("S5", Permutation::identity(5), &gens, 100).unwrap_err();
        assert!(matches!(err, GlError::GroupTooLarge { bound: 100, .. }));
    }

    #[test]
    fn induce_trivial_is_permutation_character() {
        let g = sym(4);
        let h = g.subgroup("S3", |p| p.apply(4) == 4).unwrap();
        assert_eq!(h.order(), 6);
        let ind = induce(&g, &h, &h.trivial_character()).unwrap();
        for c in 0..g.num_classes() {
            let fixed = (1..=4).filter(|&i| g.class_rep(c).apply(i) == i).count() as i64;
            assert_eq!(ind.values[c], CycloNumber::from_int(fixed));
        }
        let back = restrict(&g, &h, &ind).unwrap();
        assert_eq!(back.values[0], CycloNumber::from_int(4));
    }

    #[test]
    fn non_subgroup_rejected() {
        let g = sym(3);
        let t = Permutation::from_cycles("(1,2)", 3).unwrap();
        let members = vec![Permutation::identity(3), t, Permutation::from_cycles("(1,3)", 3).unwrap()];
        assert!(matches!(g.subgroup_from_elements("bad", members), Err(GlError::NotSubgroup(_))));
    }
}
