//! Cyclotomic-valued class functions on a finite group.

use serde::{Deserialize, Serialize};

use crate::cyclo::{rat, CycloNumber, Rational};

/// Values on the conjugacy classes of a group, in that group's class order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassFunction {
    pub group_id: String,
    pub values: Vec<CycloNumber>,
}

impl ClassFunction {
    pub fn new(group_id: impl Into<String>, values: Vec<CycloNumber>) -> Self {
        ClassFunction { group_id: group_id.into(), values }
    }

    pub fn from_ints(group_id: impl Into<String>, values: &[i64]) -> Self {
        Self::new(group_id, values.iter().map(|&v| CycloNumber::from_int(v)).collect())
    }

    pub fn zero(group_id: impl Into<String>, classes: usize) -> Self {
        Self::new(group_id, vec![CycloNumber::zero(); classes])
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.group_id, other.group_id, "class functions on different groups");
        assert_eq!(self.values.len(), other.values.len(), "class count mismatch");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check(other);
        let values = self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect();
        Self::new(self.group_id.clone(), values)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.check(other);
        let values = self.values.iter().zip(&other.values).map(|(a, b)| a - b).collect();
        Self::new(self.group_id.clone(), values)
    }

    /// Pointwise product (tensor product of representations).
    pub fn mul(&self, other: &Self) -> Self {
        self.check(other);
        let values = self.values.iter().zip(&other.values).map(|(a, b)| a * b).collect();
        Self::new(self.group_id.clone(), values)
    }

    pub fn scale(&self, c: &CycloNumber) -> Self {
        Self::new(self.group_id.clone(), self.values.iter().map(|v| v * c).collect())
    }

    pub fn conj(&self) -> Self {
        Self::new(self.group_id.clone(), self.values.iter().map(CycloNumber::conj).collect())
    }

    /// ⟨χ, ψ⟩ = (1/|G|) Σ_c |c| χ(c) conj(ψ(c)).
    pub fn inner(&self, other: &Self, class_sizes: &[u64]) -> CycloNumber {
        self.check(other);
        assert_eq!(class_sizes.len(), self.values.len(), "class sizes mismatch");
        let order: u64 = class_sizes.iter().sum();
        let mut acc = CycloNumber::zero();
        for ((a, b), &s) in self.values.iter().zip(&other.values).zip(class_sizes) {
            if a.is_zero() || b.is_zero() {
                continue;
            }
            acc += &(a * &b.conj()).scale(&rat(s as i64));
        }
        acc.scale(&Rational::new(1.into(), (order as i64).into()))
    }

    /// The inner product as an integer, if it is one.
    pub fn multiplicity(&self, other: &Self, class_sizes: &[u64]) -> Option<i64> {
        let r = self.inner(other, class_sizes).to_rational()?;
        if !r.is_integer() {
            return None;
        }
        num_traits::ToPrimitive::to_i64(r.numer())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sigma3_orthogonality() {
        // classes (3), (2,1), (1^3) with sizes 2, 3, 1
        let sizes = [2, 3, 1];
        let triv = ClassFunction::from_ints("Sym(3)", &[1, 1, 1]);
        let sign = ClassFunction::from_ints("Sym(3)", &[1, -1, 1]);
        let std = ClassFunction::from_ints("Sym(3)", &[-1, 0, 2]);
        assert_eq!(triv.multiplicity(&triv, &sizes), Some(1));
        assert_eq!(triv.multiplicity(&sign, &sizes), Some(0));
        assert_eq!(std.multiplicity(&std, &sizes), Some(1));
        let reg = triv.add(&sign).add(&std.scale(&CycloNumber::from_int(2)));
        assert_eq!(reg.values[2], CycloNumber::from_int(6));
    }
}
