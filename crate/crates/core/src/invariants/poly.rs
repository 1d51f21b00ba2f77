//! Polynomials in one indeterminate with rational or cyclotomic coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::cyclo::{rat, CycloNumber, Rational};

/// Coefficients ascending in degree, without trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct QPoly {
    coeffs: Vec<Rational>,
}

impl QPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn from_ints(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&v| rat(v)).collect())
    }

    pub fn zero() -> Self {
        QPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Self::constant(rat(1))
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    pub fn x() -> Self {
        Self::monomial(1, rat(1))
    }

    pub fn monomial(k: usize, c: Rational) -> Self {
        let mut v = vec![Rational::zero(); k + 1];
        v[k] = c;
        Self::new(v)
    }

    /// x + c
    pub fn linear(c: i64) -> Self {
        Self::from_ints(&[c, 1])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(Rational::is_integer)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// f(−x).
    pub fn negate_x(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, a)| if k % 2 == 1 { -a } else { a.clone() })
                .collect(),
        )
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, o: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        QPoly::new((0..n).map(|k| self.coeff(k) + o.coeff(k)).collect())
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, o: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        QPoly::new((0..n).map(|k| self.coeff(k) - o.coeff(k)).collect())
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, o: &QPoly) -> QPoly {
        if self.is_zero() || o.is_zero() {
            return QPoly::zero();
        }
        let mut v = vec![Rational::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        QPoly::new(v)
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        self.scale(&rat(-1))
    }
}

impl std::iter::Sum for QPoly {
    fn sum<I: Iterator<Item = QPoly>>(iter: I) -> QPoly {
        iter.fold(QPoly::zero(), |acc, p| &acc + &p)
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            let show_coeff = k == 0 || !a.is_one();
            if show_coeff {
                write!(f, "{a}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "{}x", if show_coeff { "*" } else { "" })?,
                _ => write!(f, "{}x^{k}", if show_coeff { "*" } else { "" })?,
            }
        }
        Ok(())
    }
}

/// Integers serialize as numbers, other rationals as "a/b".
impl Serialize for QPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            match num_traits::ToPrimitive::to_i64(&c.to_integer()).filter(|_| c.is_integer()) {
                Some(v) => seq.serialize_element(&v)?,
                None => seq.serialize_element(&c.to_string())?,
            }
        }
        seq.end()
    }
}

/// A polynomial with coefficients in a cyclotomic field.
#[derive(Debug, Clone, Default)]
pub struct CycloPoly {
    coeffs: Vec<CycloNumber>,
}

impl CycloPoly {
    pub fn new(mut coeffs: Vec<CycloNumber>) -> Self {
        while coeffs.last().is_some_and(CycloNumber::is_zero) {
            coeffs.pop();
        }
        CycloPoly { coeffs }
    }

    pub fn zero() -> Self {
        CycloPoly { coeffs: vec![] }
    }

    pub fn monomial(k: usize, c: CycloNumber) -> Self {
        let mut v = vec![CycloNumber::zero(); k + 1];
        v[k] = c;
        Self::new(v)
    }

    pub fn coeffs(&self) -> &[CycloNumber] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> CycloNumber {
        self.coeffs.get(k).cloned().unwrap_or_else(CycloNumber::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn scale(&self, c: &CycloNumber) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// f(x·ζ_n^k).
    pub fn twist(&self, n: u32, k: i64) -> Self {
        Self::new(self.coeffs.iter().enumerate().map(|(i, a)| a.mul_root(n, k * i as i64)).collect())
    }

    /// The rational polynomial, if every coefficient is rational.
    pub fn to_qpoly(&self) -> Option<QPoly> {
        self.coeffs.iter().map(CycloNumber::to_rational).collect::<Option<Vec<_>>>().map(QPoly::new)
    }

    pub fn minimize(&self) -> Self {
        Self::new(self.coeffs.iter().map(CycloNumber::minimize).collect())
    }
}

impl From<&QPoly> for CycloPoly {
    fn from(p: &QPoly) -> Self {
        CycloPoly::new(p.coeffs().iter().cloned().map(CycloNumber::from).collect())
    }
}

impl PartialEq for CycloPoly {
    fn eq(&self, other: &Self) -> bool {
        let n = self.coeffs.len().max(other.coeffs.len());
        (0..n).all(|k| self.coeff(k) == other.coeff(k))
    }
}

impl Eq for CycloPoly {}

impl Add for &CycloPoly {
    type Output = CycloPoly;
    fn add(self, o: &CycloPoly) -> CycloPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        CycloPoly::new((0..n).map(|k| &self.coeff(k) + &o.coeff(k)).collect())
    }
}

impl Sub for &CycloPoly {
    type Output = CycloPoly;
    fn sub(self, o: &CycloPoly) -> CycloPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        CycloPoly::new((0..n).map(|k| &self.coeff(k) - &o.coeff(k)).collect())
    }
}

impl Mul for &CycloPoly {
    type Output = CycloPoly;
    fn mul(self, o: &CycloPoly) -> CycloPoly {
        if self.is_zero() || o.is_zero() {
            return CycloPoly::zero();
        }
        let mut v = vec![CycloNumber::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                v[i + j] += &(a * b);
            }
        }
        CycloPoly::new(v)
    }
}

impl fmt::Display for CycloPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let c = c.minimize();
            match k {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*x")?,
                _ => write!(f, "({c})*x^{k}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for CycloPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.coeffs.serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let p = &QPoly::linear(1) * &QPoly::linear(-1);
        assert_eq!(p, QPoly::from_ints(&[-1, 0, 1]));
        assert_eq!(p.to_string(), "x^2 - 1");
        assert_eq!((&p - &p).degree(), None);
        assert_eq!(QPoly::from_ints(&[0, 2, 3]).negate_x(), QPoly::from_ints(&[0, -2, 3]));
        assert_eq!(QPoly::x().pow(3).eval(&rat(2)), rat(8));
        assert_eq!(serde_json::to_string(&QPoly::from_ints(&[0, -1, 0, 1])).unwrap(), "[0,-1,0,1]");
        let half = QPoly::constant(crate::cyclo::ratio(1, 2));
        assert_eq!(serde_json::to_string(&half).unwrap(), "[\"1/2\"]");
    }

    #[test]
    fn twists() {
        let p = CycloPoly::from(&QPoly::from_ints(&[0, 1, 1]));
        let t = p.twist(3, 1);
        assert_eq!(t.coeff(1), CycloNumber::root_of_unity(3, 1).unwrap());
        assert_eq!(t.coeff(2), CycloNumber::root_of_unity(3, 2).unwrap());
        assert_eq!(t.twist(3, 2), p);
        assert!(p.to_qpoly().is_some() && t.to_qpoly().is_none());
    }
}
