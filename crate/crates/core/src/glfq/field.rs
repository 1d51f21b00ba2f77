//! Small finite fields F_q (q ≤ 64) with table-driven arithmetic.
//!
//! Elements are indices 0..q: the index Σ c_i p^i stands for the residue
//! Σ c_i x^i modulo the fixed Conway polynomial of degree d.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use super::GlError;

pub const MAX_FIELD_ORDER: u32 = 64;

/// Conway polynomials, coefficients from the constant term up, leading 1 included.
fn conway(p: u32, d: u32) -> Option<&'static [u8]> {
    Some(match (p, d) {
        (2, 2) => &[1, 1, 1],
        (2, 3) => &[1, 1, 0, 1],
        (2, 4) => &[1, 1, 0, 0, 1],
        (2, 5) => &[1, 0, 1, 0, 0, 1],
        (2, 6) => &[1, 1, 0, 1, 1, 0, 1],
        (3, 2) => &[2, 2, 1],
        (3, 3) => &[1, 2, 0, 1],
        (5, 2) => &[2, 4, 1],
        (7, 2) => &[3, 6, 1],
        _ => return None,
    })
}

pub fn is_prime(n: u32) -> bool {
    n >= 2 && (2..).take_while(|k| k * k <= n).all(|k| n % k != 0)
}

pub type Fq = u8;

#[derive(Debug)]
pub struct Field {
    p: u32,
    d: u32,
    q: u32,
    add: Vec<Fq>,
    mul: Vec<Fq>,
    neg: Vec<Fq>,
    inv: Vec<Fq>,
    trace: Vec<u32>,
    generator: Fq,
    exp: Vec<Fq>,
    log: Vec<u32>,
}

impl Field {
    fn build(p: u32, d: u32) -> Result<Field, GlError> {
        if !is_prime(p) {
            return Err(GlError::NotPrime(p));
        }
        if d == 0 || (p as u64).pow(d) > MAX_FIELD_ORDER as u64 {
            return Err(GlError::FieldTooLarge { p, d });
        }
        let q = p.pow(d);
        let modulus: Vec<u32> = if d == 1 {
            vec![0, 1]
        } else {
            conway(p, d).ok_or(GlError::FieldTooLarge { p, d })?.iter().map(|&c| c as u32).collect()
        };
        let digits = |x: u32| -> Vec<u32> {
            let mut v = Vec::with_capacity(d as usize);
            let mut x = x;
            for _ in 0..d {
                v.push(x % p);
                x /= p;
            }
            v
        };
        let undigits = |v: &[u32]| -> Fq { v.iter().rev().fold(0, |acc, &c| acc * p + c) as Fq };
        let qs = q as usize;
        let mut add = vec![0; qs * qs];
        let mut mul = vec![0; qs * qs];
        for a in 0..q {
            let da = digits(a);
            for b in 0..q {
                let db = digits(b);
                let s: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[(a * q + b) as usize] = undigits(&s);
                let mut prod = vec![0u32; 2 * d as usize];
                for (i, x) in da.iter().enumerate() {
                    for (j, y) in db.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % p;
                    }
                }
                for k in (d as usize..prod.len()).rev() {
                    let c = prod[k];
                    if c == 0 {
                        continue;
                    }
                    for (i, m) in modulus.iter().enumerate() {
                        let idx = k - d as usize + i;
                        prod[idx] = (prod[idx] + (p - c) * m) % p;
                    }
                }
                mul[(a * q + b) as usize] = undigits(&prod[..d as usize]);
            }
        }
        let neg: Vec<Fq> = (0..q).map(|a| (0..q).find(|&b| add[(a * q + b) as usize] == 0).unwrap() as Fq).collect();
        let inv: Vec<Fq> = (0..q)
            .map(|a| if a == 0 { 0 } else { (1..q).find(|&b| mul[(a * q + b) as usize] == 1).unwrap() as Fq })
            .collect();
        let mut field = Field { p, d, q, add, mul, neg, inv, trace: vec![], generator: 1, exp: vec![], log: vec![] };
        field.trace = (0..q)
            .map(|a| {
                let mut acc: Fq = 0;
                let mut x = a as Fq;
                for _ in 0..d {
                    acc = field.add(acc, x);
                    x = field.pow(x, p as u64);
                }
                debug_assert!((acc as u32) < p, "trace must land in the prime field");
                acc as u32
            })
            .collect();
        field.generator = (1..q)
            .map(|g| g as Fq)
            .find(|&g| field.mult_order(g) == q - 1)
            .expect("multiplicative group is cyclic");
        let mut exp = Vec::with_capacity(qs - 1);
        let mut log = vec![u32::MAX; qs];
        let mut x: Fq = 1;
        for k in 0..q - 1 {
            exp.push(x);
            log[x as usize] = k;
            x = field.mul(x, field.generator);
        }
        field.exp = exp;
        field.log = log;
        Ok(field)
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.d
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn elements(&self) -> impl Iterator<Item = Fq> {
        (0..self.q).map(|x| x as Fq)
    }

    pub fn units(&self) -> impl Iterator<Item = Fq> {
        (1..self.q).map(|x| x as Fq)
    }

    /// The image of an integer in the prime field.
    pub fn from_int(&self, n: i64) -> Fq {
        n.rem_euclid(self.p as i64) as Fq
    }

    pub fn add(&self, a: Fq, b: Fq) -> Fq {
        self.add[a as usize * self.q as usize + b as usize]
    }

    pub fn sub(&self, a: Fq, b: Fq) -> Fq {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Fq, b: Fq) -> Fq {
        self.mul[a as usize * self.q as usize + b as usize]
    }

    pub fn neg(&self, a: Fq) -> Fq {
        self.neg[a as usize]
    }

    pub fn inv(&self, a: Fq) -> Option<Fq> {
        (a != 0).then(|| self.inv[a as usize])
    }

    pub fn pow(&self, a: Fq, e: u64) -> Fq {
        let mut base = a;
        let mut e = e;
        let mut acc: Fq = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    fn mult_order(&self, a: Fq) -> u32 {
        let mut x = a;
        let mut k = 1;
        while x != 1 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn frobenius(&self, a: Fq) -> Fq {
        self.pow(a, self.p as u64)
    }

    /// Tr_{F_q/F_p}(a) = Σ a^{p^i}, as an integer in 0..p.
    pub fn trace(&self, a: Fq) -> u32 {
        self.trace[a as usize]
    }

    /// N_{F_q/F_p}(a) = a^{(q-1)/(p-1)}, an element of the prime field.
    pub fn norm(&self, a: Fq) -> Fq {
        self.pow(a, ((self.q - 1) / (self.p - 1)) as u64)
    }

    pub fn generator(&self) -> Fq {
        self.generator
    }

    /// g^k for the fixed generator g.
    pub fn exp(&self, k: i64) -> Fq {
        self.exp[k.rem_euclid(self.q as i64 - 1) as usize]
    }

    /// Discrete logarithm to the fixed generator.
    pub fn log(&self, a: Fq) -> Option<u32> {
        (a != 0).then(|| self.log[a as usize])
    }

    pub fn is_square(&self, a: Fq) -> bool {
        a == 0 || self.p == 2 || self.log[a as usize] % 2 == 0
    }

    /// The least non-square in index order (odd characteristic only).
    pub fn least_non_square(&self) -> Option<Fq> {
        self.units().find(|&a| !self.is_square(a))
    }
}

/// The shared field of order p^d.
pub fn field(p: u32, d: u32) -> Result<&'static Field, GlError> {
    static FIELDS: OnceLock<Mutex<HashMap<(u32, u32), &'static Field>>> = OnceLock::new();
    let fields = FIELDS.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = fields.lock().expect("field registry poisoned");
    if let Some(f) = guard.get(&(p, d)) {
        return Ok(f);
    }
    let f: &'static Field = Box::leak(Box::new(Field::build(p, d)?));
    guard.insert((p, d), f);
    Ok(f)
}

/// The field of order q, for q a prime power.
pub fn field_of_order(q: u32) -> Result<&'static Field, GlError> {
    let p = (2..=q).find(|&k| q % k == 0).ok_or(GlError::NotPrime(q))?;
    let mut d = 0;
    let mut r = q;
    while r % p == 0 {
        r /= p;
        d += 1;
    }
    if r != 1 {
        return Err(GlError::NotPrimePower(q));
    }
    field(p, d)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conway_polynomials_are_primitive() {
        for (p, d) in [(2, 2), (2, 3), (2, 4), (2, 5), (2, 6), (3, 2), (3, 3), (5, 2), (7, 2)] {
            let f = field(p, d).unwrap();
            // x is the index p
            assert_eq!(f.mult_order(p as Fq), f.order() - 1, "F_{}^{}", p, d);
        }
    }

    #[test]
    fn field_axioms() {
        for q in [2, 3, 4, 5, 8, 9, 16, 25, 27, 49, 64] {
            let f = field_of_order(q).unwrap();
            for a in f.elements() {
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
                }
                for b in f.elements() {
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in f.elements().step_by(3) {
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn frobenius_fixes_prime_field() {
        let f = field(3, 3).unwrap();
        for a in f.elements() {
            assert_eq!(f.frobenius(a) == a, a < 3);
            for b in f.elements() {
                assert_eq!(f.frobenius(f.mul(a, b)), f.mul(f.frobenius(a), f.frobenius(b)));
                assert_eq!(f.frobenius(f.add(a, b)), f.add(f.frobenius(a), f.frobenius(b)));
            }
        }
    }

    #[test]
    fn traces_and_norms() {
        let f4 = field(2, 2).unwrap();
        assert_eq!(f4.trace(1), 0);
        for a in f4.elements() {
            assert_eq!(f4.trace(a) as Fq, f4.add(a, f4.mul(a, a)));
        }
        let f7 = field(7, 1).unwrap();
        assert!(f7.elements().all(|a| f7.trace(a) == a as u32));
        let f9 = field(3, 2).unwrap();
        let norms: std::collections::BTreeSet<Fq> = f9.units().map(|a| f9.norm(a)).collect();
        assert_eq!(norms, [1, 2].into_iter().collect());
    }

    #[test]
    fn bad_parameters() {
        assert_eq!(field(4, 1).unwrap_err(), GlError::NotPrime(4));
        assert!(matches!(field(2, 7), Err(GlError::FieldTooLarge { .. })));
        assert_eq!(field_of_order(12).unwrap_err(), GlError::NotPrimePower(12));
    }

    #[test]
    fn discrete_logs() {
        let f = field(5, 2).unwrap();
        for a in f.units() {
            assert_eq!(f.exp(f.log(a).unwrap() as i64), a);
        }
        assert_eq!(field(3, 1).unwrap().least_non_square(), Some(2));
        assert_eq!(field(5, 1).unwrap().least_non_square(), Some(2));
    }
}
