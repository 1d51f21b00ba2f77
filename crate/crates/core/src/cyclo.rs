//! Exact arithmetic in cyclotomic fields Q(ζ_N).
//!
//! A [`CycloNumber`] stores its coefficients reduced modulo the N-th
//! cyclotomic polynomial Φ_N, so two numbers with the same conductor are
//! equal iff their coefficient vectors are. Numbers of different conductors
//! are compared after lifting both to the lcm.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Exact rational number.
pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CycloError {
    #[error("conductor must be positive")]
    ZeroConductor,
    #[error("division by zero")]
    DivisionByZero,
    #[error("malformed cyclotomic number: {0}")]
    Malformed(String),
}

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a.lcm(&b)
}

pub fn euler_phi(n: u32) -> usize {
    let mut n = n as u64;
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result as usize
}

/// Reduction data for one conductor: Φ_N and the reductions of x^k, 0 ≤ k < N.
struct Reducer {
    phi: usize,
    powers: Vec<Vec<(usize, i64)>>,
}

fn cyclotomic_poly(n: u32, cache: &mut HashMap<u32, Vec<i64>>) -> Vec<i64> {
    if let Some(p) = cache.get(&n) {
        return p.clone();
    }
    // x^n - 1 divided by Φ_d for every proper divisor d.
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n % d == 0 {
            let div = cyclotomic_poly(d, cache);
            num = div_monic(&num, &div);
        }
    }
    cache.insert(n, num.clone());
    num
}

fn div_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dn = den.len() - 1;
    let mut rem = num.to_vec();
    let mut quo = vec![0i64; num.len() - dn];
    for i in (0..quo.len()).rev() {
        let c = rem[i + dn];
        quo[i] = c;
        if c != 0 {
            for (j, &dj) in den.iter().enumerate() {
                rem[i + j] -= c * dj;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    quo
}

fn reducer(n: u32) -> Arc<Reducer> {
    static CACHE: OnceLock<Mutex<(HashMap<u32, Arc<Reducer>>, HashMap<u32, Vec<i64>>)>> =
        OnceLock::new();
    let lock = CACHE.get_or_init(|| Mutex::new((HashMap::new(), HashMap::new())));
    let mut guard = lock.lock().expect("reducer cache poisoned");
    if let Some(r) = guard.0.get(&n) {
        return r.clone();
    }
    let poly = cyclotomic_poly(n, &mut guard.1);
    let phi = poly.len() - 1;
    let mut powers = Vec::with_capacity(n as usize);
    let mut cur = vec![0i64; phi];
    if phi > 0 {
        cur[0] = 1;
    }
    for _ in 0..n {
        powers.push(
            cur.iter()
                .enumerate()
                .filter(|(_, &c)| c != 0)
                .map(|(i, &c)| (i, c))
                .collect(),
        );
        // multiply by x and reduce with x^phi = -Σ poly[j] x^j
        let top = cur[phi - 1];
        for j in (1..phi).rev() {
            cur[j] = cur[j - 1] - top * poly[j];
        }
        cur[0] = -top * poly[0];
    }
    let r = Arc::new(Reducer { phi, powers });
    guard.0.insert(n, r.clone());
    r
}

/// An exact element of Q(ζ_N).
#[derive(Clone)]
pub struct CycloNumber {
    conductor: u32,
    coeffs: Vec<Rational>,
}

impl CycloNumber {
    pub fn zero() -> Self {
        Self::from_rational(Rational::zero())
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(rat(n))
    }

    pub fn from_rational(r: Rational) -> Self {
        CycloNumber { conductor: 1, coeffs: vec![r] }
    }

    /// ζ_N^k.
    pub fn root_of_unity(n: u32, k: i64) -> Result<Self, CycloError> {
        if n == 0 {
            return Err(CycloError::ZeroConductor);
        }
        let e = k.rem_euclid(n as i64) as usize;
        let red = reducer(n);
        let mut coeffs = vec![Rational::zero(); red.phi];
        for &(i, c) in &red.powers[e] {
            coeffs[i] = rat(c);
        }
        Ok(CycloNumber { conductor: n, coeffs })
    }

    /// Builds Σ c_k ζ_N^k from coefficients indexed by exponent (any length).
    pub fn from_exponents(n: u32, coeffs: &[Rational]) -> Result<Self, CycloError> {
        if n == 0 {
            return Err(CycloError::ZeroConductor);
        }
        Ok(reduce(n, coeffs.iter().enumerate().map(|(k, c)| (k, c))))
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    /// Canonical coefficients with respect to 1, ζ_N, …, ζ_N^{φ(N)-1}.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs.iter().skip(1).all(Zero::is_zero)
    }

    pub fn to_rational(&self) -> Option<Rational> {
        self.is_rational().then(|| self.coeffs[0].clone())
    }

    /// Rewrites the number over conductor `m`, which must be a multiple of the current one.
    pub fn lift(&self, m: u32) -> Self {
        assert!(
            m % self.conductor == 0,
            "cannot lift conductor {} to {}",
            self.conductor,
            m
        );
        if m == self.conductor {
            return self.clone();
        }
        let step = (m / self.conductor) as usize;
        reduce(m, self.coeffs.iter().enumerate().map(|(i, c)| (i * step, c)))
    }

    /// Smallest conductor dividing the current one that still holds the value.
    pub fn minimize(&self) -> Self {
        let n = self.conductor;
        let mut best = self.clone();
        for d in 1..n {
            if n % d != 0 || d >= best.conductor {
                continue;
            }
            // Try to express self over conductor d by testing candidate membership.
            let phi_d = euler_phi(d);
            let step = (n / d) as usize;
            // Candidate: solve using the images of ζ_d^i (i < φ(d)) in the Q(ζ_n) basis.
            if let Some(c) = express_in_subfield(self, d, phi_d, step) {
                best = c;
                break;
            }
        }
        best
    }

    pub fn conj(&self) -> Self {
        let n = self.conductor as usize;
        reduce(
            self.conductor,
            self.coeffs.iter().enumerate().map(|(i, c)| ((n - i) % n, c)),
        )
    }

    /// Multiplies by ζ_N^k where N is a multiple of the conductor of `self` or not;
    /// the result lives over lcm(conductor, N).
    pub fn mul_root(&self, n: u32, k: i64) -> Self {
        let m = lcm(self.conductor as u64, n as u64) as u32;
        let step = (m / self.conductor) as usize;
        let shift = (k.rem_euclid(n as i64) as usize) * (m / n) as usize;
        reduce(
            m,
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| ((i * step + shift) % m as usize, c)),
        )
    }

    pub fn scale(&self, r: &Rational) -> Self {
        CycloNumber {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = CycloNumber::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn inv(&self) -> Result<Self, CycloError> {
        if self.is_zero() {
            return Err(CycloError::DivisionByZero);
        }
        if let Some(r) = self.to_rational() {
            return Ok(Self::from_rational(r.recip()));
        }
        let n = self.conductor;
        let mut cache = HashMap::new();
        let phi_poly: Vec<Rational> = cyclotomic_poly(n, &mut cache).into_iter().map(rat).collect();
        let a = trim(self.coeffs.clone());
        let s = poly_inverse_mod(&a, &phi_poly).ok_or(CycloError::DivisionByZero)?;
        Ok(reduce(n, s.iter().enumerate().map(|(k, c)| (k, c))))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, CycloError> {
        Ok(self * &other.inv()?)
    }

    /// Floating-point value (re, im); for reporting only.
    pub fn to_complex(&self) -> (f64, f64) {
        let n = self.conductor as f64;
        let mut re = 0.0;
        let mut im = 0.0;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let v = c.to_f64().unwrap_or(f64::NAN);
            let theta = 2.0 * std::f64::consts::PI * (k as f64) / n;
            re += v * theta.cos();
            im += v * theta.sin();
        }
        (re, im)
    }

    fn aligned(a: &Self, b: &Self) -> (Self, Self) {
        if a.conductor == b.conductor {
            return (a.clone(), b.clone());
        }
        let m = lcm(a.conductor as u64, b.conductor as u64) as u32;
        (a.lift(m), b.lift(m))
    }
}

fn express_in_subfield(x: &CycloNumber, d: u32, phi_d: usize, step: usize) -> Option<CycloNumber> {
    // Images of ζ_d^i in Q(ζ_n) are ζ_n^{i*step}; solve the linear system greedily by
    // forming a candidate from the first φ(d) coordinates via exact elimination.
    let n = x.conductor;
    let cols: Vec<CycloNumber> = (0..phi_d)
        .map(|i| CycloNumber::root_of_unity(n, (i * step) as i64).expect("positive conductor"))
        .collect();
    let rows = x.coeffs.len();
    let mut mat: Vec<Vec<Rational>> = (0..rows)
        .map(|r| {
            let mut row: Vec<Rational> = cols.iter().map(|c| c.coeffs[r].clone()).collect();
            row.push(x.coeffs[r].clone());
            row
        })
        .collect();
    let sol = crate::linalg::solve_augmented(&mut mat, phi_d)?;
    let cand = CycloNumber::from_exponents(d, &sol).ok()?;
    (cand.lift(n).coeffs == x.coeffs).then_some(cand)
}

fn reduce<'a, I>(n: u32, terms: I) -> CycloNumber
where
    I: Iterator<Item = (usize, &'a Rational)>,
{
    let red = reducer(n);
    let mut coeffs = vec![Rational::zero(); red.phi];
    let n = n as usize;
    for (k, c) in terms {
        if c.is_zero() {
            continue;
        }
        for &(i, m) in &red.powers[k % n] {
            if m == 1 {
                coeffs[i] += c;
            } else if m == -1 {
                coeffs[i] -= c;
            } else {
                coeffs[i] += c * rat(m);
            }
        }
    }
    CycloNumber { conductor: n as u32, coeffs }
}

fn trim(mut p: Vec<Rational>) -> Vec<Rational> {
    while p.len() > 1 && p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn poly_divrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let b = trim(b.to_vec());
    let db = b.len() - 1;
    let lead = b[db].clone();
    let mut r = trim(a.to_vec());
    if r.len() < b.len() {
        return (vec![Rational::zero()], r);
    }
    let mut q = vec![Rational::zero(); r.len() - db];
    for i in (0..q.len()).rev() {
        let c = &r[i + db] / &lead;
        if !c.is_zero() {
            for (j, bj) in b.iter().enumerate() {
                r[i + j] -= &c * bj;
            }
        }
        q[i] = c;
    }
    r.truncate(db.max(1));
    (q, trim(r))
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let len = a.len().max(b.len());
    (0..len)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(Rational::zero);
            let y = b.get(i).cloned().unwrap_or_else(Rational::zero);
            x - y
        })
        .collect()
}

/// s with a·s ≡ 1 (mod m), by the extended Euclidean algorithm over Q.
fn poly_inverse_mod(a: &[Rational], m: &[Rational]) -> Option<Vec<Rational>> {
    let (mut r0, mut r1) = (m.to_vec(), a.to_vec());
    let (mut s0, mut s1) = (vec![Rational::zero()], vec![Rational::one()]);
    while !(r1.len() == 1 && r1[0].is_zero()) {
        let (q, r) = poly_divrem(&r0, &r1);
        let s2 = trim(poly_sub(&s0, &poly_mul(&q, &s1)));
        r0 = r1;
        r1 = trim(r);
        s0 = s1;
        s1 = s2;
    }
    // r0 is the gcd; it must be a nonzero constant.
    if r0.len() != 1 || r0[0].is_zero() {
        return None;
    }
    let c = r0[0].clone();
    Some(s0.into_iter().map(|x| x / &c).collect())
}

impl PartialEq for CycloNumber {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = CycloNumber::aligned(self, other);
        a.coeffs == b.coeffs
    }
}

impl Eq for CycloNumber {}

impl From<i64> for CycloNumber {
    fn from(n: i64) -> Self {
        CycloNumber::from_int(n)
    }
}

impl From<Rational> for CycloNumber {
    fn from(r: Rational) -> Self {
        CycloNumber::from_rational(r)
    }
}

impl Add for &CycloNumber {
    type Output = CycloNumber;
    fn add(self, rhs: &CycloNumber) -> CycloNumber {
        if self.conductor == rhs.conductor {
            return CycloNumber {
                conductor: self.conductor,
                coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
            };
        }
        let (a, b) = CycloNumber::aligned(self, rhs);
        &a + &b
    }
}

impl Sub for &CycloNumber {
    type Output = CycloNumber;
    fn sub(self, rhs: &CycloNumber) -> CycloNumber {
        self + &(-rhs)
    }
}

impl Neg for &CycloNumber {
    type Output = CycloNumber;
    fn neg(self) -> CycloNumber {
        CycloNumber {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &CycloNumber {
    type Output = CycloNumber;
    fn mul(self, rhs: &CycloNumber) -> CycloNumber {
        if self.conductor == 1 {
            return rhs.scale(&self.coeffs[0]);
        }
        if rhs.conductor == 1 {
            return self.scale(&rhs.coeffs[0]);
        }
        if self.conductor != rhs.conductor {
            let (a, b) = CycloNumber::aligned(self, rhs);
            return &a * &b;
        }
        let mut prod = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in rhs.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] += x * y;
                }
            }
        }
        reduce(self.conductor, prod.iter().enumerate())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for CycloNumber {
            type Output = CycloNumber;
            fn $m(self, rhs: CycloNumber) -> CycloNumber {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&CycloNumber> for CycloNumber {
            type Output = CycloNumber;
            fn $m(self, rhs: &CycloNumber) -> CycloNumber {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for CycloNumber {
    type Output = CycloNumber;
    fn neg(self) -> CycloNumber {
        -&self
    }
}

impl AddAssign<&CycloNumber> for CycloNumber {
    fn add_assign(&mut self, rhs: &CycloNumber) {
        if self.conductor == rhs.conductor {
            for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
                *a += b;
            }
        } else {
            *self = &*self + rhs;
        }
    }
}

impl std::iter::Sum for CycloNumber {
    fn sum<I: Iterator<Item = CycloNumber>>(iter: I) -> Self {
        let mut acc = CycloNumber::zero();
        for x in iter {
            acc += &x;
        }
        acc
    }
}

impl fmt::Display for CycloNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            if k == 0 {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                write!(f, "E({})", self.conductor)?;
                if k > 1 {
                    write!(f, "^{k}")?;
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CycloNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclo({self})")
    }
}

/// Accumulates Σ c_k ζ_N^k over a fixed conductor and reduces once at the end.
#[derive(Clone, Debug)]
pub struct CycloSum {
    conductor: u32,
    acc: Vec<Rational>,
}

impl CycloSum {
    pub fn new(conductor: u32) -> Self {
        assert!(conductor > 0, "conductor must be positive");
        CycloSum { conductor, acc: vec![Rational::zero(); conductor as usize] }
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn add_root(&mut self, k: i64, c: &Rational) {
        let i = k.rem_euclid(self.conductor as i64) as usize;
        self.acc[i] += c;
    }

    pub fn add_root_int(&mut self, k: i64, c: i64) {
        let i = k.rem_euclid(self.conductor as i64) as usize;
        self.acc[i] += rat(c);
    }

    /// Adds x·ζ_N^k; the conductor of x must divide N.
    pub fn add_scaled(&mut self, x: &CycloNumber, k: i64) {
        assert!(
            self.conductor % x.conductor == 0,
            "conductor {} does not divide {}",
            x.conductor,
            self.conductor
        );
        let step = (self.conductor / x.conductor) as i64;
        for (i, c) in x.coeffs.iter().enumerate() {
            if !c.is_zero() {
                self.add_root(i as i64 * step + k, c);
            }
        }
    }

    pub fn finish(&self) -> CycloNumber {
        reduce(self.conductor, self.acc.iter().enumerate())
    }
}

#[derive(Serialize, Deserialize)]
struct CycloJson {
    conductor: u32,
    coeffs: Vec<[String; 2]>,
}

impl Serialize for CycloNumber {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let n = self.conductor as usize;
        let coeffs = (0..n)
            .map(|i| {
                let c = self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero);
                [c.numer().to_string(), c.denom().to_string()]
            })
            .collect();
        CycloJson { conductor: self.conductor, coeffs }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for CycloNumber {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let raw = CycloJson::deserialize(d)?;
        let mut coeffs = Vec::with_capacity(raw.coeffs.len());
        for [num, den] in &raw.coeffs {
            let num: BigInt = num.parse().map_err(D::Error::custom)?;
            let den: BigInt = den.parse().map_err(D::Error::custom)?;
            if den.is_zero() {
                return Err(D::Error::custom("zero denominator"));
            }
            coeffs.push(Rational::new(num, den));
        }
        CycloNumber::from_exponents(raw.conductor, &coeffs).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: u32, k: i64) -> CycloNumber {
        CycloNumber::root_of_unity(n, k).unwrap()
    }

    #[test]
    fn zeta4_squared_is_minus_one() {
        assert_eq!(&z(4, 1) * &z(4, 1), CycloNumber::from_int(-1));
    }

    #[test]
    fn cube_roots_sum_to_zero() {
        let s = &CycloNumber::one() + &(&z(3, 1) + &z(3, 2));
        assert!(s.is_zero());
    }

    #[test]
    fn quadratic_gauss_sum_mod_5() {
        let legendre = |x: i64| if [1, 4].contains(&x) { 1 } else { -1 };
        let g: CycloNumber = (1..5).map(|x| z(5, x).scale(&rat(legendre(x)))).sum();
        assert_eq!(&g * &g, CycloNumber::from_int(5));
    }

    #[test]
    fn roots_of_unity_basics() {
        assert_eq!(z(1, 5), CycloNumber::one());
        assert_eq!(z(2, 1), CycloNumber::from_int(-1));
        assert_eq!(z(6, 3), CycloNumber::from_int(-1));
        assert_eq!(z(12, 12), CycloNumber::one());
        assert!(CycloNumber::root_of_unity(0, 1).is_err());
    }

    #[test]
    fn prime_root_sums_vanish() {
        for p in [2u32, 3, 5, 7, 11, 13] {
            let s: CycloNumber = (0..p as i64).map(|k| z(p, k)).sum();
            assert!(s.is_zero(), "p = {p}");
        }
    }

    #[test]
    fn cyclotomic_polys_small() {
        let mut c = HashMap::new();
        assert_eq!(cyclotomic_poly(1, &mut c), vec![-1, 1]);
        assert_eq!(cyclotomic_poly(4, &mut c), vec![1, 0, 1]);
        assert_eq!(cyclotomic_poly(6, &mut c), vec![1, -1, 1]);
        assert_eq!(cyclotomic_poly(12, &mut c), vec![1, 0, -1, 0, 1]);
        assert_eq!(euler_phi(84), 24);
    }

    #[test]
    fn inverse_and_division() {
        let a = &z(7, 1) + &CycloNumber::from_int(2);
        let ai = a.inv().unwrap();
        assert_eq!(&a * &ai, CycloNumber::one());
        assert_eq!(CycloNumber::zero().inv(), Err(CycloError::DivisionByZero));
        let b = &z(12, 5) - &z(12, 2);
        assert_eq!(&(&a * &b).checked_div(&b).unwrap(), &a);
    }

    #[test]
    fn mixed_conductors_compare_equal() {
        // ζ_6 = -ζ_3^2
        assert_eq!(z(6, 1), -z(3, 2));
        assert_eq!(z(4, 1).lift(12), z(12, 3));
        assert_eq!(z(8, 2), z(4, 1));
    }

    #[test]
    fn complex_values() {
        let (re, im) = CycloNumber::from_int(-1).to_complex();
        assert!((re + 1.0).abs() < 1e-12 && im.abs() < 1e-12);
        let (re, im) = z(4, 1).to_complex();
        assert!(re.abs() < 1e-12 && (im - 1.0).abs() < 1e-12);
        let (re, im) = z(3, 1).to_complex();
        assert!((re + 0.5).abs() < 1e-12 && (im - 0.8660254037844386).abs() < 1e-12);
    }

    #[test]
    fn json_roundtrip() {
        let a = &z(5, 2).scale(&ratio(3, 4)) - &z(5, 4);
        let s = serde_json::to_string(&a).unwrap();
        assert!(s.starts_with("{\"conductor\":5,\"coeffs\":[[\""));
        let b: CycloNumber = serde_json::from_str(&s).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn accumulator_matches_direct_sum() {
        let mut acc = CycloSum::new(12);
        acc.add_root_int(1, 2);
        acc.add_root_int(13, -1);
        acc.add_scaled(&z(4, 1), 0);
        let direct = &z(12, 1) + &z(4, 1);
        assert_eq!(acc.finish(), direct);
    }

    #[test]
    fn minimize_finds_subfield() {
        let a = z(4, 1).lift(24);
        assert_eq!(a.minimize().conductor(), 4);
        assert_eq!(CycloNumber::from_int(3).lift(10).minimize().conductor(), 1);
    }

    #[test]
    fn display_is_readable() {
        let a = &CycloNumber::from_int(2) - &z(5, 3);
        assert_eq!(a.to_string(), "2 - E(5)^3");
    }
}
