//! Exact arithmetic in Q and in the cyclotomic field Q(ξ_r).
//!
//! Elements of Q(ξ_r) are stored as residues modulo the r-th cyclotomic polynomial Φ_r,
//! so every value has a unique coefficient vector of length φ(r) and equality is structural.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rational = BigRational;

pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn rational_int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// Integer-coefficient univariate polynomial, coefficients listed from degree 0 upward.
pub type IntPoly = Vec<BigInt>;

fn trim_int(p: &mut IntPoly) {
    while p.len() > 1 && p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

/// Exact quotient of `num` by the monic polynomial `den`. The remainder must vanish.
fn div_monic_exact(num: &IntPoly, den: &IntPoly) -> IntPoly {
    let dn = den.len() - 1;
    let mut rem = num.clone();
    if rem.len() <= dn {
        return vec![BigInt::zero()];
    }
    let mut quot = vec![BigInt::zero(); rem.len() - dn];
    for k in (dn..rem.len()).rev() {
        let c = rem[k].clone();
        if c.is_zero() {
            continue;
        }
        quot[k - dn] = c.clone();
        for (j, d) in den.iter().enumerate() {
            rem[k - dn + j] -= &c * d;
        }
    }
    debug_assert!(rem.iter().all(|c| c.is_zero()), "inexact cyclotomic division");
    trim_int(&mut quot);
    quot
}

fn compute_cyclotomic(r: u32) -> IntPoly {
    // x^r - 1 divided by Φ_d for every proper divisor d of r.
    let mut num = vec![BigInt::zero(); r as usize + 1];
    num[0] = BigInt::from(-1);
    num[r as usize] = BigInt::one();
    for d in 1..r {
        if r.is_multiple_of(d) {
            num = div_monic_exact(&num, &cyclotomic_cached(d));
        }
    }
    num
}

fn cyclotomic_cache() -> &'static RwLock<HashMap<u32, Arc<IntPoly>>> {
    static CACHE: OnceLock<RwLock<HashMap<u32, Arc<IntPoly>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

fn cyclotomic_cached(r: u32) -> Arc<IntPoly> {
    if let Some(p) = cyclotomic_cache().read().expect("cache poisoned").get(&r) {
        return p.clone();
    }
    let p = Arc::new(compute_cyclotomic(r));
    cyclotomic_cache()
        .write()
        .expect("cache poisoned")
        .entry(r)
        .or_insert(p)
        .clone()
}

/// The r-th cyclotomic polynomial Φ_r, coefficients from degree 0 upward.
///
/// # Panics
/// Panics if `r == 0`.
pub fn cyclotomic_polynomial(r: u32) -> IntPoly {
    assert!(r >= 1, "cyclotomic order must be positive");
    cyclotomic_cached(r).as_ref().clone()
}

/// Euler's totient, the degree of Φ_r.
pub fn totient(r: u32) -> usize {
    (1..=r).filter(|k| k.gcd(&r) == 1).count()
}

// --- univariate helpers over Q, used for inversion ---

type RatPoly = Vec<Rational>;

fn trim_rat(p: &mut RatPoly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn rat_mul(a: &RatPoly, b: &RatPoly) -> RatPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim_rat(&mut out);
    out
}

fn rat_sub(a: &RatPoly, b: &RatPoly) -> RatPoly {
    let mut out = vec![Rational::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim_rat(&mut out);
    out
}

fn rat_divrem(a: &RatPoly, b: &RatPoly) -> (RatPoly, RatPoly) {
    let mut rem = a.clone();
    trim_rat(&mut rem);
    let db = b.len() - 1;
    let lead = b[db].clone();
    if rem.len() <= db {
        return (Vec::new(), rem);
    }
    let mut quot = vec![Rational::zero(); rem.len() - db];
    while rem.len() > db {
        let k = rem.len() - 1;
        let c = &rem[k] / &lead;
        for (j, d) in b.iter().enumerate() {
            rem[k - db + j] -= &c * d;
        }
        quot[k - db] = c;
        trim_rat(&mut rem);
    }
    trim_rat(&mut quot);
    (quot, rem)
}

/// Exact element of Q(ξ_r) where ξ is a primitive r-th root of unity.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycElement {
    order: u32,
    coeffs: Vec<Rational>,
}

impl CycElement {
    /// Builds an element from coefficients of 1, ξ, ξ², …; any length is accepted and
    /// reduced modulo Φ_r.
    pub fn new(order: u32, coeffs: Vec<Rational>) -> Self {
        assert!(order >= 1, "cyclotomic order must be positive");
        let mut e = CycElement { order, coeffs };
        e.reduce();
        e
    }

    pub fn zero(order: u32) -> Self {
        Self::new(order, Vec::new())
    }

    pub fn one(order: u32) -> Self {
        Self::from_rational(order, Rational::one())
    }

    pub fn from_rational(order: u32, q: Rational) -> Self {
        Self::new(order, vec![q])
    }

    pub fn from_int(order: u32, v: i64) -> Self {
        Self::from_rational(order, rational_int(v))
    }

    /// ξ^k, with k taken modulo r.
    pub fn xi_pow(order: u32, k: i64) -> Self {
        let k = k.rem_euclid(order as i64) as usize;
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = Rational::one();
        Self::new(order, coeffs)
    }

    pub fn xi(order: u32) -> Self {
        Self::xi_pow(order, 1)
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Canonical coefficient vector, length φ(r).
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    /// The rational value, if the element lies in Q.
    pub fn to_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    fn reduce(&mut self) {
        let phi = cyclotomic_cached(self.order);
        let deg = phi.len() - 1;
        let mut c = std::mem::take(&mut self.coeffs);
        if c.len() > deg {
            for k in (deg..c.len()).rev() {
                let lead = c[k].clone();
                if lead.is_zero() {
                    continue;
                }
                // Φ_r is monic with integer coefficients.
                for (j, p) in phi.iter().enumerate() {
                    if !p.is_zero() {
                        c[k - deg + j] -= &lead * Rational::from_integer(p.clone());
                    }
                }
            }
            c.truncate(deg);
        }
        c.resize(deg, Rational::zero());
        self.coeffs = c;
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order != other.order {
            return Err(Error::OrderMismatch(self.order, other.order));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(CycElement { order: self.order, coeffs })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        Ok(CycElement { order: self.order, coeffs })
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        if self.coeffs.len() == 1 {
            return Ok(CycElement { order: self.order, coeffs: vec![&self.coeffs[0] * &other.coeffs[0]] });
        }
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.order));
        }
        let mut prod = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        Ok(Self::new(self.order, prod))
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against Φ_r.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.coeffs.len() == 1 {
            return Ok(Self::from_rational(self.order, self.coeffs[0].recip()));
        }
        let modulus: RatPoly = cyclotomic_cached(self.order)
            .iter()
            .map(|c| Rational::from_integer(c.clone()))
            .collect();
        let mut a = self.coeffs.clone();
        trim_rat(&mut a);
        // Invariant: s_i * self ≡ r_i (mod Φ_r).
        let (mut r0, mut r1) = (modulus, a);
        let (mut s0, mut s1): (RatPoly, RatPoly) = (Vec::new(), vec![Rational::one()]);
        while r1.len() > 1 {
            let (q, rem) = rat_divrem(&r0, &r1);
            let s2 = rat_sub(&s0, &rat_mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, rem);
            s0 = std::mem::replace(&mut s1, s2);
            debug_assert!(!r1.is_empty(), "Φ_r is irreducible, gcd must be a unit");
        }
        let scale = r1[0].recip();
        Ok(Self::new(self.order, s1.into_iter().map(|c| c * &scale).collect()))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        self.checked_mul(&other.inv()?)
    }

    /// Least common multiple of the coefficient denominators.
    pub fn denominator(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }

    /// Integer coefficients of `den · self`; `den` must be a multiple of `self.denominator()`.
    pub fn numerators(&self, den: &BigInt) -> Vec<BigInt> {
        self.coeffs.iter().map(|c| c.numer() * (den / c.denom())).collect()
    }

    /// `num / den` for an unreduced coefficient vector of any length.
    pub fn from_numerators(order: u32, num: Vec<BigInt>, den: &BigInt) -> Self {
        Self::new(order, num.into_iter().map(|c| Rational::new(c, den.clone())).collect())
    }

    pub fn scale(&self, q: &Rational) -> Self {
        CycElement { order: self.order, coeffs: self.coeffs.iter().map(|c| c * q).collect() }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one(self.order);
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Complex conjugate, the automorphism ξ ↦ ξ⁻¹.
    pub fn conj(&self) -> Self {
        let r = self.order as usize;
        let mut coeffs = vec![Rational::zero(); r];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[(r - k) % r] += c;
        }
        Self::new(self.order, coeffs)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&CycElement> for &CycElement {
            type Output = CycElement;
            fn $method(self, rhs: &CycElement) -> CycElement {
                self.$checked(rhs).expect("cyclotomic order mismatch")
            }
        }
        impl $trait<CycElement> for CycElement {
            type Output = CycElement;
            fn $method(self, rhs: CycElement) -> CycElement {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl Neg for &CycElement {
    type Output = CycElement;
    fn neg(self) -> CycElement {
        CycElement { order: self.order, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for CycElement {
    type Output = CycElement;
    fn neg(self) -> CycElement {
        -&self
    }
}

fn fmt_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for CycElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (neg, mag) = (c.is_negative(), c.abs());
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            match k {
                0 => write!(f, "{}", fmt_rational(&mag))?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{}*", fmt_rational(&mag))?;
                    }
                    if k == 1 {
                        write!(f, "xi")?;
                    } else {
                        write!(f, "xi^{k}")?;
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CycElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycElement[r={}]({})", self.order, self)
    }
}

#[derive(Serialize, Deserialize)]
struct CycElementJson {
    r: u32,
    coeffs: Vec<(String, String)>,
}

impl Serialize for CycElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        CycElementJson {
            r: self.order,
            coeffs: self.coeffs.iter().map(|c| (c.numer().to_string(), c.denom().to_string())).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for CycElement {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = CycElementJson::deserialize(deserializer)?;
        if raw.r == 0 {
            return Err(D::Error::custom("order r must be positive"));
        }
        let mut coeffs = Vec::with_capacity(raw.coeffs.len());
        for (n, d) in raw.coeffs {
            let n: BigInt = n.parse().map_err(D::Error::custom)?;
            let d: BigInt = d.parse().map_err(D::Error::custom)?;
            if d.is_zero() {
                return Err(D::Error::custom("zero denominator"));
            }
            coeffs.push(Rational::new(n, d));
        }
        Ok(CycElement::new(raw.r, coeffs))
    }
}
