//! Sparse multivariate polynomials over Q(ξ_r).
//!
//! Terms live in a `BTreeMap` keyed by [`Monomial`], whose ordering is graded
//! lexicographic with x₁ > x₂ > … > x_n. Division and JSON output both rely on it.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exact_arith::{CycElement, Rational};

/// Default cap on total degree for checked products.
pub const DEFAULT_DEGREE_BOUND: u32 = 64;

/// Exponent vector of a monomial in n variables.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn var(n: usize, i: usize, power: u32) -> Self {
        let mut e = vec![0; n];
        e[i] = power;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self.divides(other)`.
    fn quotient_of(&self, other: &Monomial) -> Monomial {
        Monomial(other.0.iter().zip(&self.0).map(|(b, a)| b - a).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Polynomial in `n` variables with coefficients in Q(ξ_r). No zero coefficients are stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SparsePoly {
    n: usize,
    order: u32,
    terms: BTreeMap<Monomial, CycElement>,
}

impl SparsePoly {
    pub fn zero(n: usize, order: u32) -> Self {
        SparsePoly { n, order, terms: BTreeMap::new() }
    }

    pub fn constant(n: usize, c: CycElement) -> Self {
        Self::monomial(n, Monomial::one(n), c)
    }

    pub fn one(n: usize, order: u32) -> Self {
        Self::constant(n, CycElement::one(order))
    }

    pub fn monomial(n: usize, m: Monomial, c: CycElement) -> Self {
        assert_eq!(m.arity(), n, "monomial arity");
        let order = c.order();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        SparsePoly { n, order, terms }
    }

    /// The variable x_{i+1} (0-based index `i`).
    pub fn var(n: usize, order: u32, i: usize) -> Self {
        Self::monomial(n, Monomial::var(n, i, 1), CycElement::one(order))
    }

    /// Builds a polynomial from (exponents, coefficient) pairs, summing duplicates.
    pub fn from_terms(n: usize, order: u32, terms: impl IntoIterator<Item = (Vec<u32>, CycElement)>) -> Self {
        let mut p = Self::zero(n, order);
        for (e, c) in terms {
            assert_eq!(e.len(), n, "monomial arity");
            p.add_term(Monomial(e), c);
        }
        p
    }

    pub fn arity(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> u32 {
        self.order
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

    /// Terms in increasing monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &CycElement)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> CycElement {
        self.terms.get(m).cloned().unwrap_or_else(|| CycElement::zero(self.order))
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &CycElement)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn constant_term(&self) -> CycElement {
        self.coeff(&Monomial::one(self.n))
    }

    fn add_term(&mut self, m: Monomial, c: CycElement) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                let sum = &*existing + &c;
                if sum.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::ArityMismatch(self.n, other.n));
        }
        if self.order != other.order {
            return Err(Error::OrderMismatch(self.order, other.order));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        Ok(out)
    }

    /// Product refusing results whose total degree exceeds `bound`.
    pub fn mul_bounded(&self, other: &Self, bound: u32) -> Result<Self> {
        self.check_compatible(other)?;
        if let (Some(a), Some(b)) = (self.total_degree(), other.total_degree()) {
            if a + b > bound {
                return Err(Error::DegreeBound { degree: a + b, bound });
            }
        }
        let mut out = Self::zero(self.n, self.order);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.mul_bounded(other, DEFAULT_DEGREE_BOUND)
    }

    pub fn scale(&self, c: &CycElement) -> Self {
        if c.is_zero() {
            return Self::zero(self.n, self.order);
        }
        SparsePoly {
            n: self.n,
            order: self.order,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn scale_rational(&self, q: &Rational) -> Self {
        self.scale(&CycElement::from_rational(self.order, q.clone()))
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        SparsePoly {
            n: self.n,
            order: self.order,
            terms: self.terms.iter().map(|(k, v)| (k.mul(m), v.clone())).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.n, self.order);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// ∂/∂x_{i+1} (0-based index `i`).
    pub fn partial_derivative(&self, i: usize) -> Result<Self> {
        if i >= self.n {
            return Err(Error::IndexOutOfRange { index: i, len: self.n });
        }
        let mut out = Self::zero(self.n, self.order);
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut exps = m.0.clone();
            exps[i] -= 1;
            out.add_term(Monomial(exps), c.scale(&Rational::from_integer(e.into())));
        }
        Ok(out)
    }

    /// Replaces every x_k by `scalars[k] * x_{perm[k]}` (0-based, `perm` in one-line form).
    pub fn substitute_scaled_permutation(&self, scalars: &[CycElement], perm: &[usize]) -> Result<Self> {
        if scalars.len() != self.n {
            return Err(Error::ArityMismatch(self.n, scalars.len()));
        }
        if perm.len() != self.n {
            return Err(Error::ArityMismatch(self.n, perm.len()));
        }
        let mut out = Self::zero(self.n, self.order);
        for (m, c) in &self.terms {
            let mut exps = vec![0; self.n];
            let mut coeff = c.clone();
            for (k, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    exps[perm[k]] += e;
                    coeff = &coeff * &scalars[k].pow(e);
                }
            }
            out.add_term(Monomial(exps), coeff);
        }
        Ok(out)
    }

    /// Same as [`Self::substitute_scaled_permutation`] with `scalars[k] = ξ^{root_powers[k]}`,
    /// avoiding general multiplications for the group action.
    pub fn substitute_root_powers(&self, root_powers: &[u32], perm: &[usize]) -> Self {
        debug_assert_eq!(root_powers.len(), self.n);
        debug_assert_eq!(perm.len(), self.n);
        let r = self.order as u64;
        let mut out = Self::zero(self.n, self.order);
        for (m, c) in &self.terms {
            let mut exps = vec![0; self.n];
            let mut power = 0u64;
            for (k, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    exps[perm[k]] += e;
                    power += e as u64 * root_powers[k] as u64;
                }
            }
            let power = power % r;
            let coeff = if power == 0 { c.clone() } else { c * &CycElement::xi_pow(self.order, power as i64) };
            out.add_term(Monomial(exps), coeff);
        }
        out
    }

    /// Exact quotient `self / q` by graded-lex long division, `None` when `q` does not divide.
    pub fn divide_exact(&self, q: &Self) -> Result<Option<Self>> {
        self.check_compatible(q)?;
        let Some((lm, lc)) = q.leading_term() else {
            return Err(Error::DivisionByZero);
        };
        let lc_inv = lc.inv()?;
        let mut rem = self.clone();
        let mut quot = Self::zero(self.n, self.order);
        while let Some((m, c)) = rem.leading_term() {
            if !lm.divides(m) {
                return Ok(None);
            }
            let tm = lm.quotient_of(m);
            let tc = c * &lc_inv;
            for (qm, qc) in &q.terms {
                rem.add_term(qm.mul(&tm), -(qc * &tc));
            }
            quot.add_term(tm, tc);
        }
        Ok(Some(quot))
    }

    /// The scalar c with `self = c · other`, if one exists. `other` must be nonzero.
    pub fn ratio_to(&self, other: &Self) -> Option<CycElement> {
        let (m, lc) = other.leading_term()?;
        let c = self.coeff(m).checked_div(lc).ok()?;
        (other.scale(&c) == *self).then_some(c)
    }

    pub fn evaluate(&self, point: &[CycElement]) -> Result<CycElement> {
        if point.len() != self.n {
            return Err(Error::ArityMismatch(self.n, point.len()));
        }
        let mut acc = CycElement::zero(self.order);
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (k, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    t = &t * &point[k].pow(e);
                }
            }
            acc = &acc + &t;
        }
        Ok(acc)
    }
}

macro_rules! forward_poly_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&SparsePoly> for &SparsePoly {
            type Output = SparsePoly;
            fn $method(self, rhs: &SparsePoly) -> SparsePoly {
                self.$checked(rhs).expect("incompatible polynomial operands")
            }
        }
        impl $trait<SparsePoly> for SparsePoly {
            type Output = SparsePoly;
            fn $method(self, rhs: SparsePoly) -> SparsePoly {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_poly_binop!(Add, add, try_add);
forward_poly_binop!(Sub, sub, try_sub);
forward_poly_binop!(Mul, mul, mul_unbounded);

impl SparsePoly {
    fn mul_unbounded(&self, other: &Self) -> Result<Self> {
        self.mul_bounded(other, u32::MAX)
    }
}

impl Neg for &SparsePoly {
    type Output = SparsePoly;
    fn neg(self) -> SparsePoly {
        SparsePoly {
            n: self.n,
            order: self.order,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl fmt::Display for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let vars: Vec<String> = m
                .0
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| if e == 1 { format!("x{}", i + 1) } else { format!("x{}^{}", i + 1, e) })
                .collect();
            let coeff = c.to_string();
            let simple = c.coeffs().iter().filter(|q| !num_traits::Zero::is_zero(*q)).count() == 1;
            if vars.is_empty() {
                write!(f, "{}", if simple { coeff } else { format!("({coeff})") })?;
            } else if c.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else if simple {
                write!(f, "{}*{}", coeff, vars.join("*"))?;
            } else {
                write!(f, "({})*{}", coeff, vars.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SparsePoly[n={}, r={}]({})", self.n, self.order, self)
    }
}

#[derive(Serialize)]
struct TermJson<'a> {
    exps: &'a [u32],
    coeff: &'a CycElement,
}

/// `{"n": …, "terms": [{"exps": […], "coeff": …}, …]}` with terms in decreasing
/// graded-lex order (leading term first).
impl Serialize for SparsePoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let terms: Vec<TermJson<'_>> =
            self.terms.iter().rev().map(|(m, c)| TermJson { exps: &m.0, coeff: c }).collect();
        let mut st = serializer.serialize_struct("SparsePoly", 2)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("terms", &terms)?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c(r: u32, v: i64) -> CycElement {
        CycElement::from_int(r, v)
    }

    fn x(n: usize, r: u32, i: usize) -> SparsePoly {
        SparsePoly::var(n, r, i)
    }

    #[test]
    fn difference_of_squares() {
        let (x1, x2) = (x(2, 1, 0), x(2, 1, 1));
        let p = &(&x1 - &x2) * &(&x1 + &x2);
        assert_eq!(p, &(&x1 * &x1) - &(&x2 * &x2));
        assert_eq!(&p + &SparsePoly::zero(2, 1), p);
    }

    #[test]
    fn square_with_root_of_unity() {
        // (x1 + ξ x2)² = x1² + 2ξ x1x2 + ξ² x2², coefficients written out by hand
        let r = 3;
        let xi = CycElement::xi(r);
        let p = &x(2, r, 0) + &x(2, r, 1).scale(&xi);
        let expected = SparsePoly::from_terms(
            2,
            r,
            vec![
                (vec![2, 0], c(r, 1)),
                (vec![1, 1], xi.scale(&Rational::from_integer(2.into()))),
                (vec![0, 2], CycElement::xi_pow(r, 2)),
            ],
        );
        assert_eq!(&p * &p, expected);
    }

    #[test]
    fn derivatives() {
        let x1 = x(2, 1, 0);
        let cube = x1.pow(3);
        assert_eq!(cube.partial_derivative(0).unwrap(), x1.pow(2).scale(&c(1, 3)));
        assert!(x1.partial_derivative(1).unwrap().is_zero());
        let vdm = &x1 - &x(2, 1, 1);
        assert_eq!(vdm.partial_derivative(0).unwrap(), SparsePoly::one(2, 1));
        assert_eq!(vdm.partial_derivative(2), Err(Error::IndexOutOfRange { index: 2, len: 2 }));
    }

    #[test]
    fn substitution() {
        let r = 4;
        let p = x(2, r, 0);
        let ones = vec![CycElement::one(r); 2];
        assert_eq!(p.substitute_scaled_permutation(&ones, &[0, 1]).unwrap(), p);
        let scaled = p.substitute_scaled_permutation(&[CycElement::xi(r), CycElement::one(r)], &[0, 1]).unwrap();
        assert_eq!(scaled, p.scale(&CycElement::xi(r)));
        let q = SparsePoly::from_terms(2, r, vec![(vec![1, 2], c(r, 1))]);
        let swapped = q.substitute_scaled_permutation(&ones, &[1, 0]).unwrap();
        assert_eq!(swapped, SparsePoly::from_terms(2, r, vec![(vec![2, 1], c(r, 1))]));
        assert_eq!(q.substitute_scaled_permutation(&ones[..1], &[0, 1]), Err(Error::ArityMismatch(2, 1)));
    }

    #[test]
    fn root_power_substitution_matches_general() {
        let r = 3;
        let p = SparsePoly::from_terms(3, r, vec![(vec![2, 1, 0], c(r, 5)), (vec![0, 1, 4], c(r, -2))]);
        let scalars: Vec<CycElement> = [2u32, 0, 1].iter().map(|&k| CycElement::xi_pow(r, k as i64)).collect();
        assert_eq!(
            p.substitute_root_powers(&[2, 0, 1], &[2, 0, 1]),
            p.substitute_scaled_permutation(&scalars, &[2, 0, 1]).unwrap()
        );
    }

    #[test]
    fn exact_division() {
        let (x1, x2) = (x(2, 1, 0), x(2, 1, 1));
        let num = &(&x1 * &x1) - &(&x2 * &x2);
        assert_eq!(num.divide_exact(&(&x1 - &x2)).unwrap(), Some(&x1 + &x2));
        assert_eq!(x1.divide_exact(&x2).unwrap(), None);
        assert_eq!(x1.divide_exact(&SparsePoly::zero(2, 1)), Err(Error::DivisionByZero));
    }

    #[test]
    fn evaluation() {
        let vdm = &x(2, 1, 0) - &x(2, 1, 1);
        assert_eq!(vdm.evaluate(&[c(1, 2), c(1, 1)]).unwrap(), c(1, 1));
        let p = &(&x(2, 1, 0) * &x(2, 1, 1)) + &SparsePoly::constant(2, c(1, 7));
        assert_eq!(p.evaluate(&[c(1, 0), c(1, 0)]).unwrap(), c(1, 7));
        let r = 3;
        let q = &x(2, r, 0) * &x(2, r, 1);
        assert!(q.evaluate(&[CycElement::xi(r), CycElement::xi_pow(r, 2)]).unwrap().is_one());
        assert_eq!(q.evaluate(&[c(r, 1)]), Err(Error::ArityMismatch(2, 1)));
    }

    #[test]
    fn degree_guard() {
        let p = x(1, 1, 0).pow(40);
        assert_eq!(p.try_mul(&p), Err(Error::DegreeBound { degree: 80, bound: DEFAULT_DEGREE_BOUND }));
        assert!(p.mul_bounded(&p, 100).is_ok());
        assert_eq!(x(2, 1, 0).try_add(&x(3, 1, 0)), Err(Error::ArityMismatch(2, 3)));
    }

    #[test]
    fn json_terms_leading_first() {
        let p = SparsePoly::from_terms(2, 1, vec![(vec![0, 0], c(1, 1)), (vec![1, 0], c(1, -1))]);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(
            s,
            r#"{"n":2,"terms":[{"exps":[1,0],"coeff":{"r":1,"coeffs":[["-1","1"]]}},{"exps":[0,0],"coeff":{"r":1,"coeffs":[["1","1"]]}}]}"#
        );
    }

    #[test]
    fn grlex_order() {
        let a = Monomial::new(vec![0, 2]);
        let b = Monomial::new(vec![1, 0]);
        let c = Monomial::new(vec![1, 1]);
        let d = Monomial::new(vec![2, 0]);
        assert!(b < a && a < c && c < d);
    }

    fn arb_poly() -> impl Strategy<Value = SparsePoly> {
        let r = 3;
        proptest::collection::vec((proptest::collection::vec(0u32..3, 2), -4i64..5, 0i64..3), 0..5).prop_map(
            move |terms| {
                SparsePoly::from_terms(
                    2,
                    r,
                    terms.into_iter().map(|(e, a, b)| {
                        (e, CycElement::new(r, vec![Rational::from_integer(a.into()), Rational::from_integer(b.into())]))
                    }),
                )
            },
        )
    }

    proptest! {
        #[test]
        fn ring_axioms(p in arb_poly(), q in arb_poly(), s in arb_poly()) {
            prop_assert_eq!(&(&p * &q) * &s, &p * &(&q * &s));
            prop_assert_eq!(&p * &(&q + &s), &(&p * &q) + &(&p * &s));
            prop_assert_eq!(&p * &q, &q * &p);
        }

        #[test]
        fn derivative_is_derivation(p in arb_poly(), q in arb_poly()) {
            for i in 0..2 {
                let lhs = (&p * &q).partial_derivative(i).unwrap();
                let rhs = &(&p.partial_derivative(i).unwrap() * &q) + &(&p * &q.partial_derivative(i).unwrap());
                prop_assert_eq!(lhs, rhs);
            }
        }

        #[test]
        fn divide_product_recovers_factor(p in arb_poly(), q in arb_poly()) {
            prop_assume!(!q.is_zero());
            prop_assert_eq!((&p * &q).divide_exact(&q).unwrap(), Some(p));
        }
    }
}
