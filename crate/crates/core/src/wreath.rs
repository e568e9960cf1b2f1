//! The generalized symmetric group G(r,n) = (Z/rZ)^n ⋊ S_n and its group algebra.
//!
//! An element `(ξ^{i_1},…,ξ^{i_n}; σ)` is stored as `twists = [i_1,…,i_n]` and `perm`, the
//! one-line form of σ with `perm[k] = σ(k)` (0-based internally, 1-based in JSON).
//!
//! Product:  `(i; σ)(j; π) = (i_k + j_{σ⁻¹(k)}; σ∘π)`.
//! Action:   `(i; σ)·f = f(ξ^{i_{σ(1)}} x_{σ(1)}, …, ξ^{i_{σ(n)}} x_{σ(n)})`, i.e. the
//! substitution `x_k ← ξ^{i_{σ(k)}} x_{σ(k)}`. With these two readings the action is a
//! left action; `tests::action_is_left_action` checks it over whole groups.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exact_arith::{CycElement, Rational};
use crate::multipoly::SparsePoly;

/// Default bound on |G| for enumeration.
pub const DEFAULT_GROUP_CAP: u128 = 10_000;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    order: u32,
    twists: Vec<u32>,
    perm: Vec<usize>,
}

impl GroupElement {
    /// Validates and reduces the twists modulo r; `perm` must be a 0-based bijection.
    pub fn new(order: u32, twists: Vec<u32>, perm: Vec<usize>) -> Result<Self> {
        if twists.len() != perm.len() {
            return Err(Error::ArityMismatch(twists.len(), perm.len()));
        }
        let n = perm.len();
        let mut seen = vec![false; n];
        for &p in &perm {
            if p >= n || seen[p] {
                return Err(Error::InvalidInput(format!("not a permutation: {perm:?}")));
            }
            seen[p] = true;
        }
        Ok(GroupElement { order, twists: twists.into_iter().map(|t| t % order).collect(), perm })
    }

    pub fn identity(order: u32, n: usize) -> Self {
        GroupElement { order, twists: vec![0; n], perm: (0..n).collect() }
    }

    /// A pure permutation, embedded with zero twists.
    pub fn from_perm(order: u32, perm: Vec<usize>) -> Result<Self> {
        Self::new(order, vec![0; perm.len()], perm)
    }

    /// Pure diagonal element `(ξ^{i_1},…,ξ^{i_n}; id)`.
    pub fn diagonal(order: u32, twists: Vec<u32>) -> Self {
        let n = twists.len();
        GroupElement { order, twists: twists.into_iter().map(|t| t % order).collect(), perm: (0..n).collect() }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn arity(&self) -> usize {
        self.perm.len()
    }

    pub fn twists(&self) -> &[u32] {
        &self.twists
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn is_identity(&self) -> bool {
        self.twists.iter().all(|&t| t == 0) && self.perm.iter().enumerate().all(|(i, &p)| i == p)
    }

    fn check_params(&self, order: u32, n: usize) -> Result<()> {
        if self.order != order || self.arity() != n {
            return Err(Error::ParameterMismatch(self.order, self.arity(), order, n));
        }
        Ok(())
    }

    fn perm_inverse(&self) -> Vec<usize> {
        let mut inv = vec![0; self.perm.len()];
        for (k, &p) in self.perm.iter().enumerate() {
            inv[p] = k;
        }
        inv
    }

    pub fn compose(&self, other: &GroupElement) -> Result<GroupElement> {
        other.check_params(self.order, self.arity())?;
        let sigma_inv = self.perm_inverse();
        let twists = (0..self.arity())
            .map(|k| (self.twists[k] + other.twists[sigma_inv[k]]) % self.order)
            .collect();
        let perm = other.perm.iter().map(|&p| self.perm[p]).collect();
        Ok(GroupElement { order: self.order, twists, perm })
    }

    pub fn inverse(&self) -> GroupElement {
        let perm = self.perm_inverse();
        let twists = (0..self.arity())
            .map(|m| (self.order - self.twists[self.perm[m]]) % self.order)
            .collect();
        GroupElement { order: self.order, twists, perm }
    }

    /// Sign of the underlying permutation.
    pub fn perm_sign(&self) -> i64 {
        let n = self.perm.len();
        let mut seen = vec![false; n];
        let mut sign = 1;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut k = start;
            while !seen[k] {
                seen[k] = true;
                k = self.perm[k];
                len += 1;
            }
            if len % 2 == 0 {
                sign = -sign;
            }
        }
        sign
    }

    /// The left action on a polynomial.
    pub fn act(&self, p: &SparsePoly) -> Result<SparsePoly> {
        if p.order() != self.order || p.arity() != self.arity() {
            return Err(Error::ParameterMismatch(self.order, self.arity(), p.order(), p.arity()));
        }
        // x_k ← ξ^{i_{σ(k)}} x_{σ(k)}
        let powers: Vec<u32> = self.perm.iter().map(|&s| self.twists[s]).collect();
        Ok(p.substitute_root_powers(&powers, &self.perm))
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}; [{}])",
            self.twists.iter().join(","),
            self.perm.iter().map(|p| p + 1).join(",")
        )
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for GroupElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let perm: Vec<usize> = self.perm.iter().map(|p| p + 1).collect();
        let mut st = serializer.serialize_struct("GroupElement", 2)?;
        st.serialize_field("twists", &self.twists)?;
        st.serialize_field("perm", &perm)?;
        st.end()
    }
}

/// r^n · n!, or `None` on overflow.
pub fn group_order(r: u32, n: usize) -> Option<u128> {
    let mut acc: u128 = 1;
    for k in 1..=n as u128 {
        acc = acc.checked_mul(k)?.checked_mul(r as u128)?;
    }
    Some(acc)
}

/// All elements of G(r,n), ordered lexicographically by (twists, one-line permutation).
pub fn enumerate_group(r: u32, n: usize, cap: u128) -> Result<Vec<GroupElement>> {
    let size = group_order(r, n).unwrap_or(u128::MAX);
    if size > cap {
        return Err(Error::CapExceeded { what: "group order", value: size, cap });
    }
    let perms: Vec<Vec<usize>> = (0..n).permutations(n).collect();
    let twist_tuples: Vec<Vec<u32>> = if n == 0 {
        vec![Vec::new()]
    } else {
        (0..n).map(|_| 0..r).multi_cartesian_product().collect()
    };
    Ok(twist_tuples
        .into_iter()
        .flat_map(|t| perms.iter().map(move |p| GroupElement { order: r, twists: t.clone(), perm: p.clone() }))
        .collect())
}

/// An enumerated G(r,n) with an index for lookups.
#[derive(Clone, Debug)]
pub struct Group {
    order: u32,
    n: usize,
    elements: Vec<GroupElement>,
    index: HashMap<GroupElement, usize>,
}

impl Group {
    pub fn new(r: u32, n: usize, cap: u128) -> Result<Self> {
        let elements = enumerate_group(r, n, cap)?;
        let index = elements.iter().enumerate().map(|(i, g)| (g.clone(), i)).collect();
        Ok(Group { order: r, n, elements, index })
    }

    pub fn r(&self) -> u32 {
        self.order
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn index_of(&self, g: &GroupElement) -> Option<usize> {
        self.index.get(g).copied()
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement::identity(self.order, self.n)
    }
}

/// Formal Q(ξ_r)-linear combination of group elements.
#[derive(Clone, PartialEq, Eq)]
pub struct GroupAlgebraElement {
    order: u32,
    n: usize,
    terms: BTreeMap<GroupElement, CycElement>,
}

type IntegralTerms<'a> = Vec<(&'a GroupElement, Vec<(usize, BigInt)>)>;

/// Common denominator and the nonzero integer numerator coefficients of every term.
fn integral_terms(x: &GroupAlgebraElement) -> (BigInt, IntegralTerms<'_>) {
    let den = x.terms.values().fold(BigInt::one(), |acc, c| acc.lcm(&c.denominator()));
    let terms = x
        .terms
        .iter()
        .map(|(g, c)| (g, c.numerators(&den).into_iter().enumerate().filter(|(_, v)| !v.is_zero()).collect()))
        .collect();
    (den, terms)
}

impl GroupAlgebraElement {
    pub fn zero(order: u32, n: usize) -> Self {
        GroupAlgebraElement { order, n, terms: BTreeMap::new() }
    }

    pub fn one(order: u32, n: usize) -> Self {
        Self::from_element(GroupElement::identity(order, n), CycElement::one(order))
    }

    pub fn from_element(g: GroupElement, c: CycElement) -> Self {
        let mut a = Self::zero(g.order, g.arity());
        a.add_term(g, c);
        a
    }

    pub fn from_terms(order: u32, n: usize, terms: impl IntoIterator<Item = (GroupElement, CycElement)>) -> Self {
        let mut a = Self::zero(order, n);
        for (g, c) in terms {
            a.add_term(g, c);
        }
        a
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn arity(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn support_size(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&GroupElement, &CycElement)> {
        self.terms.iter()
    }

    pub fn coeff(&self, g: &GroupElement) -> CycElement {
        self.terms.get(g).cloned().unwrap_or_else(|| CycElement::zero(self.order))
    }

    pub fn add_term(&mut self, g: GroupElement, c: CycElement) {
        assert_eq!((g.order, g.arity()), (self.order, self.n), "group parameters");
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&g) {
            Some(existing) => {
                let sum = &*existing + &c;
                if sum.is_zero() {
                    self.terms.remove(&g);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(g, c);
            }
        }
    }

    fn check_params(&self, other: &Self) -> Result<()> {
        if (self.order, self.n) != (other.order, other.n) {
            return Err(Error::ParameterMismatch(self.order, self.n, other.order, other.n));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_params(other)?;
        let mut out = self.clone();
        for (g, c) in &other.terms {
            out.add_term(g.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&CycElement::from_int(self.order, -1)))
    }

    pub fn scale(&self, c: &CycElement) -> Self {
        let mut out = Self::zero(self.order, self.n);
        for (g, v) in &self.terms {
            out.add_term(g.clone(), v * c);
        }
        out
    }

    pub fn scale_rational(&self, q: &Rational) -> Self {
        self.scale(&CycElement::from_rational(self.order, q.clone()))
    }

    /// Convolution product. Coefficients are accumulated as integer polynomials over one
    /// common denominator and reduced modulo Φ_r once per output term.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_params(other)?;
        let (da, a_terms) = integral_terms(self);
        let (db, b_terms) = integral_terms(other);
        let width = 2 * CycElement::zero(self.order).coeffs().len().max(1);
        let mut acc: HashMap<GroupElement, Vec<BigInt>> = HashMap::new();
        for (g, a) in &a_terms {
            for (h, b) in &b_terms {
                let slot = acc.entry(g.compose(h)?).or_insert_with(|| vec![BigInt::zero(); width]);
                for (i, x) in a {
                    for (j, y) in b {
                        slot[i + j] += x * y;
                    }
                }
            }
        }
        let den = da * db;
        let terms = acc
            .into_iter()
            .map(|(g, num)| (g, CycElement::from_numerators(self.order, num, &den)))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        Ok(GroupAlgebraElement { order: self.order, n: self.n, terms })
    }

    /// Linear extension of the group action.
    pub fn apply(&self, p: &SparsePoly) -> Result<SparsePoly> {
        let mut acc = SparsePoly::zero(p.arity(), p.order());
        for (g, c) in &self.terms {
            acc = acc.try_add(&g.act(p)?.scale(c))?;
        }
        if self.terms.is_empty() && (p.order() != self.order || p.arity() != self.n) {
            return Err(Error::ParameterMismatch(self.order, self.n, p.order(), p.arity()));
        }
        Ok(acc)
    }
}

impl fmt::Debug for GroupAlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.terms.iter().map(|(g, c)| format!("({c})·{g}")).collect();
        write!(f, "[{}]", parts.join(" + "))
    }
}

#[derive(Serialize)]
struct AlgebraTermJson<'a> {
    element: &'a GroupElement,
    coeff: &'a CycElement,
}

impl Serialize for GroupAlgebraElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let terms: Vec<AlgebraTermJson<'_>> =
            self.terms.iter().map(|(element, coeff)| AlgebraTermJson { element, coeff }).collect();
        terms.serialize(serializer)
    }
}
