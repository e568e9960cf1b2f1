//! Young symmetrizers, higher Specht polynomials F_T^S and the representations they span.
//!
//! For a standard r-tableau S and an r-tableau T of the same shape λ,
//!
//! ```text
//! F_T^S = ∏_ν  e_{T^ν}( ∏_{cells c of λ^ν} x_{T^ν(c)}^{r·i(S)^ν(c)} ) · ∏_{k ∈ T^ν} x_k^{c(ν)}
//! ```
//!
//! where `e_{T^ν}` is the normalized Young symmetrizer of the ν-th component and the twist
//! exponent `c(ν)` is `ν − 1` by default ([`TwistConvention::NuMinusOne`]) or `ν`
//! ([`TwistConvention::Nu`]).

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact_arith::{rational, CycElement, Rational};
use crate::linalg::Matrix;
use crate::multipoly::{Monomial, SparsePoly};
use crate::tableaux::{enumerate_diagrams, enumerate_standard, hook_product, index_tableau, MultiDiagram, Partition, RTableau};
use crate::wreath::{Group, GroupAlgebraElement, GroupElement};

/// Exponent of the per-component twist `∏_{k∈T^ν} x_k^{c(ν)}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TwistConvention {
    /// c(ν) = ν (1-based component index).
    Nu,
    /// c(ν) = ν − 1, so the shape ((n),∅,…) yields the constant 1.
    #[default]
    NuMinusOne,
}

impl TwistConvention {
    /// Twist exponent for the 0-based component index.
    pub fn exponent(self, component: usize) -> u32 {
        match self {
            TwistConvention::Nu => component as u32 + 1,
            TwistConvention::NuMinusOne => component as u32,
        }
    }
}

impl fmt::Display for TwistConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TwistConvention::Nu => "nu",
            TwistConvention::NuMinusOne => "nu_minus_one",
        })
    }
}

/// A higher Specht polynomial together with the data that produced it.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct SpechtRecord {
    pub shape: MultiDiagram,
    #[serde(rename = "S")]
    pub s: RTableau,
    #[serde(rename = "T")]
    pub t: RTableau,
    pub poly: SparsePoly,
    pub convention: TwistConvention,
}

/// All permutations of `0..n` (one-line, 0-based) fixing every point outside `blocks`
/// and preserving each block setwise.
fn block_permutations(n: usize, blocks: &[Vec<usize>]) -> Vec<(Vec<usize>, i64)> {
    let mut out = vec![((0..n).collect::<Vec<_>>(), 1i64)];
    for block in blocks.iter().filter(|b| b.len() > 1) {
        let mut next = Vec::new();
        for (base, sign) in &out {
            for image in block.iter().copied().permutations(block.len()) {
                let mut p = base.clone();
                for (&from, &to) in block.iter().zip(&image) {
                    p[from] = to;
                }
                let slots: Vec<usize> =
                    image.iter().map(|x| block.iter().position(|y| y == x).expect("block element")).collect();
                let inversions = slots.iter().tuple_combinations().filter(|(a, b)| a > b).count();
                next.push((p, if inversions % 2 == 0 { *sign } else { -*sign }));
            }
        }
        out = next;
    }
    out
}

/// The normalized Young symmetrizer `(1/α) Σ_{σ∈R(T), τ∈C(T)} sgn(τ) τσ` of one component,
/// embedded in the group algebra of G(r,n) with zero twists. `rows` holds entries 1..n.
pub fn young_symmetrizer(rows: &[Vec<usize>], r: u32, n: usize) -> Result<GroupAlgebraElement> {
    let row_blocks: Vec<Vec<usize>> = rows.iter().map(|row| row.iter().map(|e| e - 1).collect()).collect();
    let width = rows.first().map_or(0, Vec::len);
    let col_blocks: Vec<Vec<usize>> = (0..width)
        .map(|c| rows.iter().filter_map(|row| row.get(c)).map(|e| e - 1).collect())
        .collect();
    if row_blocks.iter().flatten().any(|&e| e >= n) {
        return Err(Error::InvalidInput(format!("tableau entries exceed n={n}")));
    }
    let shape = Partition::new(rows.iter().map(Vec::len).collect())?;
    let alpha = rational(hook_product(&shape) as i64, 1);
    let mut e = GroupAlgebraElement::zero(r, n);
    for (tau, sign) in block_permutations(n, &col_blocks) {
        let tau = GroupElement::from_perm(r, tau)?;
        for (sigma, _) in block_permutations(n, &row_blocks) {
            let sigma = GroupElement::from_perm(r, sigma)?;
            e.add_term(tau.compose(&sigma)?, CycElement::from_int(r, sign));
        }
    }
    Ok(e.scale_rational(&alpha.recip()))
}

/// Builds F_T^S. `s` must be standard; `t` may be any r-tableau of the same shape.
pub fn higher_specht(s: &RTableau, t: &RTableau, convention: TwistConvention) -> Result<SpechtRecord> {
    let shape = s.shape();
    if t.shape() != shape {
        return Err(Error::ShapeMismatch);
    }
    let index = index_tableau(s)?;
    let r = shape.r();
    let n = shape.size();
    let mut poly = SparsePoly::one(n, r);
    for (nu, (t_comp, i_comp)) in t.components().iter().zip(index.components()).enumerate() {
        if t_comp.is_empty() {
            continue;
        }
        let mut exps = vec![0u32; n];
        for (t_row, i_row) in t_comp.iter().zip(i_comp) {
            for (&k, &i) in t_row.iter().zip(i_row) {
                exps[k - 1] = r * i;
            }
        }
        let seed = SparsePoly::monomial(n, Monomial::new(exps), CycElement::one(r));
        let symmetrized = young_symmetrizer(t_comp, r, n)?.apply(&seed)?;
        let c = convention.exponent(nu);
        let mut twist = vec![0u32; n];
        for &k in t_comp.iter().flatten() {
            twist[k - 1] = c;
        }
        poly = (&poly * &symmetrized).mul_monomial(&Monomial::new(twist));
    }
    if poly.is_zero() {
        return Err(Error::ZeroResult { s: s.to_string(), t: t.to_string() });
    }
    Ok(SpechtRecord { shape, s: s.clone(), t: t.clone(), poly, convention })
}

/// Expected total degree of F_T^S: r·Σ i(S) + Σ_ν c(ν)·|λ^ν|.
pub fn expected_degree(s: &RTableau, convention: TwistConvention) -> Result<u32> {
    let shape = s.shape();
    let twist: u32 = shape
        .components()
        .iter()
        .enumerate()
        .map(|(nu, p)| convention.exponent(nu) * p.size() as u32)
        .sum();
    Ok(shape.r() * index_tableau(s)?.total() + twist)
}

/// Coordinates of polynomials in a fixed linearly independent family.
#[derive(Clone, Debug)]
pub struct PolyBasis {
    polys: Vec<SparsePoly>,
    pivots: Vec<Monomial>,
    pivot_inverse: Matrix,
}

impl PolyBasis {
    /// `None` when the polynomials are linearly dependent.
    pub fn new(polys: Vec<SparsePoly>) -> Option<Self> {
        let first = polys.first()?;
        let order = first.order();
        let monomials: Vec<Monomial> = polys
            .iter()
            .flat_map(|p| p.terms().map(|(m, _)| m.clone()))
            .collect::<BTreeSet<_>>()
            .into_iter()
            .rev()
            .collect();
        let rows: Vec<Vec<CycElement>> =
            monomials.iter().map(|m| polys.iter().map(|p| p.coeff(m)).collect()).collect();
        let coeffs = Matrix::from_rows(order, rows);
        let chosen = coeffs.independent_rows();
        if chosen.len() < polys.len() {
            return None;
        }
        let square = Matrix::from_rows(order, chosen.iter().map(|&i| coeffs.row(i).to_vec()).collect());
        let pivot_inverse = square.inverse().ok()?;
        let pivots = chosen.into_iter().map(|i| monomials[i].clone()).collect();
        Some(PolyBasis { polys, pivots, pivot_inverse })
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn polys(&self) -> &[SparsePoly] {
        &self.polys
    }

    /// Coefficients c with `p = Σ c_i · polys[i]`, or `None` if `p` is outside the span.
    pub fn coords(&self, p: &SparsePoly) -> Option<Vec<CycElement>> {
        let rhs: Vec<CycElement> = self.pivots.iter().map(|m| p.coeff(m)).collect();
        let c = self.pivot_inverse.mul_vec(&rhs);
        let recombined = self
            .polys
            .iter()
            .zip(&c)
            .fold(SparsePoly::zero(p.arity(), p.order()), |acc, (b, ci)| &acc + &b.scale(ci));
        (recombined == *p).then_some(c)
    }
}

/// Representation of a group on a span of polynomials, as one matrix per element in the
/// enumeration order of `group`.
fn representation_on(group: &Group, basis: &PolyBasis, label: &str) -> Result<Vec<Matrix>> {
    let f = basis.len();
    let r = group.r();
    group
        .elements()
        .iter()
        .map(|g| {
            let mut m = Matrix::zeros(r, f, f);
            for (j, b) in basis.polys().iter().enumerate() {
                let image = g.act(b)?;
                let col = basis.coords(&image).ok_or_else(|| Error::SpanViolation(label.to_string()))?;
                for (i, v) in col.into_iter().enumerate() {
                    m[(i, j)] = v;
                }
            }
            Ok(m)
        })
        .collect()
}

/// Class function on the group, stored in enumeration order.
#[derive(Clone, Debug)]
pub struct Character {
    group: Arc<Group>,
    values: Vec<CycElement>,
}

impl PartialEq for Character {
    fn eq(&self, other: &Self) -> bool {
        (self.group.r(), self.group.n()) == (other.group.r(), other.group.n()) && self.values == other.values
    }
}

impl Eq for Character {}

impl Character {
    pub fn from_matrices(group: Arc<Group>, matrices: &[Matrix]) -> Self {
        let values = matrices.iter().map(Matrix::trace).collect();
        Character { group, values }
    }

    pub fn values(&self) -> &[CycElement] {
        &self.values
    }

    pub fn value(&self, g: &GroupElement) -> Option<&CycElement> {
        self.group.index_of(g).map(|i| &self.values[i])
    }

    /// (1/|G|) Σ_g χ(g)·ψ(g⁻¹).
    pub fn inner_product(&self, other: &Character) -> CycElement {
        let r = self.group.r();
        let sum = self.group.elements().iter().enumerate().fold(CycElement::zero(r), |acc, (i, g)| {
            let j = self.group.index_of(&g.inverse()).expect("group is closed under inverses");
            &acc + &(&self.values[i] * &other.values[j])
        });
        sum.scale(&rational(1, self.group.size() as i64))
    }
}

/// V_S(λ) with its basis {F_T^S : T ∈ STab(λ)} and representation matrices.
#[derive(Clone, Debug)]
pub struct SpechtModule {
    group: Arc<Group>,
    shape: MultiDiagram,
    s: RTableau,
    convention: TwistConvention,
    records: Vec<SpechtRecord>,
    basis: PolyBasis,
    rep: Vec<Matrix>,
}

impl SpechtModule {
    pub fn build(group: Arc<Group>, s: &RTableau, convention: TwistConvention) -> Result<Self> {
        let shape = s.shape();
        if shape.r() != group.r() || shape.size() != group.n() {
            return Err(Error::ParameterMismatch(shape.r(), shape.size(), group.r(), group.n()));
        }
        let records = enumerate_standard(&shape)
            .iter()
            .map(|t| higher_specht(s, t, convention))
            .collect::<Result<Vec<_>>>()?;
        let basis = PolyBasis::new(records.iter().map(|rec| rec.poly.clone()).collect())
            .ok_or_else(|| Error::SingularBasis(shape.to_string()))?;
        let rep = representation_on(&group, &basis, &shape.to_string())?;
        Ok(SpechtModule { group, shape, s: s.clone(), convention, records, basis, rep })
    }

    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }

    pub fn shape(&self) -> &MultiDiagram {
        &self.shape
    }

    pub fn s(&self) -> &RTableau {
        &self.s
    }

    pub fn convention(&self) -> TwistConvention {
        self.convention
    }

    pub fn dim(&self) -> usize {
        self.records.len()
    }

    /// F_T^S for T running over STab(λ) in enumeration order.
    pub fn records(&self) -> &[SpechtRecord] {
        &self.records
    }

    pub fn basis(&self) -> &PolyBasis {
        &self.basis
    }

    /// ρ(g), with `g·F_j = Σ_i ρ(g)_{ij} F_i`.
    pub fn rep_matrix(&self, g: &GroupElement) -> Option<&Matrix> {
        self.group.index_of(g).map(|i| &self.rep[i])
    }

    pub fn rep_matrices(&self) -> &[Matrix] {
        &self.rep
    }

    pub fn character(&self) -> Character {
        Character::from_matrices(self.group.clone(), &self.rep)
    }

    /// Checks ρ(gh) = ρ(g)ρ(h) for every pair.
    pub fn is_homomorphism(&self) -> bool {
        let els = self.group.elements();
        els.iter().enumerate().all(|(i, g)| {
            els.iter().enumerate().all(|(j, h)| {
                let gh = self.group.index_of(&g.compose(h).expect("same group")).expect("closed");
                self.rep[i].checked_mul(&self.rep[j]).map(|m| m == self.rep[gh]).unwrap_or(false)
            })
        })
    }
}

/// Representation of the group on the span of arbitrary polynomials, if they are
/// independent and the span is stable.
pub fn span_representation(group: &Group, polys: Vec<SparsePoly>, label: &str) -> Result<(PolyBasis, Vec<Matrix>)> {
    let basis = PolyBasis::new(polys).ok_or_else(|| Error::SingularBasis(label.to_string()))?;
    let rep = representation_on(group, &basis, label)?;
    Ok((basis, rep))
}

/// V_{S₁} ≅ V_{S₂}, decided by comparing characters exactly.
pub fn shape_isomorphism_check(group: &Arc<Group>, s1: &RTableau, s2: &RTableau, convention: TwistConvention) -> Result<bool> {
    let a = SpechtModule::build(group.clone(), s1, convention)?;
    let b = SpechtModule::build(group.clone(), s2, convention)?;
    Ok(a.character() == b.character())
}

/// Every F_T^S with S, T ∈ STab(λ), λ ∈ P_{r,n}.
pub fn all_records(r: u32, n: usize, convention: TwistConvention) -> Result<Vec<SpechtRecord>> {
    let mut out = Vec::new();
    for shape in enumerate_diagrams(r, n) {
        let tabs = enumerate_standard(&shape);
        for s in &tabs {
            for t in &tabs {
                out.push(higher_specht(s, t, convention)?);
            }
        }
    }
    Ok(out)
}

/// The matrix (g·F_j)(P) with rows indexed by group elements and columns by the F_T^S.
pub fn basis_matrix_at(group: &Group, records: &[SpechtRecord], point: &[CycElement]) -> Result<Matrix> {
    let rows = group
        .elements()
        .iter()
        .map(|g| records.iter().map(|rec| g.act(&rec.poly)?.evaluate(point)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    Ok(Matrix::from_rows(group.r(), rows))
}

/// Nonzero determinant witnessing that the F_T^S are a basis over the invariants.
#[derive(Clone, Debug, Serialize)]
pub struct FreeBasisCertificate {
    pub determinant: CycElement,
    pub point: Vec<CycElement>,
    pub attempts: usize,
}

fn first_primes(count: usize) -> Vec<i64> {
    let mut primes = Vec::new();
    let mut candidate = 2i64;
    while primes.len() < count {
        if primes.iter().all(|p| candidate % p != 0) {
            primes.push(candidate);
        }
        candidate += 1;
    }
    primes
}

/// Evaluates det((g·F_j)(P)) at P = (2, 3, 5, …); on a zero determinant retries at up to
/// `retries` pseudo-random rational points drawn from `seed`.
pub fn free_basis_certificate(group: &Group, convention: TwistConvention, seed: u64, retries: usize) -> Result<FreeBasisCertificate> {
    let r = group.r();
    let n = group.n();
    let records = all_records(r, n, convention)?;
    if records.len() != group.size() {
        return Err(Error::SingularBasis(format!("{} polynomials for a group of order {}", records.len(), group.size())));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut point: Vec<CycElement> = first_primes(n).into_iter().map(|p| CycElement::from_int(r, p)).collect();
    for attempt in 1..=retries + 1 {
        let det = basis_matrix_at(group, &records, &point)?.determinant()?;
        if !det.is_zero() {
            return Ok(FreeBasisCertificate { determinant: det, point, attempts: attempt });
        }
        point = (0..n)
            .map(|_| CycElement::from_rational(r, rational(rng.gen_range(1..200), rng.gen_range(1..20))))
            .collect();
    }
    Err(Error::ZeroDeterminant { attempts: retries + 1 })
}

/// Rational helper for callers building points by hand.
pub fn rational_point(r: u32, values: &[(i64, i64)]) -> Vec<CycElement> {
    values.iter().map(|&(a, b)| CycElement::from_rational(r, Rational::new(a.into(), b.into()))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableaux::dimension;
    use crate::wreath::DEFAULT_GROUP_CAP;

    fn tab(v: Vec<Vec<Vec<usize>>>) -> RTableau {
        RTableau::new(v).unwrap()
    }

    fn group(r: u32, n: usize) -> Arc<Group> {
        Arc::new(Group::new(r, n, DEFAULT_GROUP_CAP).unwrap())
    }

    fn perm_term(r: u32, perm: Vec<usize>, c: Rational) -> GroupAlgebraElement {
        GroupAlgebraElement::from_element(GroupElement::from_perm(r, perm).unwrap(), CycElement::from_rational(r, c))
    }

    #[test]
    fn symmetrizer_examples() {
        let single = young_symmetrizer(&[vec![1]], 1, 1).unwrap();
        assert_eq!(single, GroupAlgebraElement::one(1, 1));
        let half = rational(1, 2);
        let row = young_symmetrizer(&[vec![1, 2]], 1, 2).unwrap();
        assert_eq!(row, perm_term(1, vec![0, 1], half.clone()).add(&perm_term(1, vec![1, 0], half.clone())).unwrap());
        let col = young_symmetrizer(&[vec![1], vec![2]], 1, 2).unwrap();
        assert_eq!(col, perm_term(1, vec![0, 1], half.clone()).add(&perm_term(1, vec![1, 0], -half)).unwrap());
    }

    #[test]
    fn normalized_symmetrizers_are_idempotent() {
        for n in 1..=4usize {
            for shape in crate::tableaux::partitions(n) {
                let md = MultiDiagram::new(vec![shape]);
                for t in enumerate_standard(&md) {
                    let e = young_symmetrizer(&t.components()[0], 1, n).unwrap();
                    assert_eq!(e.mul(&e).unwrap(), e, "{t}");
                }
            }
        }
    }

    #[test]
    fn specht_examples() {
        let c = TwistConvention::NuMinusOne;
        let row = tab(vec![vec![vec![1, 2]]]);
        assert_eq!(higher_specht(&row, &row, c).unwrap().poly, SparsePoly::one(2, 1));
        // column 1/2: i(2) = 1, seed x_2, symmetrizer (id − (12))/2
        let col = tab(vec![vec![vec![1], vec![2]]]);
        let f = higher_specht(&col, &col, c).unwrap().poly;
        let expected = (&SparsePoly::var(2, 1, 1) - &SparsePoly::var(2, 1, 0)).scale_rational(&rational(1, 2));
        assert_eq!(f, expected);
        let twisted = tab(vec![vec![], vec![vec![1]]]);
        assert_eq!(higher_specht(&twisted, &twisted, c).unwrap().poly, SparsePoly::var(1, 2, 0));
        // literal convention puts x_1 on component 1 as well
        assert_eq!(higher_specht(&row, &row, TwistConvention::Nu).unwrap().poly, &SparsePoly::var(2, 1, 0) * &SparsePoly::var(2, 1, 1));
        assert_eq!(higher_specht(&row, &col, c), Err(Error::ShapeMismatch));
        let bad = tab(vec![vec![vec![2, 1]]]);
        assert!(matches!(higher_specht(&bad, &bad, c), Err(Error::NotStandard(_))));
    }

    #[test]
    fn degrees_and_homogeneity() {
        for (r, n) in [(1, 3), (2, 2), (2, 3), (3, 2)] {
            for conv in [TwistConvention::Nu, TwistConvention::NuMinusOne] {
                let recs = all_records(r, n, conv).unwrap();
                assert_eq!(recs.len(), group(r, n).size(), "regular count");
                for rec in recs {
                    assert!(rec.poly.is_homogeneous());
                    assert_eq!(rec.poly.total_degree(), Some(expected_degree(&rec.s, conv).unwrap()));
                }
            }
        }
    }

    #[test]
    fn fake_degrees_match_coinvariant_hilbert_series() {
        // Hilbert series of the coinvariant algebra: ∏_{i=1}^n (1 + q + … + q^{ri−1}).
        for (r, n) in [(1, 3), (2, 2), (2, 3), (3, 2)] {
            let mut series = vec![1u64];
            for i in 1..=n {
                let factor_len = r as usize * i;
                let mut next = vec![0u64; series.len() + factor_len - 1];
                for (a, &c) in series.iter().enumerate() {
                    for b in 0..factor_len {
                        next[a + b] += c;
                    }
                }
                series = next;
            }
            let mut counts = vec![0u64; series.len()];
            for rec in all_records(r, n, TwistConvention::NuMinusOne).unwrap() {
                counts[rec.poly.total_degree().unwrap() as usize] += 1;
            }
            assert_eq!(counts, series, "(r,n)=({r},{n})");
        }
    }

    #[test]
    fn trivial_and_sign_modules() {
        let g = group(1, 2);
        let m = SpechtModule::build(g.clone(), &tab(vec![vec![vec![1, 2]]]), TwistConvention::NuMinusOne).unwrap();
        assert!(m.rep_matrices().iter().all(|mat| *mat == Matrix::identity(1, 1)));
        let sign = SpechtModule::build(g.clone(), &tab(vec![vec![vec![1], vec![2]]]), TwistConvention::NuMinusOne).unwrap();
        let swap = GroupElement::from_perm(1, vec![1, 0]).unwrap();
        assert_eq!(sign.rep_matrix(&swap).unwrap()[(0, 0)], CycElement::from_int(1, -1));
    }

    #[test]
    fn modules_are_homomorphisms() {
        for (r, n) in [(1, 3), (2, 2), (3, 2), (2, 3)] {
            let g = group(r, n);
            for shape in enumerate_diagrams(r, n) {
                for s in enumerate_standard(&shape) {
                    let m = SpechtModule::build(g.clone(), &s, TwistConvention::NuMinusOne).unwrap();
                    assert_eq!(m.dim(), dimension(&shape));
                    assert!(m.is_homomorphism(), "{shape} S={s}");
                    assert_eq!(m.character().value(&g.identity()).unwrap(), &CycElement::from_int(r, m.dim() as i64));
                }
            }
        }
    }

    #[test]
    fn literal_twist_convention_also_gives_modules() {
        let g = group(2, 2);
        for shape in enumerate_diagrams(2, 2) {
            let s = &enumerate_standard(&shape)[0];
            let m = SpechtModule::build(g.clone(), s, TwistConvention::Nu).unwrap();
            assert!(m.is_homomorphism());
        }
    }

    #[test]
    fn character_orthogonality() {
        for (r, n) in [(1, 3), (2, 2), (3, 2), (2, 3)] {
            let g = group(r, n);
            let chars: Vec<Character> = enumerate_diagrams(r, n)
                .iter()
                .map(|shape| {
                    let s = &enumerate_standard(shape)[0];
                    SpechtModule::build(g.clone(), s, TwistConvention::NuMinusOne).unwrap().character()
                })
                .collect();
            for (a, ca) in chars.iter().enumerate() {
                for (b, cb) in chars.iter().enumerate() {
                    let expected = CycElement::from_int(r, (a == b) as i64);
                    assert_eq!(ca.inner_product(cb), expected, "(r,n)=({r},{n}) pair ({a},{b})");
                }
            }
        }
    }

    #[test]
    fn orthogonality_oracle_for_two_dimensional_module() {
        let g = group(2, 2);
        let s = tab(vec![vec![vec![1]], vec![vec![2]]]);
        let chi = SpechtModule::build(g.clone(), &s, TwistConvention::NuMinusOne).unwrap().character();
        let norm = chi.values().iter().fold(CycElement::zero(2), |acc, v| &acc + &(v * &v.conj()));
        assert_eq!(norm, CycElement::from_int(2, 8));
    }

    #[test]
    fn shape_isomorphism() {
        let g = group(2, 2);
        let c = TwistConvention::NuMinusOne;
        let s1 = tab(vec![vec![vec![1]], vec![vec![2]]]);
        let s2 = tab(vec![vec![vec![2]], vec![vec![1]]]);
        assert!(shape_isomorphism_check(&g, &s1, &s2, c).unwrap());
        assert!(shape_isomorphism_check(&g, &s1, &s1, c).unwrap());
        let a = tab(vec![vec![vec![1, 2]], vec![]]);
        let b = tab(vec![vec![], vec![vec![1, 2]]]);
        assert!(!shape_isomorphism_check(&g, &a, &b, c).unwrap());
    }

    #[test]
    fn free_basis_small() {
        let g = group(1, 2);
        let cert = free_basis_certificate(&g, TwistConvention::NuMinusOne, 0, 3).unwrap();
        // rows id, swap; columns F = 1, (x2 − x1)/2 at P = (2,3): [[1, 1/2], [1, −1/2]], det = −1
        assert_eq!(cert.determinant, CycElement::from_int(1, -1));
        assert_eq!(cert.attempts, 1);
        let cert = free_basis_certificate(&group(2, 2), TwistConvention::NuMinusOne, 0, 3).unwrap();
        assert!(!cert.determinant.is_zero());
    }

    #[test]
    fn free_basis_degenerate_point() {
        let g = group(2, 2);
        let recs = all_records(2, 2, TwistConvention::NuMinusOne).unwrap();
        let on_discriminant = rational_point(2, &[(3, 1), (3, 1)]);
        assert!(basis_matrix_at(&g, &recs, &on_discriminant).unwrap().determinant().unwrap().is_zero());
    }
}
