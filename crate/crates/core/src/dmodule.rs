//! The invariant map x ↦ y, its Jacobian Δ, the localization O_U = C[x, Δ⁻¹], the vector
//! fields ∂/∂y_j acting on O_U, and exact checks of invariant operators on higher Specht
//! modules.
//!
//! With A_{ij} = ∂y_j/∂x_i the chain rule gives ∂/∂x = A·∂/∂y, hence
//! ∂/∂y_j = Δ⁻¹ Σ_i adj(A)_{ji} ∂/∂x_i. Everything stays polynomial except for a single
//! power of Δ in the denominator.

use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact_arith::{rational, CycElement};
use crate::idempotents::WedderburnData;
use crate::multipoly::SparsePoly;
use crate::specht::{higher_specht, span_representation, Character, SpechtModule};
use crate::tableaux::{MultiDiagram, RTableau};
use crate::wreath::{Group, GroupElement};

/// Largest n for which the symbolic Jacobian is built.
pub const MAX_SYMBOLIC_N: usize = 4;

/// e_j(x_1^r, …, x_n^r) for 1 ≤ j ≤ n.
pub fn fundamental_invariant(r: u32, n: usize, j: usize) -> SparsePoly {
    let terms = (0..n).combinations(j).map(|subset| {
        let mut e = vec![0; n];
        for k in subset {
            e[k] = r;
        }
        (e, CycElement::one(r))
    });
    SparsePoly::from_terms(n, r, terms.collect::<Vec<_>>())
}

/// Leibniz-formula determinant of a square matrix of polynomials.
fn symbolic_det(m: &[Vec<SparsePoly>], n_vars: usize, r: u32) -> SparsePoly {
    let size = m.len();
    if size == 0 {
        return SparsePoly::one(n_vars, r);
    }
    let mut acc = SparsePoly::zero(n_vars, r);
    for perm in (0..size).permutations(size) {
        let inversions = perm.iter().tuple_combinations().filter(|(a, b)| a > b).count();
        let mut term = SparsePoly::one(n_vars, r);
        for (i, &p) in perm.iter().enumerate() {
            term = &term * &m[i][p];
            if term.is_zero() {
                break;
            }
        }
        acc = if inversions % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

/// c·∏ x_i^{r−1}·∏_{i<j}(x_i^r − x_j^r) with c = 1.
pub fn jacobian_closed_form(r: u32, n: usize) -> SparsePoly {
    let mut p = SparsePoly::one(n, r);
    for i in 0..n {
        p = &p * &SparsePoly::var(n, r, i).pow(r - 1);
    }
    for (i, j) in (0..n).tuple_combinations() {
        let diff = &SparsePoly::var(n, r, i).pow(r) - &SparsePoly::var(n, r, j).pow(r);
        p = &p * &diff;
    }
    p
}

/// Fundamental invariants, their Jacobian matrix, its adjugate and determinant Δ.
#[derive(Clone, Debug)]
pub struct InvariantMap {
    r: u32,
    n: usize,
    y: Vec<SparsePoly>,
    jac: Vec<Vec<SparsePoly>>,
    adj: Vec<Vec<SparsePoly>>,
    delta: SparsePoly,
    delta_partials: Vec<SparsePoly>,
}

impl InvariantMap {
    #[allow(clippy::needless_range_loop)]
    pub fn build(r: u32, n: usize) -> Result<Self> {
        if n > MAX_SYMBOLIC_N {
            return Err(Error::CapExceeded { what: "n for symbolic Jacobian", value: n as u128, cap: MAX_SYMBOLIC_N as u128 });
        }
        let y: Vec<SparsePoly> = (1..=n).map(|j| fundamental_invariant(r, n, j)).collect();
        // jac[i][j] = ∂y_j/∂x_i
        let jac: Vec<Vec<SparsePoly>> = (0..n)
            .map(|i| y.iter().map(|yj| yj.partial_derivative(i)).collect::<Result<Vec<_>>>())
            .collect::<Result<_>>()?;
        let delta = symbolic_det(&jac, n, r);
        // adj[j][i] = (−1)^{i+j} · minor(i, j)
        let mut adj = vec![vec![SparsePoly::zero(n, r); n]; n];
        for i in 0..n {
            for j in 0..n {
                let minor: Vec<Vec<SparsePoly>> = (0..n)
                    .filter(|&a| a != i)
                    .map(|a| (0..n).filter(|&b| b != j).map(|b| jac[a][b].clone()).collect())
                    .collect();
                let det = symbolic_det(&minor, n, r);
                adj[j][i] = if (i + j) % 2 == 0 { det } else { -&det };
            }
        }
        let delta_partials = (0..n).map(|i| delta.partial_derivative(i)).collect::<Result<_>>()?;
        Ok(InvariantMap { r, n, y, jac, adj, delta, delta_partials })
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// y_1, …, y_n (0-based in the slice).
    pub fn invariants(&self) -> &[SparsePoly] {
        &self.y
    }

    pub fn jacobian(&self) -> &[Vec<SparsePoly>] {
        &self.jac
    }

    pub fn adjugate(&self) -> &[Vec<SparsePoly>] {
        &self.adj
    }

    pub fn delta(&self) -> &SparsePoly {
        &self.delta
    }

    /// The constant c with Δ = c · (closed form), found by exact division.
    pub fn delta_scalar(&self) -> Option<CycElement> {
        let closed = jacobian_closed_form(self.r, self.n);
        let q = self.delta.divide_exact(&closed).ok()??;
        let c = q.constant_term();
        (q == SparsePoly::constant(self.n, c.clone()) && !c.is_zero()).then_some(c)
    }

    fn check_index(&self, j: usize) -> Result<()> {
        if j >= self.n {
            return Err(Error::IndexOutOfRange { index: j, len: self.n });
        }
        Ok(())
    }

    /// ∂/∂y_{j+1} applied to p/Δ^m:
    /// [Σ_i adj_{ji}·(Δ·∂_i p − m·p·∂_i Δ)] / Δ^{m+2}, then reduced.
    pub fn apply_dy(&self, j: usize, f: &LocalizedPoly) -> Result<LocalizedPoly> {
        self.check_index(j)?;
        let m = f.delta_power;
        let p = &f.numerator;
        let m_scalar = CycElement::from_int(self.r, m as i64);
        let mut num = SparsePoly::zero(self.n, self.r);
        for i in 0..self.n {
            if self.adj[j][i].is_zero() {
                continue;
            }
            let mut inner = self.delta.try_mul(&p.partial_derivative(i)?)?;
            if m > 0 {
                inner = inner.try_sub(&p.try_mul(&self.delta_partials[i])?.scale(&m_scalar))?;
            }
            num = num.try_add(&self.adj[j][i].try_mul(&inner)?)?;
        }
        LocalizedPoly::new(self, num, m + 2)
    }
}

/// numerator / Δ^delta_power, stored with the smallest possible power of Δ.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct LocalizedPoly {
    numerator: SparsePoly,
    delta_power: u32,
}

impl LocalizedPoly {
    pub fn new(map: &InvariantMap, numerator: SparsePoly, delta_power: u32) -> Result<Self> {
        let mut out = LocalizedPoly { numerator, delta_power };
        out.canonicalize(map)?;
        Ok(out)
    }

    pub fn from_poly(map: &InvariantMap, p: SparsePoly) -> Result<Self> {
        Self::new(map, p, 0)
    }

    pub fn numerator(&self) -> &SparsePoly {
        &self.numerator
    }

    pub fn delta_power(&self) -> u32 {
        self.delta_power
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    fn canonicalize(&mut self, map: &InvariantMap) -> Result<()> {
        if self.numerator.is_zero() {
            self.delta_power = 0;
            return Ok(());
        }
        while self.delta_power > 0 {
            match self.numerator.divide_exact(&map.delta)? {
                Some(q) => {
                    self.numerator = q;
                    self.delta_power -= 1;
                }
                None => break,
            }
        }
        Ok(())
    }

    fn lift(&self, map: &InvariantMap, power: u32) -> Result<SparsePoly> {
        let extra = map.delta.pow(power - self.delta_power);
        self.numerator.try_mul(&extra)
    }

    pub fn add(&self, map: &InvariantMap, other: &Self) -> Result<Self> {
        let power = self.delta_power.max(other.delta_power);
        let num = self.lift(map, power)?.try_add(&other.lift(map, power)?)?;
        Self::new(map, num, power)
    }

    pub fn sub(&self, map: &InvariantMap, other: &Self) -> Result<Self> {
        let power = self.delta_power.max(other.delta_power);
        let num = self.lift(map, power)?.try_sub(&other.lift(map, power)?)?;
        Self::new(map, num, power)
    }

    pub fn mul(&self, map: &InvariantMap, other: &Self) -> Result<Self> {
        Self::new(map, self.numerator.try_mul(&other.numerator)?, self.delta_power + other.delta_power)
    }

    pub fn scale(&self, c: &CycElement) -> Self {
        LocalizedPoly { numerator: self.numerator.scale(c), delta_power: if c.is_zero() { 0 } else { self.delta_power } }
    }
}

/// Differential operators used to probe the invariant-operator statements. All but
/// `PartialX` commute with every element of G(r,n).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum InvariantOperator {
    /// Σ_i x_i ∂_i
    Euler,
    /// Σ_i ∂_i^{r·k}
    PowerLower(u32),
    /// multiplication by y_j (1-based)
    MultInvariant(usize),
    /// ∂/∂x_i (1-based); not invariant, kept as a control
    PartialX(usize),
}

impl InvariantOperator {
    /// The three invariant families for G(r,n): Euler, Σ∂^r and multiplication by each y_j.
    pub fn standard_families(n: usize) -> Vec<InvariantOperator> {
        let mut ops = vec![InvariantOperator::Euler, InvariantOperator::PowerLower(1)];
        ops.extend((1..=n).map(InvariantOperator::MultInvariant));
        ops
    }

    pub fn apply(&self, map: &InvariantMap, p: &SparsePoly) -> Result<SparsePoly> {
        let (r, n) = (map.r, map.n);
        match *self {
            InvariantOperator::Euler => {
                let mut acc = SparsePoly::zero(n, r);
                for i in 0..n {
                    acc = acc.try_add(&SparsePoly::var(n, r, i).try_mul(&p.partial_derivative(i)?)?)?;
                }
                Ok(acc)
            }
            InvariantOperator::PowerLower(k) => {
                let mut acc = SparsePoly::zero(n, r);
                for i in 0..n {
                    let mut d = p.clone();
                    for _ in 0..r * k {
                        d = d.partial_derivative(i)?;
                        if d.is_zero() {
                            break;
                        }
                    }
                    acc = acc.try_add(&d)?;
                }
                Ok(acc)
            }
            InvariantOperator::MultInvariant(j) => {
                if j == 0 || j > n {
                    return Err(Error::IndexOutOfRange { index: j, len: n });
                }
                map.y[j - 1].try_mul(p)
            }
            InvariantOperator::PartialX(i) => {
                if i == 0 {
                    return Err(Error::IndexOutOfRange { index: i, len: n });
                }
                p.partial_derivative(i - 1)
            }
        }
    }

    /// Change in total degree of a homogeneous input.
    pub fn degree_shift(&self, r: u32) -> i64 {
        match *self {
            InvariantOperator::Euler => 0,
            InvariantOperator::PowerLower(k) => -((r * k) as i64),
            InvariantOperator::MultInvariant(j) => (r as i64) * j as i64,
            InvariantOperator::PartialX(_) => -1,
        }
    }
}

impl fmt::Display for InvariantOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InvariantOperator::Euler => write!(f, "euler"),
            InvariantOperator::PowerLower(k) => write!(f, "power_lower({k})"),
            InvariantOperator::MultInvariant(j) => write!(f, "mult_invariant({j})"),
            InvariantOperator::PartialX(i) => write!(f, "partial_x({i})"),
        }
    }
}

/// Whether D commutes with every group element on every sample.
pub fn equivariance_check(group: &Group, map: &InvariantMap, op: InvariantOperator, samples: &[SparsePoly]) -> Result<bool> {
    for p in samples {
        let dp = op.apply(map, p)?;
        for g in group.elements() {
            if g.act(&dp)? != op.apply(map, &g.act(p)?)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum Verdict {
    Zero,
    IsomorphicCopy,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// Row of the `dmodule-check` report.
#[derive(Clone, Debug, Serialize)]
pub struct DModuleReportRow {
    pub shape: MultiDiagram,
    pub operator: String,
    pub verdict: Verdict,
    /// Total degree of the images (of the source basis when the verdict is `Zero`).
    pub degree: u32,
}

/// Applies D to every F_T^S, T ∈ STab(λ), and classifies the image: all zero, or an
/// independent, G-stable family whose character equals χ_λ. Anything else is a
/// `TheoremViolation`.
pub fn schur_image_check(
    wedderburn: &WedderburnData,
    map: &InvariantMap,
    s: &RTableau,
    op: InvariantOperator,
) -> Result<DModuleReportRow> {
    let shape = s.shape();
    let block = wedderburn
        .block(&shape)
        .ok_or_else(|| Error::InvalidInput(format!("shape {shape} is not in P_{{r,n}}")))?;
    let module = if block.module().s() == s {
        block.module().clone()
    } else {
        SpechtModule::build(wedderburn.group().clone(), s, wedderburn.convention())?
    };
    let images = module
        .records()
        .iter()
        .map(|rec| op.apply(map, &rec.poly))
        .collect::<Result<Vec<_>>>()?;
    let source_degree = module.records()[0].poly.total_degree().unwrap_or(0);
    if images.iter().all(SparsePoly::is_zero) {
        return Ok(DModuleReportRow { shape, operator: op.to_string(), verdict: Verdict::Zero, degree: source_degree });
    }
    let label = format!("{op} on V_S{shape}");
    let degree = images.iter().find_map(SparsePoly::total_degree).unwrap_or(0);
    let (_, rep) = span_representation(wedderburn.group(), images, &label).map_err(|e| match e {
        Error::SingularBasis(_) => Error::TheoremViolation(format!("{label}: images are linearly dependent")),
        Error::SpanViolation(_) => Error::TheoremViolation(format!("{label}: image span is not G-stable")),
        other => other,
    })?;
    let image_char = Character::from_matrices(wedderburn.group().clone(), &rep);
    if image_char != block.module().character() {
        return Err(Error::TheoremViolation(format!("{label}: character differs from χ_λ")));
    }
    Ok(DModuleReportRow { shape, operator: op.to_string(), verdict: Verdict::IsomorphicCopy, degree })
}

/// Result of projecting short operator words applied to a generator onto every isotypic
/// component.
#[derive(Clone, Debug, Serialize)]
pub struct IsotypyReport {
    pub shape: MultiDiagram,
    pub generator: SparsePoly,
    pub degree_bound: u32,
    pub words: usize,
    pub truncated: usize,
    pub zero_images: usize,
    pub nonzero_images: usize,
    /// Number of nonzero images with a nonzero component in each shape.
    pub shapes_hit: Vec<(MultiDiagram, usize)>,
    /// Every nonzero image lies entirely in the component of `shape`.
    pub single_shape: bool,
}

/// Applies every word of length ≤ 2 in {euler, power_lower(1), mult_invariant(j)} to
/// F_{T*}^{S*} (T* = S* the first standard tableau), skipping words whose image would
/// exceed `degree_bound`, and projects each nonzero image onto all isotypic components.
pub fn truncated_isotypy_scan(
    wedderburn: &WedderburnData,
    map: &InvariantMap,
    shape: &MultiDiagram,
    degree_bound: u32,
) -> Result<IsotypyReport> {
    let block = wedderburn
        .block(shape)
        .ok_or_else(|| Error::InvalidInput(format!("shape {shape} is not in P_{{r,n}}")))?;
    let s = block.module().s().clone();
    let generator = higher_specht(&s, &s, wedderburn.convention())?.poly;
    let base_degree = generator.total_degree().unwrap_or(0) as i64;
    let alphabet = InvariantOperator::standard_families(map.n);
    let mut words: Vec<Vec<InvariantOperator>> = vec![Vec::new()];
    words.extend(alphabet.iter().map(|&op| vec![op]));
    words.extend(alphabet.iter().cartesian_product(&alphabet).map(|(&a, &b)| vec![a, b]));

    let mut hits: BTreeMap<MultiDiagram, usize> = BTreeMap::new();
    let (mut truncated, mut zero_images, mut nonzero_images) = (0, 0, 0);
    let mut single_shape = true;
    for word in &words {
        // The operators are homogeneous, so the degree path is known in advance.
        let mut degree = base_degree;
        let mut exceeds = degree > degree_bound as i64;
        for op in word {
            degree += op.degree_shift(map.r);
            exceeds |= degree > degree_bound as i64;
        }
        if exceeds {
            truncated += 1;
            continue;
        }
        let mut image = generator.clone();
        for op in word {
            image = op.apply(map, &image)?;
        }
        if image.is_zero() {
            zero_images += 1;
            continue;
        }
        nonzero_images += 1;
        let mut recombined = SparsePoly::zero(map.n, map.r);
        let mut hit_here = Vec::new();
        for b in wedderburn.blocks() {
            let proj = wedderburn.isotypic_project(&image, b.shape())?;
            if !proj.is_zero() {
                hit_here.push(b.shape().clone());
                recombined = recombined.try_add(&proj)?;
            }
        }
        if recombined != image {
            return Err(Error::NotIdempotent("isotypic projections do not sum to the identity".into()));
        }
        single_shape &= hit_here.len() == 1 && hit_here[0] == *shape;
        for h in hit_here {
            *hits.entry(h).or_default() += 1;
        }
    }
    let mut shapes_hit: Vec<(MultiDiagram, usize)> = hits.into_iter().collect();
    shapes_hit.sort_by(|a, b| b.0.cmp(&a.0));
    Ok(IsotypyReport {
        shape: shape.clone(),
        generator,
        degree_bound,
        words: words.len(),
        truncated,
        zero_images,
        nonzero_images,
        shapes_hit,
        single_shape,
    })
}

/// Pseudo-random polynomials with small integer (and ξ) coefficients.
pub fn sample_polynomials(r: u32, n: usize, count: usize, max_degree: u32, seed: u64) -> Vec<SparsePoly> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let nterms = rng.gen_range(1..=5);
            let terms: Vec<(Vec<u32>, CycElement)> = (0..nterms)
                .map(|_| {
                    let total = rng.gen_range(0..=max_degree);
                    let mut exps = vec![0u32; n];
                    for _ in 0..total {
                        exps[rng.gen_range(0..n)] += 1;
                    }
                    let a = rng.gen_range(-6i64..=6);
                    let b = rng.gen_range(-3i64..=3);
                    let c = &CycElement::from_int(r, a) + &CycElement::xi(r).scale(&rational(b, 1));
                    (exps, c)
                })
                .collect();
            SparsePoly::from_terms(n, r, terms)
        })
        .collect()
}

/// Pseudo-random elements p/Δ^m of O_U with deg p ≤ `max_degree` and m ≤ `max_power`.
pub fn sample_localized(map: &InvariantMap, count: usize, max_degree: u32, max_power: u32, seed: u64) -> Result<Vec<LocalizedPoly>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
    sample_polynomials(map.r, map.n, count, max_degree, seed)
        .into_iter()
        .map(|p| LocalizedPoly::new(map, p, rng.gen_range(0..=max_power)))
        .collect()
}

/// Elements of the group sending y-coordinates to themselves: a sanity hook for callers
/// that only hold a `GroupElement`.
pub fn fixes_invariants(map: &InvariantMap, g: &GroupElement) -> Result<bool> {
    for y in &map.y {
        if g.act(y)? != *y {
            return Ok(false);
        }
    }
    Ok(true)
}
