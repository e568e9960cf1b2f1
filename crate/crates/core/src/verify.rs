//! Named invariant suites producing deterministic pass/fail reports.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::dmodule::{
    fundamental_invariant, sample_localized, sample_polynomials, schur_image_check, truncated_isotypy_scan,
    equivariance_check, InvariantMap, InvariantOperator, LocalizedPoly, Verdict,
};
use crate::error::{Error, Result};
use crate::exact_arith::CycElement;
use crate::idempotents::WedderburnData;
use crate::multipoly::SparsePoly;
use crate::specht::{expected_degree, free_basis_certificate, shape_isomorphism_check, SpechtModule, TwistConvention};
use crate::tableaux::{dimension, dimension_by_hooks, enumerate_diagrams, enumerate_standard};
use crate::wreath::{group_order, Group};

/// Largest group for which the specht suite also computes the free-basis determinant.
pub const FREE_BASIS_GROUP_LIMIT: usize = 24;
/// Degree bound used by the isotypy scan in the dmodule suite.
pub const ISOTYPY_DEGREE_BOUND: u32 = 6;
const SAMPLE_COUNT: usize = 20;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    Group,
    Specht,
    Idempotents,
    Dmodule,
    All,
}

impl Suite {
    fn parts(self) -> Vec<Suite> {
        match self {
            Suite::All => vec![Suite::Group, Suite::Specht, Suite::Idempotents, Suite::Dmodule],
            s => vec![s],
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Suite::Group => "group",
            Suite::Specht => "specht",
            Suite::Idempotents => "idempotents",
            Suite::Dmodule => "dmodule",
            Suite::All => "all",
        };
        f.write_str(s)
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "group" => Ok(Suite::Group),
            "specht" => Ok(Suite::Specht),
            "idempotents" => Ok(Suite::Idempotents),
            "dmodule" => Ok(Suite::Dmodule),
            "all" => Ok(Suite::All),
            other => Err(Error::InvalidInput(format!("unknown suite {other:?}"))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub r: u32,
    pub n: usize,
    pub convention: TwistConvention,
    pub seed: u64,
    pub cap: u128,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub suite: Suite,
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub r: u32,
    pub n: usize,
    pub suite: Suite,
    pub convention: TwistConvention,
    pub seed: u64,
    pub checks: Vec<Check>,
    pub passed: bool,
}

impl VerifyReport {
    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "verify r={} n={} suite={} convention={} seed={}\n",
            self.r, self.n, self.suite, self.convention, self.seed
        );
        for c in &self.checks {
            let status = if c.passed { "PASS" } else { "FAIL" };
            out.push_str(&format!("{status} [{}] {}: {}\n", c.suite, c.name, c.detail));
        }
        let passed = self.checks.iter().filter(|c| c.passed).count();
        let status = if self.passed { "PASS" } else { "FAIL" };
        out.push_str(&format!("{status} {passed}/{}\n", self.checks.len()));
        out
    }
}

/// Collects checks; resource errors abort the run, every other error becomes a failed check.
struct Recorder {
    suite: Suite,
    checks: Vec<Check>,
}

impl Recorder {
    fn record(&mut self, name: impl Into<String>, f: impl FnOnce() -> Result<(bool, String)>) -> Result<()> {
        let (passed, detail) = match f() {
            Ok(v) => v,
            Err(e @ (Error::CapExceeded { .. } | Error::DegreeBound { .. })) => return Err(e),
            Err(e) => (false, format!("error: {e}")),
        };
        self.checks.push(Check { suite: self.suite, name: name.into(), passed, detail });
        Ok(())
    }
}

/// Builds the shared group (respecting the cap) and runs the requested suites in a fixed order.
pub fn run_suite(cfg: &VerifyConfig, suite: Suite) -> Result<VerifyReport> {
    if cfg.r == 0 || cfg.n == 0 {
        return Err(Error::InvalidInput("r and n must be positive".into()));
    }
    let group = Arc::new(Group::new(cfg.r, cfg.n, cfg.cap)?);
    let mut wedderburn: Option<WedderburnData> = None;
    let mut checks = Vec::new();
    for part in suite.parts() {
        let mut rec = Recorder { suite: part, checks: Vec::new() };
        match part {
            Suite::Group => group_suite(cfg, &group, &mut rec)?,
            Suite::Specht => specht_suite(cfg, &group, &mut rec)?,
            Suite::Idempotents => {
                let w = wedderburn_for(cfg, &group, &mut wedderburn)?;
                idempotent_suite(cfg, w, &mut rec)?
            }
            Suite::Dmodule => {
                let map = InvariantMap::build(cfg.r, cfg.n)?;
                let w = wedderburn_for(cfg, &group, &mut wedderburn)?;
                dmodule_suite(cfg, w, &map, &mut rec)?
            }
            Suite::All => unreachable!(),
        }
        checks.extend(rec.checks);
    }
    let passed = checks.iter().all(|c| c.passed);
    Ok(VerifyReport { r: cfg.r, n: cfg.n, suite, convention: cfg.convention, seed: cfg.seed, checks, passed })
}

fn wedderburn_for<'a>(cfg: &VerifyConfig, group: &Arc<Group>, slot: &'a mut Option<WedderburnData>) -> Result<&'a WedderburnData> {
    if slot.is_none() {
        *slot = Some(WedderburnData::build(group.clone(), cfg.convention)?);
    }
    Ok(slot.as_ref().unwrap())
}

fn group_suite(cfg: &VerifyConfig, group: &Group, rec: &mut Recorder) -> Result<()> {
    let (r, n) = (cfg.r, cfg.n);
    let els = group.elements();
    rec.record("group order = r^n·n!", || {
        let expected = group_order(r, n).unwrap_or(0);
        Ok((group.size() as u128 == expected, format!("{} elements", group.size())))
    })?;
    rec.record("identity and inverses", || {
        let id = group.identity();
        let ok = els
            .iter()
            .map(|g| Ok(g.compose(&g.inverse())? == id && g.inverse().compose(g)? == id && id.compose(g)? == *g))
            .collect::<Result<Vec<bool>>>()?
            .into_iter()
            .all(|b| b);
        Ok((ok, format!("{} elements", els.len())))
    })?;
    rec.record("closure", || {
        for (g, h) in els.iter().cartesian_product(els) {
            if group.index_of(&g.compose(h)?).is_none() {
                return Ok((false, format!("{g:?}·{h:?} not enumerated")));
            }
        }
        Ok((true, format!("{} products", els.len() * els.len())))
    })?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let triples: Vec<(usize, usize, usize)> = (0..200)
        .map(|_| (rng.gen_range(0..els.len()), rng.gen_range(0..els.len()), rng.gen_range(0..els.len())))
        .collect();
    rec.record("associativity", || {
        for &(a, b, c) in &triples {
            let (g, h, k) = (&els[a], &els[b], &els[c]);
            if g.compose(h)?.compose(k)? != g.compose(&h.compose(k)?)? {
                return Ok((false, format!("fails at triple ({a}, {b}, {c})")));
            }
        }
        Ok((true, format!("{} sampled triples", triples.len())))
    })?;
    let samples = sample_polynomials(r, n, 5, 3, cfg.seed);
    let pairs: Vec<(usize, usize)> = (0..100).map(|_| (rng.gen_range(0..els.len()), rng.gen_range(0..els.len()))).collect();
    rec.record("left action law", || {
        for &(a, b) in &pairs {
            let (g, h) = (&els[a], &els[b]);
            let gh = g.compose(h)?;
            for p in &samples {
                if g.act(&h.act(p)?)? != gh.act(p)? {
                    return Ok((false, format!("fails for pair ({a}, {b})")));
                }
            }
        }
        Ok((true, format!("{} sampled pairs × {} polynomials", pairs.len(), samples.len())))
    })?;
    rec.record("fundamental invariants fixed", || {
        let ys: Vec<SparsePoly> = (1..=n).map(|j| fundamental_invariant(r, n, j)).collect();
        for g in els {
            for y in &ys {
                if g.act(y)? != *y {
                    return Ok((false, format!("{y} moved")));
                }
            }
        }
        Ok((true, format!("y_1..y_{n} under {} elements", els.len())))
    })
}

fn specht_suite(cfg: &VerifyConfig, group: &Arc<Group>, rec: &mut Recorder) -> Result<()> {
    let order = group.size();
    let shapes = enumerate_diagrams(cfg.r, cfg.n);
    rec.record(format!("sum of squares = {order}"), || {
        let sum: usize = shapes.iter().map(|s| dimension(s).pow(2)).sum();
        Ok((sum == order, format!("{} shapes, Σ (f^λ)² = {sum}", shapes.len())))
    })?;
    rec.record("hook formula = tableau count", || {
        let bad = shapes.iter().filter(|s| dimension_by_hooks(s) as usize != dimension(s)).count();
        Ok((bad == 0, format!("{} shapes, {bad} mismatches", shapes.len())))
    })?;
    let mut modules = Vec::new();
    for shape in &shapes {
        let s = enumerate_standard(shape).remove(0);
        modules.push(SpechtModule::build(group.clone(), &s, cfg.convention)?);
    }
    rec.record("specht polynomials homogeneous of expected degree", || {
        let mut count = 0;
        for m in &modules {
            let d = expected_degree(m.s(), cfg.convention)?;
            for rec in m.records() {
                count += 1;
                if !rec.poly.is_homogeneous() || rec.poly.total_degree() != Some(d) {
                    return Ok((false, format!("{} has wrong degree (expected {d})", rec.poly)));
                }
            }
        }
        Ok((true, format!("{count} polynomials")))
    })?;
    for m in &modules {
        rec.record(format!("homomorphism {}", m.shape()), || Ok((m.is_homomorphism(), format!("dim {}", m.dim()))))?;
    }
    rec.record("characters orthonormal", || {
        let chars: Vec<_> = modules.iter().map(|m| m.character()).collect();
        for (i, a) in chars.iter().enumerate() {
            for (j, b) in chars.iter().enumerate() {
                let ip = a.inner_product(b);
                let expected = CycElement::from_int(cfg.r, (i == j) as i64);
                if ip != expected {
                    return Ok((false, format!("<χ_{i}, χ_{j}> = {ip}")));
                }
            }
        }
        Ok((true, format!("{} characters", chars.len())))
    })?;
    rec.record("same shape iff same character", || {
        let mut same = 0;
        for shape in &shapes {
            let tabs = enumerate_standard(shape);
            for s2 in &tabs[1..] {
                same += 1;
                if !shape_isomorphism_check(group, &tabs[0], s2, cfg.convention)? {
                    return Ok((false, format!("{} and {s2} differ", tabs[0])));
                }
            }
        }
        let chars: Vec<_> = modules.iter().map(|m| m.character()).collect();
        let distinct = chars.iter().tuple_combinations().filter(|(a, b)| a != b).count();
        let pairs = chars.len() * (chars.len() - 1) / 2;
        Ok((distinct == pairs, format!("{same} same-shape pairs equal, {distinct}/{pairs} distinct-shape pairs differ")))
    })?;
    if order <= FREE_BASIS_GROUP_LIMIT {
        rec.record("free basis certificate", || {
            let cert = free_basis_certificate(group, cfg.convention, cfg.seed, 8)?;
            Ok((!cert.determinant.is_zero(), format!("det = {} after {} attempt(s)", cert.determinant, cert.attempts)))
        })?;
    }
    Ok(())
}

fn idempotent_suite(cfg: &VerifyConfig, w: &WedderburnData, rec: &mut Recorder) -> Result<()> {
    let checks = w.check_identities()?;
    let size = w.group().size();
    rec.record("Σ r_λ = 1", || Ok((checks.central_sum_is_one, format!("|G| = {size}"))))?;
    rec.record("r_λ² = r_λ", || Ok((checks.central_idempotent, format!("{} blocks", w.blocks().len()))))?;
    rec.record("r_λ r_μ = 0", || Ok((checks.central_orthogonal, format!("{} blocks", w.blocks().len()))))?;
    rec.record("e_i e_j = δ_ij e_i", || Ok((checks.primitive_orthogonal, "within every block".to_string())))?;
    rec.record("Σ_T e_T = r_λ", || Ok((checks.primitive_sum_is_central, "within every block".to_string())))?;
    rec.record("eigen-witness c ≠ 0", || {
        let mut count = 0;
        for b in w.blocks() {
            for i in 0..b.dim() {
                w.specht_eigen_check(b.module().s(), i)?;
                count += 1;
            }
        }
        Ok((true, format!("{count} pairs (λ, T)")))
    })?;
    rec.record("cross application vanishes", || {
        let mut count = 0;
        for b in w.blocks() {
            for (j, record) in b.module().records().iter().enumerate() {
                for i in (0..b.dim()).filter(|&i| i != j) {
                    count += 1;
                    if !w.apply_primitive(b.shape(), i, &record.poly)?.is_zero() {
                        return Ok((false, format!("e_{i} F_{j} ≠ 0 in {}", b.shape())));
                    }
                }
            }
        }
        Ok((true, format!("{count} pairs")))
    })?;
    rec.record("isotypic projections sum to identity", || {
        let samples = sample_polynomials(cfg.r, cfg.n, 4, 4, cfg.seed);
        for p in &samples {
            let mut acc = SparsePoly::zero(cfg.n, cfg.r);
            for b in w.blocks() {
                let proj = w.isotypic_project(p, b.shape())?;
                if w.isotypic_project(&proj, b.shape())? != proj {
                    return Ok((false, format!("projection onto {} is not idempotent", b.shape())));
                }
                acc = acc.try_add(&proj)?;
            }
            if acc != *p {
                return Ok((false, format!("Σ projections of {p} differs")));
            }
        }
        Ok((true, format!("{} sampled polynomials", samples.len())))
    })?;
    rec.record("Σ mult·dim = |G|", || {
        let rows = w.multiplicity_report()?;
        let total: usize = rows.iter().map(|r| r.mult * r.dim).sum();
        Ok((total == size, format!("multiplicities {:?}", rows.iter().map(|r| r.mult).collect::<Vec<_>>())))
    })
}

fn dmodule_suite(cfg: &VerifyConfig, w: &WedderburnData, map: &InvariantMap, rec: &mut Recorder) -> Result<()> {
    let (r, n) = (cfg.r, cfg.n);
    rec.record("jacobian closed form", || match map.delta_scalar() {
        Some(c) => Ok((true, format!("Δ = {c}·∏x_i^(r-1)∏(x_i^r - x_j^r)"))),
        None => Ok((false, format!("Δ = {}", map.delta()))),
    })?;
    rec.record("Δ transforms by a unimodular character", || {
        let k = num_integer::lcm(2, r);
        let dk = map.delta().pow(k);
        for g in w.group().elements() {
            let c = match g.act(map.delta())?.ratio_to(map.delta()) {
                Some(c) => c,
                None => return Ok((false, "g·Δ is not a multiple of Δ".into())),
            };
            if !(&c * &c.conj()).is_one() || g.act(&dk)? != dk {
                return Ok((false, format!("scalar {c}")));
            }
        }
        Ok((true, format!("Δ^{k} invariant")))
    })?;
    rec.record("∂/∂y_j y_k = δ_jk", || {
        for (j, k) in (0..n).cartesian_product(0..n) {
            let yk = LocalizedPoly::from_poly(map, map.invariants()[k].clone())?;
            let expected = LocalizedPoly::from_poly(map, SparsePoly::constant(n, CycElement::from_int(r, (j == k) as i64)))?;
            if map.apply_dy(j, &yk)? != expected {
                return Ok((false, format!("j={}, k={}", j + 1, k + 1)));
            }
        }
        Ok((true, format!("{} pairs", n * n)))
    })?;
    let samples = sample_localized(map, SAMPLE_COUNT, 3, 1, cfg.seed)?;
    rec.record("∂/∂y_j commute", || {
        for f in &samples {
            for (j, k) in (0..n).tuple_combinations() {
                let a = map.apply_dy(k, &map.apply_dy(j, f)?)?;
                let b = map.apply_dy(j, &map.apply_dy(k, f)?)?;
                if a != b {
                    return Ok((false, format!("j={}, k={}", j + 1, k + 1)));
                }
            }
        }
        Ok((true, format!("{} sampled elements of O_U", samples.len())))
    })?;
    rec.record("∂/∂y_j Leibniz rule", || {
        for pair in samples.chunks_exact(2) {
            let (f, g) = (&pair[0], &pair[1]);
            for j in 0..n {
                let lhs = map.apply_dy(j, &f.mul(map, g)?)?;
                let rhs = map.apply_dy(j, f)?.mul(map, g)?.add(map, &f.mul(map, &map.apply_dy(j, g)?)?)?;
                if lhs != rhs {
                    return Ok((false, format!("j={}", j + 1)));
                }
            }
        }
        Ok((true, format!("{} sampled products", samples.len() / 2)))
    })?;
    let polys = sample_polynomials(r, n, SAMPLE_COUNT, 4, cfg.seed);
    for op in InvariantOperator::standard_families(n) {
        rec.record(format!("{op} commutes with G"), || {
            Ok((equivariance_check(w.group(), map, op, &polys)?, format!("{} elements × {} polynomials", w.group().size(), polys.len())))
        })?;
    }
    rec.record("control partial_x(1) does not commute with G", || {
        let equivariant = equivariance_check(w.group(), map, InvariantOperator::PartialX(1), &polys)?;
        if w.group().size() == 1 {
            return Ok((true, "trivial group: nothing to detect".into()));
        }
        Ok((!equivariant, if equivariant { "commutes".into() } else { "fails as expected".into() }))
    })?;
    for b in w.blocks() {
        rec.record(format!("operator images {}", b.shape()), || {
            let mut zero = 0;
            let mut copies = 0;
            for op in InvariantOperator::standard_families(n) {
                match schur_image_check(w, map, b.module().s(), op)?.verdict {
                    Verdict::Zero => zero += 1,
                    Verdict::IsomorphicCopy => copies += 1,
                }
            }
            Ok((true, format!("{copies} isomorphic copies, {zero} zero")))
        })?;
    }
    for b in w.blocks() {
        rec.record(format!("isotypy scan {}", b.shape()), || {
            let rep = truncated_isotypy_scan(w, map, b.shape(), ISOTYPY_DEGREE_BOUND)?;
            Ok((
                rep.single_shape,
                format!(
                    "{} words, {} nonzero, {} zero, {} truncated (d ≤ {})",
                    rep.words, rep.nonzero_images, rep.zero_images, rep.truncated, rep.degree_bound
                ),
            ))
        })?;
    }
    Ok(())
}
