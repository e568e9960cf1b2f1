//! Central and primitive idempotents of C[G(r,n)] and the isotypic projections they induce.

use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact_arith::{rational, CycElement};
use crate::multipoly::SparsePoly;
use crate::specht::{higher_specht, SpechtModule, SpechtRecord, TwistConvention};
use crate::tableaux::{enumerate_diagrams, enumerate_standard, MultiDiagram, RTableau};
use crate::wreath::{Group, GroupAlgebraElement};

/// r_λ = (f^λ/|G|) Σ_g χ_λ(g⁻¹) g.
pub fn central_idempotent(module: &SpechtModule) -> GroupAlgebraElement {
    let group = module.group();
    let chi = module.character();
    let scale = rational(module.dim() as i64, group.size() as i64);
    let terms = group.elements().iter().map(|g| {
        let value = chi.value(&g.inverse()).expect("closed under inverses").clone();
        (g.clone(), value)
    });
    GroupAlgebraElement::from_terms(group.r(), group.n(), terms.collect::<Vec<_>>()).scale_rational(&scale)
}

/// e_i = (f^λ/|G|) Σ_g ρ(g⁻¹)_{ii} g, checked to satisfy e_i² = e_i.
pub fn primitive_idempotent(module: &SpechtModule, i: usize) -> Result<GroupAlgebraElement> {
    if i >= module.dim() {
        return Err(Error::IndexOutOfRange { index: i, len: module.dim() });
    }
    let group = module.group();
    let scale = rational(module.dim() as i64, group.size() as i64);
    let terms = group.elements().iter().map(|g| {
        let rho = module.rep_matrix(&g.inverse()).expect("closed under inverses");
        (g.clone(), rho[(i, i)].clone())
    });
    let e = GroupAlgebraElement::from_terms(group.r(), group.n(), terms.collect::<Vec<_>>()).scale_rational(&scale);
    if e.mul(&e)? != e {
        return Err(Error::NotIdempotent(format!("e_{i} for shape {}", module.shape())));
    }
    Ok(e)
}

/// The λ-block of the group algebra.
#[derive(Clone, Debug)]
pub struct Block {
    module: SpechtModule,
    central: GroupAlgebraElement,
    primitive: Vec<GroupAlgebraElement>,
}

impl Block {
    pub fn shape(&self) -> &MultiDiagram {
        self.module.shape()
    }

    pub fn dim(&self) -> usize {
        self.module.dim()
    }

    /// The module V_{S*}(λ) used to build the matrix units, S* the first standard tableau.
    pub fn module(&self) -> &SpechtModule {
        &self.module
    }

    pub fn central(&self) -> &GroupAlgebraElement {
        &self.central
    }

    /// e_T for T ∈ STab(λ), in enumeration order.
    pub fn primitive(&self) -> &[GroupAlgebraElement] {
        &self.primitive
    }

    pub fn standard_tableaux(&self) -> Vec<RTableau> {
        enumerate_standard(self.shape())
    }
}

/// Per-shape central idempotents and primitive idempotents of C[G(r,n)].
#[derive(Clone, Debug)]
pub struct WedderburnData {
    group: Arc<Group>,
    convention: TwistConvention,
    blocks: Vec<Block>,
}

/// Outcome of the exact identities of the block decomposition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WedderburnChecks {
    pub central_sum_is_one: bool,
    pub central_idempotent: bool,
    pub central_orthogonal: bool,
    pub primitive_orthogonal: bool,
    pub primitive_sum_is_central: bool,
}

impl WedderburnChecks {
    pub fn all(&self) -> bool {
        self.central_sum_is_one
            && self.central_idempotent
            && self.central_orthogonal
            && self.primitive_orthogonal
            && self.primitive_sum_is_central
    }
}

impl WedderburnData {
    pub fn build(group: Arc<Group>, convention: TwistConvention) -> Result<Self> {
        let blocks = enumerate_diagrams(group.r(), group.n())
            .iter()
            .map(|shape| {
                let s = enumerate_standard(shape).into_iter().next().expect("every shape has a standard tableau");
                let module = SpechtModule::build(group.clone(), &s, convention)?;
                let central = central_idempotent(&module);
                let primitive = (0..module.dim()).map(|i| primitive_idempotent(&module, i)).collect::<Result<_>>()?;
                Ok(Block { module, central, primitive })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(WedderburnData { group, convention, blocks })
    }

    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }

    pub fn convention(&self) -> TwistConvention {
        self.convention
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn block(&self, shape: &MultiDiagram) -> Option<&Block> {
        self.blocks.iter().find(|b| b.shape() == shape)
    }

    fn block_or_err(&self, shape: &MultiDiagram) -> Result<&Block> {
        self.block(shape).ok_or_else(|| Error::InvalidInput(format!("shape {shape} is not in P_{{r,n}}")))
    }

    pub fn check_identities(&self) -> Result<WedderburnChecks> {
        let (r, n) = (self.group.r(), self.group.n());
        let one = GroupAlgebraElement::one(r, n);
        let mut sum = GroupAlgebraElement::zero(r, n);
        for b in &self.blocks {
            sum = sum.add(&b.central)?;
        }
        let mut central_idempotent = true;
        let mut central_orthogonal = true;
        let mut primitive_orthogonal = true;
        let mut primitive_sum_is_central = true;
        for (a, ba) in self.blocks.iter().enumerate() {
            for (b, bb) in self.blocks.iter().enumerate() {
                let prod = ba.central.mul(&bb.central)?;
                if a == b {
                    central_idempotent &= prod == ba.central;
                } else {
                    central_orthogonal &= prod.is_zero();
                }
            }
            for (i, ei) in ba.primitive.iter().enumerate() {
                for (j, ej) in ba.primitive.iter().enumerate() {
                    let prod = ei.mul(ej)?;
                    primitive_orthogonal &= if i == j { prod == *ei } else { prod.is_zero() };
                }
            }
            let mut psum = GroupAlgebraElement::zero(r, n);
            for e in &ba.primitive {
                psum = psum.add(e)?;
            }
            primitive_sum_is_central &= psum == ba.central;
        }
        Ok(WedderburnChecks {
            central_sum_is_one: sum == one,
            central_idempotent,
            central_orthogonal,
            primitive_orthogonal,
            primitive_sum_is_central,
        })
    }

    /// Projection of `p` onto the λ-isotypic component, `r_λ · p`.
    pub fn isotypic_project(&self, p: &SparsePoly, shape: &MultiDiagram) -> Result<SparsePoly> {
        self.block_or_err(shape)?.central.apply(p)
    }

    /// `e_{T_i} · p` for the i-th standard tableau of the shape.
    pub fn apply_primitive(&self, shape: &MultiDiagram, i: usize, p: &SparsePoly) -> Result<SparsePoly> {
        let block = self.block_or_err(shape)?;
        let e = block.primitive.get(i).ok_or(Error::IndexOutOfRange { index: i, len: block.dim() })?;
        e.apply(p)
    }

    /// The scalar c with e_{T_i}·F_{T_i}^S = c·F_{T_i}^S; must be nonzero.
    pub fn specht_eigen_check(&self, s: &RTableau, i: usize) -> Result<CycElement> {
        let shape = s.shape();
        let tabs = enumerate_standard(&shape);
        let t = tabs.get(i).ok_or(Error::IndexOutOfRange { index: i, len: tabs.len() })?;
        let f = higher_specht(s, t, self.convention)?.poly;
        let image = self.apply_primitive(&shape, i, &f)?;
        match image.ratio_to(&f) {
            Some(c) if !c.is_zero() => Ok(c),
            _ => Err(Error::NotEigen(format!("shape {shape}, S={s}, T={t}"))),
        }
    }

    pub fn multiplicity_report(&self) -> Result<Vec<DecompRow>> {
        self.blocks
            .iter()
            .map(|b| {
                let s = b.module.s().clone();
                let generator = higher_specht(&s, &s, self.convention)?;
                Ok(DecompRow { shape: b.shape().clone(), dim: b.dim(), mult: b.dim(), generator })
            })
            .collect()
    }
}

/// One row of the decomposition report: shape, dimension f^λ, multiplicity f^λ and the
/// generator F_{T*}^{S*} with T* = S* the first standard tableau.
#[derive(Clone, Debug, Serialize)]
pub struct DecompRow {
    pub shape: MultiDiagram,
    pub dim: usize,
    pub mult: usize,
    pub generator: SpechtRecord,
}
