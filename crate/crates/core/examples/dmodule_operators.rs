//! The invariant map, its Jacobian, ∂/∂y on the localized ring, and invariant operators on Specht modules.

use std::sync::Arc;

use higher_specht::dmodule::{schur_image_check, InvariantMap, InvariantOperator, LocalizedPoly};
use higher_specht::idempotents::WedderburnData;
use higher_specht::specht::TwistConvention;
use higher_specht::wreath::{Group, DEFAULT_GROUP_CAP};

fn main() {
    let (r, n) = (2, 2);
    let map = InvariantMap::build(r, n).unwrap();
    for (j, y) in map.invariants().iter().enumerate() {
        println!("y{} = {y}", j + 1);
    }
    println!("Δ = {}  (= {} × closed form)", map.delta(), map.delta_scalar().unwrap());
    let y2 = LocalizedPoly::from_poly(&map, map.invariants()[1].clone()).unwrap();
    let x1 = LocalizedPoly::from_poly(&map, higher_specht::multipoly::SparsePoly::var(n, r, 0)).unwrap();
    println!("∂y2/∂y2 = {}", map.apply_dy(1, &y2).unwrap().numerator());
    let d = map.apply_dy(0, &x1).unwrap();
    println!("∂x1/∂y1 = ({}) / Δ^{}", d.numerator(), d.delta_power());

    let group = Arc::new(Group::new(r, n, DEFAULT_GROUP_CAP).unwrap());
    let w = WedderburnData::build(group, TwistConvention::NuMinusOne).unwrap();
    for b in w.blocks() {
        for op in InvariantOperator::standard_families(n) {
            let row = schur_image_check(&w, &map, b.module().s(), op).unwrap();
            println!("{} {:<18} {:?} (degree {})", row.shape, row.operator, row.verdict, row.degree);
        }
    }
}
