//! Central and primitive idempotents of C[G(2,2)] and the multiplicity table.

use std::sync::Arc;

use higher_specht::idempotents::WedderburnData;
use higher_specht::specht::TwistConvention;
use higher_specht::wreath::{Group, DEFAULT_GROUP_CAP};

fn main() {
    let group = Arc::new(Group::new(2, 2, DEFAULT_GROUP_CAP).unwrap());
    let w = WedderburnData::build(group, TwistConvention::NuMinusOne).unwrap();
    println!("{:?}", w.check_identities().unwrap());
    for b in w.blocks() {
        let c = w.specht_eigen_check(b.module().s(), 0).unwrap();
        println!("{}: dim {}, support of r_λ = {}, e_T·F = {c}·F", b.shape(), b.dim(), b.central().support_size());
    }
    for row in w.multiplicity_report().unwrap() {
        println!("{}  mult {}  generator {}", row.shape, row.mult, row.generator.poly);
    }
}
