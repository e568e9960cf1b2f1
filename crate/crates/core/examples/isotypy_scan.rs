//! Short operator words applied to a generator stay in a single isotypic component.

use std::sync::Arc;

use higher_specht::dmodule::{truncated_isotypy_scan, InvariantMap};
use higher_specht::idempotents::WedderburnData;
use higher_specht::specht::TwistConvention;
use higher_specht::wreath::{Group, DEFAULT_GROUP_CAP};

fn main() {
    let (r, n) = (2, 2);
    let map = InvariantMap::build(r, n).unwrap();
    let group = Arc::new(Group::new(r, n, DEFAULT_GROUP_CAP).unwrap());
    let w = WedderburnData::build(group, TwistConvention::NuMinusOne).unwrap();
    for b in w.blocks() {
        let rep = truncated_isotypy_scan(&w, &map, b.shape(), 6).unwrap();
        let hits: Vec<String> = rep.shapes_hit.iter().map(|(s, k)| format!("{s}×{k}")).collect();
        println!(
            "{}: generator {}, {} nonzero images, hits [{}], single shape: {}",
            rep.shape, rep.generator, rep.nonzero_images, hits.join(", "), rep.single_shape
        );
    }
}
