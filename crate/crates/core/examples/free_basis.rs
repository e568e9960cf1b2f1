//! Determinant certificate that the g·F_T^S form a basis of the polynomial ring over the invariants.

use higher_specht::specht::{free_basis_certificate, TwistConvention};
use higher_specht::wreath::{Group, DEFAULT_GROUP_CAP};

fn main() {
    for (r, n) in [(1, 2), (1, 3), (2, 2)] {
        let group = Group::new(r, n, DEFAULT_GROUP_CAP).unwrap();
        let cert = free_basis_certificate(&group, TwistConvention::NuMinusOne, 0, 4).unwrap();
        let point: Vec<String> = cert.point.iter().map(|c| c.to_string()).collect();
        println!("(r,n)=({r},{n}): {0}×{0} determinant {1} at ({2})", group.size(), cert.determinant, point.join(", "));
    }
}
