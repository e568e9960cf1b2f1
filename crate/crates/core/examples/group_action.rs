//! Elements of G(2,2) acting on polynomials by signed permutations of the variables.

use higher_specht::multipoly::SparsePoly;
use higher_specht::wreath::{Group, DEFAULT_GROUP_CAP};

fn main() {
    let (r, n) = (2, 2);
    let group = Group::new(r, n, DEFAULT_GROUP_CAP).expect("small group");
    let p = &(&SparsePoly::var(n, r, 0) * &SparsePoly::var(n, r, 0)) + &SparsePoly::var(n, r, 1);
    println!("|G(2,2)| = {}", group.size());
    println!("p = {p}");
    for g in group.elements() {
        println!("{:>28}  g·p = {}", serde_json::to_string(g).unwrap(), g.act(&p).unwrap());
    }
    let (g, h) = (&group.elements()[3], &group.elements()[5]);
    let lhs = g.act(&h.act(&p).unwrap()).unwrap();
    let rhs = g.compose(h).unwrap().act(&p).unwrap();
    println!("g·(h·p) = (gh)·p: {}", lhs == rhs);
}
