//! Higher Specht polynomials F_T^S for every pair of standard tableaux of one shape.

use higher_specht::specht::{higher_specht, TwistConvention};
use higher_specht::tableaux::{enumerate_standard, MultiDiagram};

fn main() {
    let shape = MultiDiagram::from_rows(&[&[1], &[1, 1]]).unwrap();
    let tabs = enumerate_standard(&shape);
    println!("shape {shape}, {} standard tableaux", tabs.len());
    for s in &tabs {
        for t in &tabs {
            let rec = higher_specht(s, t, TwistConvention::NuMinusOne).unwrap();
            println!("S = {s}  T = {t}  F = {}", rec.poly);
        }
    }
    let rec = higher_specht(&tabs[0], &tabs[0], TwistConvention::Nu).unwrap();
    println!("with the nu twist: {}", rec.poly);
}
