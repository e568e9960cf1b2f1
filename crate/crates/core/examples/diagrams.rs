//! r-diagrams of size n, their standard tableaux, index tableaux and dimensions.

use higher_specht::tableaux::{dimension, dimension_by_hooks, enumerate_diagrams, enumerate_standard, index_tableau, word};

fn main() {
    let (r, n) = (2, 3);
    let shapes = enumerate_diagrams(r, n);
    for shape in &shapes {
        println!("{shape}: f = {} (hooks: {})", dimension(shape), dimension_by_hooks(shape));
    }
    let total: usize = shapes.iter().map(|s| dimension(s).pow(2)).sum();
    println!("Σ f² = {total}");
    let shape = &shapes[2];
    for s in enumerate_standard(shape) {
        println!("  {s}  word {:?}  index {:?}", word(&s).unwrap(), index_tableau(&s).unwrap().components());
    }
}
