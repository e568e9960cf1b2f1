//! Exact arithmetic in Q(ξ_r): identities for a primitive 5th root of unity.

use higher_specht::exact_arith::{cyclotomic_polynomial, CycElement};

fn main() {
    let r = 5;
    println!("Φ_{r} coefficients (low to high): {:?}", cyclotomic_polynomial(r));
    let xi = CycElement::xi(r);
    let sum = (0..r as i64).fold(CycElement::zero(r), |acc, k| &acc + &CycElement::xi_pow(r, k));
    println!("1 + ξ + … + ξ^4 = {sum}");
    println!("ξ^5 = {}", xi.pow(5));
    let a = &CycElement::from_int(r, 2) - &xi;
    let inv = a.inv().expect("nonzero");
    println!("(2 - ξ)^-1 = {inv}");
    println!("(2 - ξ)·(2 - ξ)^-1 = {}", &a * &inv);
    println!("JSON: {}", serde_json::to_string(&a).unwrap());
}
