//! Evaluate the solvability conditions and print their residue witnesses.
//!
//! Norm.1–3 govern ax² + by² = z²; Leg.1–3 govern ax² + by² + cz² = 0.
//! A witness is a root γ with γ² ≡ value (mod modulus); a failure names a
//! refuting prime.
//!
//! Run with: cargo run --example check_conditions

use legendre_descent::residues::ResidueWitness;
use legendre_descent::{
    check_legendre_conditions, check_normal_conditions, GeneralEquation, NormalEquation,
};
use num_bigint::BigInt;

fn show(name: &str, w: &Option<ResidueWitness>) {
    match w {
        Some(w) => println!("  {name}: holds — {w}"),
        None => println!("  {name}: fails"),
    }
}

fn main() {
    for (a, b) in [(17i64, 13i64), (2, 3), (5, 5)] {
        let eq = NormalEquation::new(BigInt::from(a), BigInt::from(b)).unwrap();
        let cond = check_normal_conditions(&eq);
        println!("{eq} with d = {}", cond.d);
        show("Norm.1 (a R b)", &cond.a_res_b);
        show("Norm.2 (b R a)", &cond.b_res_a);
        show("Norm.3 (-(ab/d²) R d)", &cond.neg_ab_res_d);
    }
    for (a, b, c) in [(3i64, 5i64, -2i64), (1, 1, -3)] {
        let eq = GeneralEquation::new(BigInt::from(a), BigInt::from(b), BigInt::from(c)).unwrap();
        let cond = check_legendre_conditions(&eq);
        println!("{eq}");
        show("Leg.1 (-ab R c)", &cond.neg_ab_res_c);
        show("Leg.2 (-bc R a)", &cond.neg_bc_res_a);
        show("Leg.3 (-ac R b)", &cond.neg_ac_res_b);
    }
}
