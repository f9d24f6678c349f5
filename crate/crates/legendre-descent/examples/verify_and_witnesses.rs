//! Verify claimed solutions, reduce them to primitive form, and re-derive the
//! residue witnesses that the necessity direction of the theorem extracts
//! from any primitive solution.
//!
//! Run with: cargo run --example verify_and_witnesses

use legendre_descent::{
    make_primitive, necessity_witnesses_general, necessity_witnesses_normal, Equation,
    GeneralEquation, NormalEquation, Solution,
};
use num_bigint::BigInt;

fn big(n: i64) -> BigInt {
    BigInt::from(n)
}

fn main() {
    // A non-primitive solution of 17x² + 13y² = z².
    let eq = NormalEquation::new(big(17), big(13)).unwrap();
    let raw = Solution::new(big(3), big(12), big(45));
    assert!(eq.is_nontrivial_solution(&raw));
    let primitive = make_primitive(&Equation::Normal(eq.clone()), &raw);
    println!("{eq}: {raw} reduces to primitive {primitive}");
    let cond = necessity_witnesses_normal(&eq, &primitive).unwrap();
    println!("  Norm.1 witness: {}", cond.a_res_b.unwrap());
    println!("  Norm.2 witness: {}", cond.b_res_a.unwrap());
    println!("  Norm.3 witness: {}", cond.neg_ab_res_d.unwrap());

    // The same machinery for the general form.
    let eq = GeneralEquation::new(big(3), big(5), big(-2)).unwrap();
    let sol = Solution::new(big(1), big(1), big(2));
    assert!(eq.is_nontrivial_solution(&sol));
    let cond = necessity_witnesses_general(&eq, &sol).unwrap();
    println!("{eq}: solution {sol}");
    println!("  Leg.1 witness: {}", cond.neg_ab_res_c.unwrap());
    println!("  Leg.2 witness: {}", cond.neg_bc_res_a.unwrap());
    println!("  Leg.3 witness: {}", cond.neg_ac_res_b.unwrap());

    // A wrong claim is rejected by plain substitution.
    let eq = NormalEquation::new(big(3), big(13)).unwrap();
    let wrong = Solution::new(big(1), big(1), big(5));
    println!("{eq}: {wrong} solves it? {}", eq.is_nontrivial_solution(&wrong));
}
