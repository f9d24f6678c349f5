//! Walk a full descent trace: the reduction steps, the base case, and each
//! lifted solution on the way back up.
//!
//! Run with: cargo run --example descent_trace

use legendre_descent::{solve_normal, BaseCase, NormalEquation, NormalVerdict, Side};
use num_bigint::BigInt;

fn main() {
    let eq = NormalEquation::new(BigInt::from(17), BigInt::from(13)).unwrap();
    let NormalVerdict::Solvable { solution, trace } = solve_normal(&eq) else {
        unreachable!("(17, 13) satisfies all three conditions");
    };

    println!("E0: {eq}");
    for step in &trace.steps {
        let (a, b) = step.coeffs_after();
        let (side, symbol) = match step.side {
            Side::ReduceA => ("reduce a", "β"),
            Side::ReduceB => ("reduce b", "α"),
        };
        println!(
            "step {} ({side}): {symbol} = {}, {symbol}² − {} = {}·{} = h²·new·old with h = {}, new = {}",
            step.index, step.root, step.other_coeff, step.k, step.carried_coeff, step.h, step.new_coeff,
        );
        println!("  E{}: {}x² + {}y² = z²", step.index, a, b);
    }
    match &trace.base_case {
        BaseCase::AIsOne => println!("base case: a = 1, take (1, 0, 1)"),
        BaseCase::BIsOne => println!("base case: b = 1, take (0, 1, 1)"),
        BaseCase::Equal(ts) => {
            println!("base case: a = b = {} = {}² + {}², take ({}, {}, {})", ts.n, ts.r, ts.s, ts.r, ts.s, ts.n)
        }
    }
    for (j, lifted) in trace.lifted.iter().enumerate().rev() {
        println!("lift through step {}: {lifted}", j + 1);
    }
    println!("raw solution of E0: {}", trace.raw_solution());
    println!("primitive solution: {solution}");
    println!("bound certificate: all components ≤ {}", trace.bound);
    println!("trace re-verification: {:?}", trace.verify());
}
