//! Solve normal-form equations ax² + by² = z² and inspect the verdicts.
//!
//! Run with: cargo run --example solve_normal

use legendre_descent::{solve_normal, NormalEquation, NormalVerdict};
use num_bigint::BigInt;

fn main() {
    for (a, b) in [(3i64, 13i64), (17, 13), (6, 10), (5, 5), (2, 3), (61, 3)] {
        let eq = NormalEquation::new(BigInt::from(a), BigInt::from(b)).unwrap();
        match solve_normal(&eq) {
            NormalVerdict::Solvable { solution, trace } => {
                println!("{eq}");
                println!("  solution {solution} after {} descent step(s)", trace.length());
                println!("  every component is at most {}", trace.bound);
                assert!(eq.is_nontrivial_solution(&solution));
            }
            NormalVerdict::NoSolution(failed) => {
                println!("{eq}");
                println!("  unsolvable: {failed}");
            }
        }
    }
}
