//! Solve general ternary equations ax² + by² + cz² = 0, including inputs
//! that need sign flips and slot permutations before the descent runs.
//!
//! Run with: cargo run --example solve_general

use legendre_descent::{solve_general, GeneralEquation, GeneralVerdict};
use num_bigint::BigInt;

fn main() {
    let triples = [
        (1i64, 1i64, -2i64),
        (3, 5, -2),
        (1, 1, -3),
        (-2, 1, 1),   // negative coefficient in the a slot
        (-3, -5, 2),  // two negatives: global sign flip
        (7, -11, -13),
    ];
    for (a, b, c) in triples {
        let eq = match GeneralEquation::new(BigInt::from(a), BigInt::from(b), BigInt::from(c)) {
            Ok(eq) => eq,
            Err(e) => {
                println!("{a}x² + {b}y² + {c}z² = 0 rejected: {e}");
                continue;
            }
        };
        match solve_general(&eq) {
            GeneralVerdict::Solvable { solution, .. } => {
                println!("{eq}\n  solution {solution}");
                assert!(eq.is_nontrivial_solution(&solution));
            }
            GeneralVerdict::NoSolution(failed) => {
                println!("{eq}\n  unsolvable: {failed}");
            }
        }
    }
}
