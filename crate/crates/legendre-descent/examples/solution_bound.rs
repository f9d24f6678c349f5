//! Compare the certified component bound with the solutions actually
//! constructed by the descent.
//!
//! Run with: cargo run --example solution_bound

use legendre_descent::{solution_bound, solve_normal, NormalEquation, NormalVerdict};
use num_bigint::BigInt;

fn main() {
    println!("{:>6} {:>6} {:>14} {:>20} {:>20}", "a", "b", "bound", "raw solution", "primitive");
    for (a, b) in [(1i64, 1i64), (3, 13), (13, 3), (17, 13), (41, 5), (53, 46), (59, 58)] {
        let eq = NormalEquation::new(BigInt::from(a), BigInt::from(b)).unwrap();
        let bound = solution_bound(&BigInt::from(a), &BigInt::from(b));
        match solve_normal(&eq) {
            NormalVerdict::Solvable { solution, trace } => {
                assert_eq!(&bound, &trace.bound);
                for c in trace.raw_solution().components() {
                    assert!(*c <= bound);
                }
                println!(
                    "{:>6} {:>6} {:>14} {:>20} {:>20}",
                    a,
                    b,
                    bound.to_string(),
                    trace.raw_solution().to_string(),
                    solution.to_string()
                );
            }
            NormalVerdict::NoSolution(f) => {
                println!("{:>6} {:>6} {:>14} {:>20}", a, b, bound.to_string(), format!("({f})"));
            }
        }
    }
}
