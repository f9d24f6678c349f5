//! Emit a solve result as JSON, parse it back, and re-verify every claim in
//! it from scratch (step identities, lifts, base case, bound).
//!
//! Run with: cargo run --example json_report

use legendre_descent::{solve_normal, NormalEquation, SolveReport};
use num_bigint::BigInt;

fn main() {
    let eq = NormalEquation::new(BigInt::from(17), BigInt::from(13)).unwrap();
    let report = SolveReport::from_normal(&eq, &solve_normal(&eq));

    let json = report.to_json();
    println!("{json}");

    let parsed = SolveReport::from_json(&json).unwrap();
    println!("round-trip intact: {}", parsed == report);
    println!("re-verification:  {:?}", parsed.verify());

    // Tampering with any recorded value is caught.
    let mut tampered = parsed;
    tampered.trace.as_mut().unwrap()[0].root = "9".into();
    println!("tampered trace:   {:?}", tampered.verify());
}
