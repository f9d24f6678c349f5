//! Cross-check the solver against the independent brute-force oracle on a
//! small sweep, and print a residue table.
//!
//! Run with: cargo run --example brute_force_oracle

use legendre_descent::arith::is_squarefree;
use legendre_descent::oracle::{brute_force_normal, residue_table};
use legendre_descent::{solve_normal, NormalEquation, NormalVerdict};
use num_bigint::BigInt;

fn main() {
    let m = BigInt::from(13);
    let table: Vec<String> = residue_table(&m).iter().map(|v| v.to_string()).collect();
    println!("quadratic residues mod {m}: {{{}}}", table.join(", "));

    let mut agreements = 0;
    for a in 1i64..=20 {
        for b in 1i64..=20 {
            if !is_squarefree(&BigInt::from(a)) || !is_squarefree(&BigInt::from(b)) {
                continue;
            }
            let eq = NormalEquation::new(BigInt::from(a), BigInt::from(b)).unwrap();
            let oracle_hit = brute_force_normal(&BigInt::from(a), &BigInt::from(b), 500);
            match (solve_normal(&eq), oracle_hit) {
                (NormalVerdict::Solvable { solution, .. }, Some(found)) => {
                    assert!(eq.is_nontrivial_solution(&found));
                    if a <= 5 && b <= 5 {
                        println!("{eq}: solver {solution}, oracle first hit {found}");
                    }
                }
                (NormalVerdict::NoSolution(_), None) => {}
                (verdict, hit) => panic!("disagreement at ({a},{b}): {verdict:?} vs {hit:?}"),
            }
            agreements += 1;
        }
    }
    println!("solver and oracle agree on {agreements} square-free pairs");
}
