//! Decompose primes and square-free numbers into sums of two squares.
//!
//! Works exactly when −1 is a quadratic residue modulo every odd prime
//! factor, i.e. all odd prime factors are ≡ 1 (mod 4).
//!
//! Run with: cargo run --example sum_of_two_squares

use legendre_descent::arith::factorize;
use legendre_descent::residues::sqrt_mod_prime;
use legendre_descent::two_squares::{prime_two_squares, two_squares_squarefree};
use num_bigint::BigInt;

fn roots_of_minus_one(n: &BigInt) -> Vec<(BigInt, BigInt)> {
    let minus_one = BigInt::from(-1);
    factorize(n)
        .into_iter()
        .filter_map(|(p, _)| sqrt_mod_prime(&minus_one, &p).map(|r| (p, r)))
        .collect()
}

fn main() {
    for p in [2i64, 5, 13, 29, 97, 9973] {
        let p = BigInt::from(p);
        let root = if p == BigInt::from(2) {
            BigInt::from(1)
        } else {
            sqrt_mod_prime(&BigInt::from(-1), &p).expect("p ≡ 1 (mod 4)")
        };
        let ts = prime_two_squares(&p, &root);
        println!("{} = {}² + {}²", ts.n, ts.r, ts.s);
    }

    for n in [1i64, 65, 410, 1105] {
        let n = BigInt::from(n);
        match two_squares_squarefree(&n, &roots_of_minus_one(&n)) {
            Ok(ts) => println!("{} = {}² + {}²", ts.n, ts.r, ts.s),
            Err(e) => println!("{n}: {e}"),
        }
    }

    // 21 = 3·7 is not a sum of two squares; the error names the prime.
    let n = BigInt::from(21);
    println!("{n}: {}", two_squares_squarefree(&n, &roots_of_minus_one(&n)).unwrap_err());
}
