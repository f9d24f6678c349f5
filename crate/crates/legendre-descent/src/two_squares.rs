//! Sums of two squares by descent.
//!
//! A prime `p` with a known square root of −1 is written as `r² + s² = p` by
//! starting from `k·p = 1 + a²` and strictly shrinking the multiplier `k`
//! until it reaches 1. Square-free composites are handled by decomposing each
//! prime factor and folding with the product identity
//! `(a²+b²)(c²+d²) = (ac+bd)² + (ad−bc)²`.

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::arith::{factorize, is_prime, mod_centered};

/// Certificate `r² + s² = n` with non-negative components.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoSquares {
    pub r: BigInt,
    pub s: BigInt,
    pub n: BigInt,
}

impl TwoSquares {
    pub fn verify(&self) -> bool {
        !self.r.is_negative()
            && !self.s.is_negative()
            && &self.r * &self.r + &self.s * &self.s == self.n
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("-1 has no valid square root modulo the prime factor {prime}")]
pub struct TwoSquaresError {
    pub prime: BigInt,
}

/// From a root of −1 modulo an odd prime `p`, produce `(k, a)` with
/// `k·p = 1 + a²`, `a ≤ (p−1)/2` and `1 ≤ k < p`.
pub fn seed_multiple(p: &BigInt, root: &BigInt) -> (BigInt, BigInt) {
    assert!(is_prime(p) && p.is_odd(), "seed_multiple: p must be an odd prime");
    assert!(
        (root * root + 1u32).is_multiple_of(p),
        "seed_multiple: {root} is not a square root of -1 mod {p}"
    );
    let a = mod_centered(root, p).abs();
    let k = (&a * &a + 1u32) / p;
    assert!(k.is_positive() && &k < p);
    (k, a)
}

/// One descent step: from `h·p = a² + b²` with `1 < h < p`, produce
/// `(h′, a′, b′)` with `h′·p = a′² + b′²` and `1 ≤ h′ < h`.
///
/// Even `h` splits on the parity of `a, b`; odd `h` uses the centered
/// residues of `a, b` and the two-squares product identity.
pub fn descend_step(p: &BigInt, h: &BigInt, a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    assert!(h > &BigInt::one() && h < p, "descend_step: need 1 < h < p");
    assert_eq!(a * a + b * b, h * p, "descend_step: h·p = a² + b² violated");
    let (h2, a2, b2) = if h.is_even() {
        if a.is_even() && b.is_even() {
            // 4 | a² + b² = h·p with p odd, so 4 | h.
            assert!(h.is_multiple_of(&BigInt::from(4)), "descend_step: even case expects 4 | h");
            (h / 4, a / 2, b / 2)
        } else if a.is_odd() && b.is_odd() {
            (h / 2, (a - b).abs() / 2, (a + b) / 2)
        } else {
            unreachable!("descend_step: a² + b² even forces equal parity");
        }
    } else {
        let alpha = mod_centered(a, h);
        let beta = mod_centered(b, h);
        // α² + β² ≡ a² + b² ≡ 0 (mod h), and not both zero since h ∤ p.
        let j = (&alpha * &alpha + &beta * &beta) / h;
        assert!(j.is_positive() && &j < h);
        let a2 = (a * &alpha + b * &beta) / h;
        let b2 = (a * &beta - b * &alpha) / h;
        (j, a2.abs(), b2.abs())
    };
    assert!(&h2 < h && h2.is_positive());
    assert_eq!(&a2 * &a2 + &b2 * &b2, &h2 * p, "descend_step: output identity violated");
    (h2, a2, b2)
}

/// Write a prime as a sum of two squares, given a square root of −1 mod `p`
/// (ignored for `p = 2`).
pub fn prime_two_squares(p: &BigInt, root: &BigInt) -> TwoSquares {
    if *p == BigInt::from(2) {
        return TwoSquares {
            r: BigInt::one(),
            s: BigInt::one(),
            n: p.clone(),
        };
    }
    let (k, a) = seed_multiple(p, root);
    let mut h = k;
    let mut r = BigInt::one();
    let mut s = a;
    while !h.is_one() {
        let (h2, r2, s2) = descend_step(p, &h, &r, &s);
        h = h2;
        r = r2;
        s = s2;
    }
    let out = TwoSquares { r, s, n: p.clone() };
    debug_assert!(out.verify());
    out
}

/// Write a square-free `b ≥ 1` as a sum of two squares.
///
/// `roots` supplies, for each odd prime factor `p` of `b`, a pair `(p, r)`
/// with `r² ≡ −1 (mod p)`; this module never searches for roots itself. A
/// missing or invalid root is reported with the offending prime.
pub fn two_squares_squarefree(
    b: &BigInt,
    roots: &[(BigInt, BigInt)],
) -> Result<TwoSquares, TwoSquaresError> {
    assert!(b.is_positive(), "two_squares_squarefree: input must be >= 1");
    if b.is_one() {
        return Ok(TwoSquares {
            r: BigInt::zero(),
            s: BigInt::one(),
            n: BigInt::one(),
        });
    }
    let mut acc: Option<TwoSquares> = None;
    for (p, _) in factorize(b) {
        let part = if p == BigInt::from(2) {
            prime_two_squares(&p, &BigInt::one())
        } else {
            let root = roots
                .iter()
                .find(|(q, _)| *q == p)
                .map(|(_, r)| r)
                .ok_or_else(|| TwoSquaresError { prime: p.clone() })?;
            if !(root * root + 1u32).is_multiple_of(&p) {
                return Err(TwoSquaresError { prime: p.clone() });
            }
            prime_two_squares(&p, root)
        };
        acc = Some(match acc {
            None => part,
            Some(prev) => {
                // (r²+s²)(c²+d²) = (rc+sd)² + (rd−sc)²
                let r = (&prev.r * &part.r + &prev.s * &part.s).abs();
                let s = (&prev.r * &part.s - &prev.s * &part.r).abs();
                TwoSquares {
                    r,
                    s,
                    n: &prev.n * &part.n,
                }
            }
        });
    }
    let out = acc.expect("b > 1 has at least one prime factor");
    assert_eq!(out.n, *b);
    assert!(out.verify(), "two_squares_squarefree: recomposition failed");
    Ok(out)
}
