//! Arbitrary-precision integer primitives: gcd/Bézout, integer square root,
//! trial-division factorization, square-free decomposition, centered modular
//! reduction, modular inverses and the base-4 integer logarithm.
//!
//! Everything here is exact. Preconditions are enforced with `assert!`; a
//! violated precondition is a caller bug, not a recoverable condition.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Result of the extended Euclidean algorithm: `u·x + v·y = g = gcd(|x|, |y|)`.
///
/// `g = 0` only when both inputs are zero, in which case `u = v = 0` and the
/// Bézout identity degenerates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BezoutCertificate {
    pub g: BigInt,
    pub u: BigInt,
    pub v: BigInt,
}

impl BezoutCertificate {
    /// Re-multiplication check of the certificate against the original inputs.
    pub fn verify(&self, x: &BigInt, y: &BigInt) -> bool {
        &self.u * x + &self.v * y == self.g && !self.g.is_negative()
    }
}

/// Extended gcd with Bézout coefficients for arbitrary signed inputs.
pub fn gcd_bezout(x: &BigInt, y: &BigInt) -> BezoutCertificate {
    if x.is_zero() && y.is_zero() {
        return BezoutCertificate {
            g: BigInt::zero(),
            u: BigInt::zero(),
            v: BigInt::zero(),
        };
    }
    let e = x.extended_gcd(y);
    // num-integer may return a negative gcd for negative inputs; normalize.
    if e.gcd.is_negative() {
        BezoutCertificate {
            g: -e.gcd,
            u: -e.x,
            v: -e.y,
        }
    } else {
        BezoutCertificate {
            g: e.gcd,
            u: e.x,
            v: e.y,
        }
    }
}

/// Non-negative gcd of two signed integers.
pub fn gcd(x: &BigInt, y: &BigInt) -> BigInt {
    x.gcd(y)
}

/// Largest `r` with `r² ≤ n`.
pub fn isqrt(n: &BigInt) -> BigInt {
    assert!(!n.is_negative(), "isqrt: negative input {n}");
    n.sqrt()
}

/// Whether `n` is a perfect square.
pub fn is_square(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    let r = n.sqrt();
    &r * &r == *n
}

/// Deterministic trial-division primality check.
pub fn is_prime(n: &BigInt) -> bool {
    if *n < BigInt::from(2) {
        return false;
    }
    let two = BigInt::from(2);
    if n.is_even() {
        return *n == two;
    }
    let mut d = BigInt::from(3);
    while &d * &d <= *n {
        if n.is_multiple_of(&d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Prime factorization by trial division up to `isqrt(n)`.
///
/// Returns `(prime, exponent)` pairs with strictly increasing primes; the
/// empty list for `n = 1`.
pub fn factorize(n: &BigInt) -> Vec<(BigInt, u32)> {
    assert!(n.is_positive(), "factorize: input must be >= 1, got {n}");
    let mut rest = n.clone();
    let mut out = Vec::new();
    let mut push = |p: BigInt, rest: &mut BigInt| {
        let mut e = 0u32;
        while rest.is_multiple_of(&p) {
            *rest /= &p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
    };
    push(BigInt::from(2), &mut rest);
    push(BigInt::from(3), &mut rest);
    // Wheel over 6k±1.
    let mut d = BigInt::from(5);
    while &d * &d <= rest {
        push(d.clone(), &mut rest);
        push(&d + 2, &mut rest);
        d += 6;
    }
    if rest > BigInt::one() {
        out.push((rest, 1));
    }
    out
}

/// Decomposition `n = h²·s` with `h ≥ 1` and `|s|` square-free.
///
/// The sign of `n` is carried by the free part `s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareFreeSplit {
    pub h: BigInt,
    pub s: BigInt,
}

impl SquareFreeSplit {
    pub fn recompose(&self) -> BigInt {
        &self.h * &self.h * &self.s
    }
}

/// Factor out the largest square: `n = h²·s` with `|s|` square-free.
pub fn squarefree_split(n: &BigInt) -> SquareFreeSplit {
    assert!(!n.is_zero(), "squarefree_split: input must be non-zero");
    let mut h = BigInt::one();
    let mut s = BigInt::one();
    for (p, e) in factorize(&n.abs()) {
        if e >= 2 {
            h *= p.pow(e / 2);
        }
        if e % 2 == 1 {
            s *= p;
        }
    }
    if n.is_negative() {
        s = -s;
    }
    SquareFreeSplit { h, s }
}

/// Whether no prime square divides `n`.
pub fn is_squarefree(n: &BigInt) -> bool {
    assert!(!n.is_zero(), "is_squarefree: input must be non-zero");
    squarefree_split(n).h.is_one()
}

/// Canonical representative of `a` modulo `m` in `[0, m)`.
pub fn mod_reduce(a: &BigInt, m: &BigInt) -> BigInt {
    assert!(m.is_positive(), "mod_reduce: modulus must be >= 1");
    a.mod_floor(m)
}

/// Inverse of `a` modulo `m`, in `[0, m)`; `None` when `gcd(a, m) ≠ 1`.
///
/// For `m = 1` everything is congruent to 0 and the inverse is 0.
pub fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    assert!(m.is_positive(), "mod_inverse: modulus must be >= 1");
    if m.is_one() {
        return Some(BigInt::zero());
    }
    let cert = gcd_bezout(a, m);
    if !cert.g.is_one() {
        return None;
    }
    Some(mod_reduce(&cert.u, m))
}

/// Representative `b ≡ a (mod m)` with `−m/2 < b ≤ m/2`.
///
/// The tie at exactly `m/2` (even `m`) resolves to `+m/2`.
pub fn mod_centered(a: &BigInt, m: &BigInt) -> BigInt {
    let mut b = mod_reduce(a, m);
    if &b * 2 > *m {
        b -= m;
    }
    b
}

/// Smallest `l ≥ 0` with `4^l ≥ n`.
pub fn ceil_log4(n: &BigInt) -> u32 {
    assert!(n.is_positive(), "ceil_log4: input must be >= 1, got {n}");
    let mut l = 0u32;
    let mut pow = BigInt::one();
    while pow < *n {
        pow *= 4;
        l += 1;
    }
    l
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn gcd_bezout_examples() {
        let c = gcd_bezout(&big(6), &big(4));
        assert_eq!(c.g, big(2));
        assert!(c.verify(&big(6), &big(4)));

        let c = gcd_bezout(&big(0), &big(5));
        assert_eq!(c.g, big(5));
        assert!(c.verify(&big(0), &big(5)));

        let c = gcd_bezout(&big(17), &big(13));
        assert_eq!(c.g, big(1));
        assert_eq!((c.u.clone(), c.v.clone()), (big(-3), big(4)));
        assert!(c.verify(&big(17), &big(13)));
    }

    #[test]
    fn gcd_bezout_zero_zero() {
        let c = gcd_bezout(&big(0), &big(0));
        assert_eq!(c.g, big(0));
        assert_eq!((c.u, c.v), (big(0), big(0)));
    }

    #[test]
    fn isqrt_examples() {
        assert_eq!(isqrt(&big(0)), big(0));
        assert_eq!(isqrt(&big(16)), big(4));
        assert_eq!(isqrt(&big(17)), big(4));
    }

    #[test]
    #[should_panic(expected = "negative input")]
    fn isqrt_rejects_negative() {
        isqrt(&big(-1));
    }

    #[test]
    fn factorize_examples() {
        assert_eq!(factorize(&big(1)), vec![]);
        assert_eq!(factorize(&big(12)), vec![(big(2), 2), (big(3), 1)]);
        assert_eq!(factorize(&big(13)), vec![(big(13), 1)]);
        assert_eq!(
            factorize(&big(2 * 2 * 3 * 49 * 101)),
            vec![(big(2), 2), (big(3), 1), (big(7), 2), (big(101), 1)]
        );
    }

    #[test]
    #[should_panic(expected = "must be >= 1")]
    fn factorize_rejects_zero() {
        factorize(&big(0));
    }

    #[test]
    fn squarefree_split_examples() {
        assert_eq!(
            squarefree_split(&big(12)),
            SquareFreeSplit { h: big(2), s: big(3) }
        );
        assert_eq!(
            squarefree_split(&big(7)),
            SquareFreeSplit { h: big(1), s: big(7) }
        );
        assert_eq!(
            squarefree_split(&big(-18)),
            SquareFreeSplit { h: big(3), s: big(-2) }
        );
    }

    #[test]
    fn is_squarefree_examples() {
        assert!(is_squarefree(&big(30)));
        assert!(!is_squarefree(&big(12)));
        assert!(is_squarefree(&big(1)));
        assert!(is_squarefree(&big(-2)));
        assert!(!is_squarefree(&big(-18)));
    }

    #[test]
    fn mod_inverse_examples() {
        assert_eq!(mod_inverse(&big(1), &big(7)), Some(big(1)));
        assert_eq!(mod_inverse(&big(4), &big(13)), Some(big(10)));
        assert_eq!(mod_inverse(&big(5), &big(1)), Some(big(0)));
        assert_eq!(mod_inverse(&big(4), &big(6)), None);
    }

    #[test]
    fn mod_centered_examples() {
        assert_eq!(mod_centered(&big(7), &big(5)), big(2));
        assert_eq!(mod_centered(&big(8), &big(5)), big(-2));
        // tie at m/2 goes to +m/2
        assert_eq!(mod_centered(&big(3), &big(6)), big(3));
        assert_eq!(mod_centered(&big(-3), &big(5)), big(2));
    }

    #[test]
    fn ceil_log4_examples() {
        assert_eq!(ceil_log4(&big(1)), 0);
        assert_eq!(ceil_log4(&big(2)), 1);
        assert_eq!(ceil_log4(&big(4)), 1);
        assert_eq!(ceil_log4(&big(5)), 2);
        assert_eq!(ceil_log4(&big(16)), 2);
        assert_eq!(ceil_log4(&big(17)), 3);
    }

    #[test]
    fn is_prime_small() {
        let primes: Vec<i64> = (2..100).filter(|&n| is_prime(&big(n))).collect();
        assert_eq!(
            primes,
            vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97]
        );
        assert!(!is_prime(&big(1)));
        assert!(!is_prime(&big(0)));
        assert!(!is_prime(&big(-7)));
    }

    proptest! {
        #[test]
        fn bezout_identity_holds(x in -10_000i64..10_000, y in -10_000i64..10_000) {
            let c = gcd_bezout(&big(x), &big(y));
            prop_assert!(c.verify(&big(x), &big(y)));
            prop_assert_eq!(&c.g, &big(x).gcd(&big(y)));
        }

        #[test]
        fn isqrt_bounds(n in 0i64..1_000_000_000) {
            let r = isqrt(&big(n));
            prop_assert!(&r * &r <= big(n));
            prop_assert!((&r + 1) * (&r + 1) > big(n));
        }

        #[test]
        fn squarefree_split_recomposes(n in (-1_000_000i64..1_000_000).prop_filter("nonzero", |n| *n != 0)) {
            let sp = squarefree_split(&big(n));
            prop_assert_eq!(sp.recompose(), big(n));
            prop_assert!(sp.h.is_positive());
            prop_assert!(is_squarefree(&sp.s));
        }

        #[test]
        fn factorize_recomposes_with_prime_factors(n in 1i64..200_000) {
            let f = factorize(&big(n));
            let mut prod = BigInt::one();
            let mut prev = BigInt::one();
            for (p, e) in &f {
                prop_assert!(is_prime(p));
                prop_assert!(*p > prev);
                prev = p.clone();
                prod *= p.pow(*e);
            }
            prop_assert_eq!(prod, big(n));
        }

        #[test]
        fn mod_centered_is_congruent_and_small(a in -100_000i64..100_000, m in 1i64..10_000) {
            let b = mod_centered(&big(a), &big(m));
            prop_assert!((big(a) - &b).is_multiple_of(&big(m)));
            prop_assert!(&b * 2 <= big(m));
            prop_assert!(&b * 2 > -big(m));
        }

        #[test]
        fn ceil_log4_brackets(n in 2i64..1_000_000_000) {
            let l = ceil_log4(&big(n));
            prop_assert!(BigInt::from(4).pow(l) >= big(n));
            prop_assert!(BigInt::from(4).pow(l - 1) < big(n));
        }
    }
}
