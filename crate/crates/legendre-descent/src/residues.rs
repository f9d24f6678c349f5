//! Quadratic-residue testing and square-root witnesses modulo primes and
//! square-free composites.
//!
//! A residue fact "a is a square mod m" is never just a boolean here: it is
//! carried by a [`ResidueWitness`] holding an explicit root that callers can
//! re-verify. Composite moduli are handled by per-prime roots glued together
//! with the Chinese remainder theorem.

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::arith::{
    factorize, gcd, is_prime, is_squarefree, mod_centered, mod_inverse, mod_reduce,
};

/// Below this modulus, square roots are found by exhaustive search; above it,
/// Tonelli–Shanks.
const EXHAUSTIVE_SQRT_LIMIT: u64 = 1_000_000;

/// Certificate that `value` is a square modulo `modulus`: `root² ≡ value`.
///
/// Roots are canonical: `0 ≤ root ≤ modulus/2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidueWitness {
    pub value: BigInt,
    pub modulus: BigInt,
    pub root: BigInt,
}

impl ResidueWitness {
    /// Recompute `root² ≡ value (mod modulus)` and the canonical-root bound.
    pub fn verify(&self) -> bool {
        self.modulus.is_positive()
            && !self.root.is_negative()
            && &self.root * 2 <= self.modulus
            && (&self.root * &self.root - &self.value).is_multiple_of(&self.modulus)
    }
}

impl std::fmt::Display for ResidueWitness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{}² ≡ {} (mod {})",
            self.root, self.value, self.modulus
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CongruenceError {
    #[error("modulus {0} is not positive")]
    NonPositiveModulus(BigInt),
    #[error("moduli {0} and {1} are not coprime")]
    NonCoprimeModuli(BigInt, BigInt),
}

/// A system `u ≡ rᵢ (mod fᵢ)` with pairwise coprime moduli.
///
/// Residues are normalized into `[0, fᵢ)` on construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CongruenceSystem {
    pairs: Vec<(BigInt, BigInt)>,
}

impl CongruenceSystem {
    pub fn new(pairs: Vec<(BigInt, BigInt)>) -> Result<Self, CongruenceError> {
        for (_, f) in &pairs {
            if !f.is_positive() {
                return Err(CongruenceError::NonPositiveModulus(f.clone()));
            }
        }
        for i in 0..pairs.len() {
            for j in i + 1..pairs.len() {
                if !gcd(&pairs[i].1, &pairs[j].1).is_one() {
                    return Err(CongruenceError::NonCoprimeModuli(
                        pairs[i].1.clone(),
                        pairs[j].1.clone(),
                    ));
                }
            }
        }
        let pairs = pairs
            .into_iter()
            .map(|(r, f)| (mod_reduce(&r, &f), f))
            .collect();
        Ok(Self { pairs })
    }

    pub fn pairs(&self) -> &[(BigInt, BigInt)] {
        &self.pairs
    }

    /// Product of the moduli (1 for the empty system).
    pub fn modulus(&self) -> BigInt {
        self.pairs.iter().fold(BigInt::one(), |acc, (_, f)| acc * f)
    }
}

/// The unique `u` with `0 ≤ u < ∏fᵢ` and `u ≡ rᵢ (mod fᵢ)` for all `i`.
///
/// The empty system yields 0 (modulus 1).
pub fn crt_solve(sys: &CongruenceSystem) -> BigInt {
    let mut u = BigInt::zero();
    let mut m = BigInt::one();
    for (r, f) in sys.pairs() {
        // u' ≡ u (mod m), u' ≡ r (mod f):  u' = u + m·t with t inverse-adjusted.
        let inv = mod_inverse(&mod_reduce(&m, f), f)
            .expect("crt_solve: moduli validated pairwise coprime");
        let t = mod_reduce(&((r - &u) * inv), f);
        u += &m * t;
        m *= f;
    }
    u
}

/// Canonical square root of `a` modulo a prime `p`, if one exists.
///
/// Returns the root in `[0, p/2]`. `a` is reduced into `[0, p)` first.
pub fn sqrt_mod_prime(a: &BigInt, p: &BigInt) -> Option<BigInt> {
    assert!(is_prime(p), "sqrt_mod_prime: {p} is not prime");
    let a = mod_reduce(a, p);
    if a.is_zero() {
        return Some(BigInt::zero());
    }
    if let Some(pu) = p.to_u64().filter(|&pu| pu <= EXHAUSTIVE_SQRT_LIMIT) {
        let au = a.to_u64().expect("reduced residue fits u64");
        for r in 0..=pu / 2 {
            if (r as u128 * r as u128) % pu as u128 == au as u128 {
                return Some(BigInt::from(r));
            }
        }
        return None;
    }
    // Euler's criterion as a residuosity test, then Tonelli–Shanks.
    let one = BigInt::one();
    let exp = (p - &one) / 2;
    if a.modpow(&exp, p) != one {
        return None;
    }
    let r = tonelli_shanks(&a, p);
    debug_assert!((&r * &r - &a).is_multiple_of(p));
    Some((&r).min(&(p - &r)).clone())
}

/// Tonelli–Shanks for an odd prime `p` and a known quadratic residue
/// `a ∈ [1, p)`.
fn tonelli_shanks(a: &BigInt, p: &BigInt) -> BigInt {
    let one = BigInt::one();
    if p.mod_floor(&BigInt::from(4)) == BigInt::from(3) {
        return a.modpow(&((p + &one) / 4), p);
    }
    let mut q: BigInt = p - &one;
    let mut s = 0u32;
    while q.is_even() {
        q /= 2;
        s += 1;
    }
    // Smallest nonresidue; the scan is deterministic.
    let legendre_exp = (p - &one) / 2;
    let minus_one = p - &one;
    let mut n = BigInt::from(2);
    while n.modpow(&legendre_exp, p) != minus_one {
        n += 1;
    }
    let mut m = s;
    let mut c = n.modpow(&q, p);
    let mut t = a.modpow(&q, p);
    let mut r = a.modpow(&((&q + &one) / 2), p);
    while t != one {
        let mut i = 0u32;
        let mut t2 = t.clone();
        while t2 != one {
            t2 = &t2 * &t2 % p;
            i += 1;
        }
        let b = c.modpow(&(BigInt::one() << (m - i - 1)), p);
        r = r * &b % p;
        c = &b * &b % p;
        t = t * &c % p;
        m = i;
    }
    r
}

/// Glue two witnesses for the same value over coprime moduli into one
/// witness modulo the product: solve `x ≡ α (mod m), x ≡ β (mod n)` by CRT
/// and map the result into `[0, mn/2]`.
pub fn combine_roots(w1: &ResidueWitness, w2: &ResidueWitness) -> ResidueWitness {
    assert_eq!(w1.value, w2.value, "combine_roots: witnesses for different values");
    assert!(
        gcd(&w1.modulus, &w2.modulus).is_one(),
        "combine_roots: moduli {} and {} are not coprime",
        w1.modulus,
        w2.modulus
    );
    debug_assert!(w1.verify() && w2.verify());
    let sys = CongruenceSystem::new(vec![
        (w1.root.clone(), w1.modulus.clone()),
        (w2.root.clone(), w2.modulus.clone()),
    ])
    .expect("coprimality just checked");
    let modulus = &w1.modulus * &w2.modulus;
    let root = mod_centered(&crt_solve(&sys), &modulus).abs();
    let combined = ResidueWitness {
        value: w1.value.clone(),
        modulus,
        root,
    };
    assert!(combined.verify(), "combine_roots: combined witness failed verification");
    combined
}

/// Canonical square-root witness of `a` modulo a square-free `m ≥ 1`.
///
/// Exists iff `a` is a quadratic residue modulo every prime factor of `m`.
/// The root is the CRT combination of the per-prime canonical roots, mapped
/// into `[0, m/2]`.
pub fn sqrt_mod_squarefree(a: &BigInt, m: &BigInt) -> Option<ResidueWitness> {
    assert!(m.is_positive(), "sqrt_mod_squarefree: modulus must be >= 1");
    assert!(is_squarefree(m), "sqrt_mod_squarefree: {m} is not square-free");
    if m.is_one() {
        return Some(ResidueWitness {
            value: a.clone(),
            modulus: BigInt::one(),
            root: BigInt::zero(),
        });
    }
    let mut pairs = Vec::new();
    for (p, _) in factorize(m) {
        let root = sqrt_mod_prime(a, &p)?;
        pairs.push((root, p));
    }
    let sys = CongruenceSystem::new(pairs).expect("distinct primes are coprime");
    let root = mod_centered(&crt_solve(&sys), m).abs();
    let w = ResidueWitness {
        value: a.clone(),
        modulus: m.clone(),
        root,
    };
    debug_assert!(w.verify());
    Some(w)
}

/// Whether `a` is a square modulo the square-free `m`.
pub fn is_square_mod(a: &BigInt, m: &BigInt) -> bool {
    sqrt_mod_squarefree(a, m).is_some()
}
