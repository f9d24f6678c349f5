//! Independent brute-force ground truth for the solvers.
//!
//! Nothing in this module knows about descent or residue conditions: it scans
//! solution candidates exhaustively and verifies hits by substitution. Tests
//! use it as the oracle that the algebraic machinery must agree with.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::descent::Solution;

/// Hard cap on scan bounds; the oracle is for desk-scale reproduction only.
const MAX_LIMIT: u64 = 1_000_000_000;

/// Residue-class tables are only built for moduli up to this size.
const CLASS_TABLE_LIMIT: u64 = 1 << 20;

const fn square_mask(modulus: u64) -> u128 {
    let mut mask = 0u128;
    let mut r = 0u64;
    while r < modulus {
        mask |= 1u128 << ((r * r) % modulus);
        r += 1;
    }
    mask
}

const SQUARES_MOD_64: u128 = square_mask(64);
const SQUARES_MOD_63: u128 = square_mask(63);
const SQUARES_MOD_65: u128 = square_mask(65);

fn isqrt_u64(s: u64) -> u64 {
    let mut r = (s as f64).sqrt() as u64;
    while r > 0 && r.checked_mul(r).is_none_or(|rr| rr > s) {
        r -= 1;
    }
    while (r + 1).checked_mul(r + 1).is_some_and(|rr| rr <= s) {
        r += 1;
    }
    r
}

fn isqrt_u128(s: u128) -> u128 {
    if let Ok(small) = u64::try_from(s) {
        return isqrt_u64(small) as u128;
    }
    let mut r = (s as f64).sqrt() as u128;
    while r > 0 && r.checked_mul(r).is_none_or(|rr| rr > s) {
        r -= 1;
    }
    while (r + 1).checked_mul(r + 1).is_some_and(|rr| rr <= s) {
        r += 1;
    }
    r
}

/// Exact perfect-square test with cheap congruence filters in front.
#[inline]
fn as_square_u64(s: u64) -> Option<u64> {
    if (SQUARES_MOD_64 >> (s & 63)) & 1 == 0 {
        return None;
    }
    if (SQUARES_MOD_63 >> (s % 63)) & 1 == 0 {
        return None;
    }
    if (SQUARES_MOD_65 >> (s % 65)) & 1 == 0 {
        return None;
    }
    let r = isqrt_u64(s);
    (r * r == s).then_some(r)
}

fn as_square_u128(s: u128) -> Option<u128> {
    if (SQUARES_MOD_64 >> (s & 63)) & 1 == 0 {
        return None;
    }
    let r = isqrt_u128(s);
    (r * r == s).then_some(r)
}

fn solution_from(x: u64, y: u64, z: u128) -> Solution {
    Solution {
        x: BigInt::from(x),
        y: BigInt::from(y),
        z: BigInt::from(z),
    }
}

/// Scan `x, y ∈ [0, limit]²` for the first nontrivial `(x, y)` in
/// lexicographic order with `a·x² + b·y²` a perfect square.
///
/// The square root `z` is not bounded by `limit`.
pub fn brute_force_normal(a: &BigInt, b: &BigInt, limit: u64) -> Option<Solution> {
    assert!(
        a.is_positive() && b.is_positive(),
        "brute_force_normal: coefficients must be >= 1"
    );
    assert!((1..=MAX_LIMIT).contains(&limit), "oracle limit out of range");
    let l2 = (limit as u128) * (limit as u128);
    if let (Some(au), Some(bu)) = (a.to_u64(), b.to_u64()) {
        // Budget for the incremental u64 loop: the largest value reached is
        // (a+b)·limit², after which wrapping arithmetic cannot occur.
        if (au as u128 + bu as u128).checked_mul(l2).is_some_and(|m| m <= u64::MAX as u128) {
            return scan_normal_u64(au, bu, limit);
        }
    }
    let aw = a.to_i128().expect("brute_force_normal: coefficient exceeds i128");
    let bw = b.to_i128().expect("brute_force_normal: coefficient exceeds i128");
    assert!(
        (aw as u128 + bw as u128).checked_mul(l2).is_some(),
        "brute_force_normal: scan values exceed u128"
    );
    scan_normal_u128(aw as u128, bw as u128, limit)
}

fn scan_normal_u64(a: u64, b: u64, limit: u64) -> Option<Solution> {
    let two_b = 2 * b;
    for x in 0..=limit {
        let mut s = a * x * x;
        let mut dy = b; // s(y+1) − s(y) = b·(2y+1)
        for y in 0..=limit {
            if (x, y) != (0, 0) {
                if let Some(z) = as_square_u64(s) {
                    return Some(solution_from(x, y, z as u128));
                }
            }
            s = s.wrapping_add(dy);
            dy = dy.wrapping_add(two_b);
        }
    }
    None
}

fn scan_normal_u128(a: u128, b: u128, limit: u64) -> Option<Solution> {
    for x in 0..=limit {
        let base = a * (x as u128) * (x as u128);
        for y in 0..=limit {
            if (x, y) == (0, 0) {
                continue;
            }
            let s = base + b * (y as u128) * (y as u128);
            if let Some(z) = as_square_u128(s) {
                return Some(solution_from(x, y, z));
            }
        }
    }
    None
}

/// Scan `x, y, z ∈ [0, limit]³` for the first nontrivial zero of
/// `a·x² + b·y² + c·z²` in lexicographic `(x, y, z)` order.
///
/// The z dimension is pruned algebraically: for fixed `(x, y)` the only
/// candidate is `z² = −(a·x²+b·y²)/c`, and the admissible `y` for each `x`
/// are a union of residue classes modulo `|c|` inside an exactly computed
/// window (the values where `z²` would land in `[0, limit²]`).
pub fn brute_force_general(a: &BigInt, b: &BigInt, c: &BigInt, limit: u64) -> Option<Solution> {
    assert!(
        !a.is_zero() && !b.is_zero() && !c.is_zero(),
        "brute_force_general: coefficients must be non-zero"
    );
    assert!((1..=MAX_LIMIT).contains(&limit), "oracle limit out of range");
    let aw = a.to_i128().expect("brute_force_general: coefficient exceeds i128");
    let bw = b.to_i128().expect("brute_force_general: coefficient exceeds i128");
    let cw = c.to_i128().expect("brute_force_general: coefficient exceeds i128");
    let budget = aw.unsigned_abs().max(bw.unsigned_abs()).max(cw.unsigned_abs());
    let l2 = (limit as u128) * (limit as u128);
    assert!(
        budget.checked_mul(l2).and_then(|v| v.checked_mul(4)).is_some(),
        "brute_force_general: scan values exceed i128"
    );
    scan_general(aw, bw, cw, limit)
}

fn scan_general(a: i128, b: i128, c: i128, limit: u64) -> Option<Solution> {
    let l2 = (limit as i128) * (limit as i128);
    // t = −s/c must land in [0, limit²], which bounds s to one side of zero.
    let (s_lo, s_hi) = if c < 0 { (0, -c * l2) } else { (-c * l2, 0) };
    let classes = (c.unsigned_abs() <= CLASS_TABLE_LIMIT as u128)
        .then(|| residue_classes(b, c.unsigned_abs() as u64));
    let b_abs = b.unsigned_abs();

    for x in 0..=limit {
        let u = a * (x as i128) * (x as i128);
        // Window of y with s = u + b·y² inside [s_lo, s_hi].
        let (lo_num, hi_num) = if b > 0 {
            (s_lo - u, s_hi - u)
        } else {
            (u - s_hi, u - s_lo)
        };
        if hi_num < 0 {
            continue;
        }
        let y_max_sq = (hi_num as u128) / b_abs;
        let mut y_max = isqrt_u128(y_max_sq).min(limit as u128) as u64;
        let y_min = if lo_num <= 0 {
            0
        } else {
            let q = (lo_num as u128).div_ceil(b_abs);
            let r = isqrt_u128(q);
            (if r * r == q { r } else { r + 1 }) as u64
        };
        if y_min > y_max {
            continue;
        }
        let mut best: Option<(u64, u64)> = None;
        let try_candidate = |y: u64, best: &mut Option<(u64, u64)>| -> bool {
            let s = u + b * (y as i128) * (y as i128);
            let t = -s / c;
            debug_assert_eq!(s % c, 0);
            if t < 0 || t > l2 {
                return false;
            }
            if let Some(z) = as_square_u64(t as u64) {
                if x != 0 || y != 0 {
                    *best = Some((y, z));
                    return true;
                }
            }
            false
        };
        match &classes {
            Some(classes) => {
                let m = c.unsigned_abs() as u64;
                let v = (-u).rem_euclid(m as i128) as usize;
                for &y0 in &classes[v] {
                    let start = if y0 as u64 >= y_min {
                        y0 as u64
                    } else {
                        let k = (y_min - y0 as u64).div_ceil(m);
                        y0 as u64 + k * m
                    };
                    let mut y = start;
                    while y <= y_max {
                        if try_candidate(y, &mut best) {
                            // Later classes only matter below this hit.
                            y_max = y.saturating_sub(1);
                            break;
                        }
                        match y.checked_add(m) {
                            Some(next) => y = next,
                            None => break,
                        }
                    }
                }
            }
            None => {
                for y in y_min..=y_max {
                    let s = u + b * (y as i128) * (y as i128);
                    if s % c != 0 {
                        continue;
                    }
                    if try_candidate(y, &mut best) {
                        break;
                    }
                }
            }
        }
        if let Some((y, z)) = best {
            return Some(solution_from(x, y, z as u128));
        }
    }
    None
}

/// For each residue `v` mod `m`, the `y₀ ∈ [0, m)` with `b·y₀² ≡ v (mod m)`.
fn residue_classes(b: i128, m: u64) -> Vec<Vec<u32>> {
    let mut classes = vec![Vec::new(); m as usize];
    let bm = b.rem_euclid(m as i128) as u64;
    for y0 in 0..m {
        let v = (bm * ((y0 * y0) % m)) % m;
        classes[v as usize].push(y0 as u32);
    }
    classes
}

/// The set `{ r² mod m : 0 ≤ r ≤ m/2 }`, sorted ascending.
pub fn residue_table(m: &BigInt) -> Vec<BigInt> {
    assert!(m.is_positive(), "residue_table: modulus must be >= 1");
    let mu = m
        .to_u64()
        .filter(|&mu| mu <= MAX_LIMIT)
        .expect("residue_table: modulus beyond desk scale");
    let mut set = std::collections::BTreeSet::new();
    for r in 0..=mu / 2 {
        set.insert(((r as u128 * r as u128) % mu as u128) as u64);
    }
    set.into_iter().map(BigInt::from).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    fn sol(x: i64, y: i64, z: i64) -> Solution {
        Solution {
            x: big(x),
            y: big(y),
            z: big(z),
        }
    }

    #[test]
    fn normal_examples() {
        assert_eq!(brute_force_normal(&big(3), &big(13), 5), Some(sol(1, 1, 4)));
        assert_eq!(brute_force_normal(&big(2), &big(3), 1000), None);
        assert_eq!(brute_force_normal(&big(1), &big(7), 10), Some(sol(1, 0, 1)));
        // a=b=1 finds the y-axis point first
        assert_eq!(brute_force_normal(&big(1), &big(1), 10), Some(sol(0, 1, 1)));
    }

    #[test]
    fn normal_unbounded_z() {
        // 3·1² + 13·1² = 16: z = 4 exceeds the scan limit but is still reported.
        assert_eq!(brute_force_normal(&big(3), &big(13), 1), Some(sol(1, 1, 4)));
    }

    #[test]
    fn normal_wide_path_agrees() {
        // Force the u128 path with an artificially huge limit budget check:
        // coefficients beyond the u64 incremental budget.
        let a = BigInt::from(u64::MAX) + 1u32;
        let got = brute_force_normal(&a, &big(1), 2);
        // a·0 + 1·y² square at y=1.
        assert_eq!(got, Some(sol(0, 1, 1)));
    }

    #[test]
    fn general_examples() {
        assert_eq!(
            brute_force_general(&big(1), &big(1), &big(-2), 2),
            Some(sol(1, 1, 1))
        );
        assert_eq!(brute_force_general(&big(1), &big(1), &big(-3), 1000), None);
        assert_eq!(
            brute_force_general(&big(3), &big(5), &big(-2), 3),
            Some(sol(1, 1, 2))
        );
    }

    #[test]
    fn general_sign_arrangements() {
        // Negative leading coefficient: −2x² + y² + z² = 0 at (1,1,1).
        assert_eq!(
            brute_force_general(&big(-2), &big(1), &big(1), 5),
            Some(sol(1, 1, 1))
        );
        // Two negatives: 3x² − y² − 2z² = 0 at (1,1,1).
        assert_eq!(
            brute_force_general(&big(3), &big(-1), &big(-2), 5),
            Some(sol(1, 1, 1))
        );
    }

    #[test]
    fn general_z_is_bounded_by_limit() {
        // 3x² + 13y² − z² = 0 needs z = 4 at (1,1); with limit 1 there is no hit.
        assert_eq!(brute_force_general(&big(3), &big(13), &big(-1), 1), None);
        assert_eq!(
            brute_force_general(&big(3), &big(13), &big(-1), 4),
            Some(sol(1, 1, 4))
        );
    }

    #[test]
    fn general_fallback_for_large_modulus() {
        // |c| above the residue-class table limit takes the plain-division path
        let c = big(-2_097_169);
        assert_eq!(
            brute_force_general(&big(2_097_169), &big(1), &c, 3),
            Some(sol(1, 0, 1))
        );
        assert_eq!(brute_force_general(&big(3), &big(1), &c, 3), None);
    }

    #[test]
    fn general_agrees_with_plain_scan() {
        // Cross-check the pruned scan against a direct triple loop.
        let plain = |a: i64, b: i64, c: i64, limit: i64| -> Option<(i64, i64, i64)> {
            for x in 0..=limit {
                for y in 0..=limit {
                    for z in 0..=limit {
                        if (x, y, z) == (0, 0, 0) {
                            continue;
                        }
                        if a * x * x + b * y * y + c * z * z == 0 {
                            return Some((x, y, z));
                        }
                    }
                }
            }
            None
        };
        for (a, b, c) in [
            (1, 1, -2),
            (1, 1, -3),
            (2, 3, -5),
            (1, -1, -1),
            (-7, 2, 1),
            (5, -2, -3),
            (3, 10, -13),
            (-6, -5, 11),
        ] {
            let want = plain(a, b, c, 25).map(|(x, y, z)| sol(x, y, z));
            let got = brute_force_general(&big(a), &big(b), &big(c), 25);
            assert_eq!(got, want, "mismatch for ({a},{b},{c})");
        }
    }

    #[test]
    fn residue_table_examples() {
        let t = |m: i64| -> Vec<i64> {
            residue_table(&big(m))
                .iter()
                .map(|v| i64::try_from(v).unwrap())
                .collect()
        };
        assert_eq!(t(3), vec![0, 1]);
        assert_eq!(t(13), vec![0, 1, 3, 4, 9, 10, 12]);
        assert_eq!(t(1), vec![0]);
    }

    #[test]
    fn square_test_exact_near_boundaries() {
        for base in [0u64, 3, 255, 65_535, 4_000_000_037] {
            let sq = base * base;
            assert_eq!(as_square_u64(sq), Some(base));
            if sq > 0 {
                assert_eq!(as_square_u64(sq - 1), None);
            }
            assert_eq!(as_square_u64(sq + 1), if base == 0 { Some(1) } else { None });
        }
    }
}
