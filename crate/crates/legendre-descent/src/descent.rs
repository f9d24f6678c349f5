//! The normal-form solver for `a·x² + b·y² = z²` with square-free positive
//! coefficients.
//!
//! Solvability is decided by the three residue conditions
//!
//! * Norm.1: `a` is a square mod `b`,
//! * Norm.2: `b` is a square mod `a`,
//! * Norm.3: `−(a/d)(b/d)` is a square mod `d`, where `d = gcd(a, b)`,
//!
//! and when they hold a solution is constructed by descent: the larger
//! coefficient `a` is replaced by the square-free `A` from `β² − b = h²·A·a`
//! (where `β ≤ a/2` is a root of `b` mod `a`), which contracts by more than a
//! factor of 4 per step. Solutions of the reduced equation lift back through
//! the explicit substitution `(A·x·h, z + y·β, z·β + b·y)`. The whole run is
//! recorded in a [`DescentTrace`] together with the bound
//! `b·(3a/2)^⌈log₄a⌉·(3b/2)^⌈log₄b⌉` that certifies the construction.

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::arith::{ceil_log4, factorize, gcd, is_squarefree, squarefree_split};
use crate::residues::{sqrt_mod_prime, sqrt_mod_squarefree, ResidueWitness};
use crate::two_squares::{two_squares_squarefree, TwoSquares};
use crate::DEFAULT_MAX_COEFF;

/// A coefficient slot of the normal form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NormalSlot {
    A,
    B,
}

impl std::fmt::Display for NormalSlot {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            NormalSlot::A => "a",
            NormalSlot::B => "b",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvalidNormalEquation {
    #[error("coefficient {0} must be positive")]
    NonPositive(NormalSlot),
    #[error("coefficient {0} = {1} is not square-free")]
    NotSquareFree(NormalSlot, BigInt),
    #[error("coefficient {0} = {1} exceeds the factorization cap {2}")]
    TooLarge(NormalSlot, BigInt, BigInt),
}

/// The equation `a·x² + b·y² = z²` with `a, b ≥ 1` square-free.
///
/// Validated on construction; every value of this type satisfies the
/// hypotheses of the normal-form theorem.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalEquation {
    a: BigInt,
    b: BigInt,
}

impl NormalEquation {
    pub fn new(a: BigInt, b: BigInt) -> Result<Self, InvalidNormalEquation> {
        Self::with_max_coeff(a, b, &BigInt::from(DEFAULT_MAX_COEFF))
    }

    /// Like [`NormalEquation::new`] with an explicit cap on coefficient size
    /// (trial-division factorization must stay tractable).
    pub fn with_max_coeff(
        a: BigInt,
        b: BigInt,
        max_coeff: &BigInt,
    ) -> Result<Self, InvalidNormalEquation> {
        for (slot, v) in [(NormalSlot::A, &a), (NormalSlot::B, &b)] {
            if !v.is_positive() {
                return Err(InvalidNormalEquation::NonPositive(slot));
            }
            if v > max_coeff {
                return Err(InvalidNormalEquation::TooLarge(slot, v.clone(), max_coeff.clone()));
            }
            if !is_squarefree(v) {
                return Err(InvalidNormalEquation::NotSquareFree(slot, v.clone()));
            }
        }
        Ok(Self { a, b })
    }

    /// Construction for coefficients already known square-free and positive
    /// (intermediate descent levels).
    pub(crate) fn new_unchecked(a: BigInt, b: BigInt) -> Self {
        debug_assert!(a.is_positive() && b.is_positive());
        debug_assert!(is_squarefree(&a) && is_squarefree(&b));
        Self { a, b }
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    /// `a·x² + b·y² − z²`, which is zero exactly on solutions.
    pub fn eval(&self, s: &Solution) -> BigInt {
        &self.a * &s.x * &s.x + &self.b * &s.y * &s.y - &s.z * &s.z
    }

    pub fn is_nontrivial_solution(&self, s: &Solution) -> bool {
        !s.is_trivial() && self.eval(s).is_zero()
    }
}

impl std::fmt::Display for NormalEquation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}x² + {}y² = z²", self.a, self.b)
    }
}

/// A solution triple with non-negative components, not all zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    pub x: BigInt,
    pub y: BigInt,
    pub z: BigInt,
}

impl Solution {
    pub fn new(x: BigInt, y: BigInt, z: BigInt) -> Self {
        Self { x, y, z }
    }

    pub fn is_trivial(&self) -> bool {
        self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    pub fn components(&self) -> [&BigInt; 3] {
        [&self.x, &self.y, &self.z]
    }

    pub fn max_component(&self) -> &BigInt {
        self.components().into_iter().max().unwrap()
    }
}

impl std::fmt::Display for Solution {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {}, {})", self.x, self.y, self.z)
    }
}

/// Witnesses (or refutations) of the three normal-form conditions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalConditions {
    pub d: BigInt,
    /// Norm.1: witness that `a` is a square mod `b`.
    pub a_res_b: Option<ResidueWitness>,
    /// Norm.2: witness that `b` is a square mod `a`.
    pub b_res_a: Option<ResidueWitness>,
    /// Norm.3: witness that `−(a/d)(b/d)` is a square mod `d`.
    pub neg_ab_res_d: Option<ResidueWitness>,
}

impl NormalConditions {
    pub fn all_hold(&self) -> bool {
        self.a_res_b.is_some() && self.b_res_a.is_some() && self.neg_ab_res_d.is_some()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NormalConditionKind {
    /// Norm.1: `a R b`
    AResB,
    /// Norm.2: `b R a`
    BResA,
    /// Norm.3: `−(ab/d²) R d`
    NegProductResGcd,
}

impl std::fmt::Display for NormalConditionKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            NormalConditionKind::AResB => "Norm.1 (a R b)",
            NormalConditionKind::BResA => "Norm.2 (b R a)",
            NormalConditionKind::NegProductResGcd => "Norm.3 (-(ab/d²) R d)",
        })
    }
}

/// Refutation certificate: `value` is not a square modulo `prime`, a prime
/// factor of the condition's `modulus`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FailedNormalCondition {
    pub kind: NormalConditionKind,
    pub value: BigInt,
    pub modulus: BigInt,
    pub prime: BigInt,
}

impl std::fmt::Display for FailedNormalCondition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{} fails: {} is not a square modulo {}",
            self.kind, self.value, self.prime
        )
    }
}

/// Evaluate the three normal-form conditions, producing explicit witnesses.
pub fn check_normal_conditions(eq: &NormalEquation) -> NormalConditions {
    let d = gcd(&eq.a, &eq.b);
    let a1 = &eq.a / &d;
    let b1 = &eq.b / &d;
    NormalConditions {
        a_res_b: sqrt_mod_squarefree(&eq.a, &eq.b),
        b_res_a: sqrt_mod_squarefree(&eq.b, &eq.a),
        neg_ab_res_d: sqrt_mod_squarefree(&(-a1 * b1), &d),
        d,
    }
}

/// First prime factor of `modulus` where `value` is a non-residue.
fn nonresidue_prime(value: &BigInt, modulus: &BigInt) -> BigInt {
    for (p, _) in factorize(modulus) {
        if sqrt_mod_prime(value, &p).is_none() {
            return p;
        }
    }
    unreachable!("nonresidue_prime: {value} is a square modulo {modulus}")
}

/// The first failing condition in order Norm.1, Norm.2, Norm.3, or `None`.
pub fn first_failed_condition(
    eq: &NormalEquation,
    cond: &NormalConditions,
) -> Option<FailedNormalCondition> {
    let a1b1 = (&eq.a / &cond.d) * (&eq.b / &cond.d);
    let checks = [
        (NormalConditionKind::AResB, &cond.a_res_b, eq.a.clone(), eq.b.clone()),
        (NormalConditionKind::BResA, &cond.b_res_a, eq.b.clone(), eq.a.clone()),
        (
            NormalConditionKind::NegProductResGcd,
            &cond.neg_ab_res_d,
            -a1b1,
            cond.d.clone(),
        ),
    ];
    for (kind, witness, value, modulus) in checks {
        if witness.is_none() {
            let prime = nonresidue_prime(&value, &modulus);
            return Some(FailedNormalCondition { kind, value, modulus, prime });
        }
    }
    None
}

/// Which coefficient a [`ReductionStep`] replaced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    ReduceA,
    ReduceB,
}

/// One descent step `root² − other = h²·new·carried`.
///
/// `carried_coeff` is the coefficient the step replaces, `new_coeff` the
/// square-free replacement, `other_coeff` the coefficient left untouched,
/// and `k = h²·new_coeff` the raw quotient before splitting off squares.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionStep {
    /// 1-based position in its trace (0 on standalone construction).
    pub index: usize,
    pub side: Side,
    pub root: BigInt,
    pub h: BigInt,
    pub k: BigInt,
    pub new_coeff: BigInt,
    pub carried_coeff: BigInt,
    pub other_coeff: BigInt,
}

impl ReductionStep {
    /// Coefficients `(A, B)` of the equation this step was applied to.
    pub fn coeffs_before(&self) -> (BigInt, BigInt) {
        match self.side {
            Side::ReduceA => (self.carried_coeff.clone(), self.other_coeff.clone()),
            Side::ReduceB => (self.other_coeff.clone(), self.carried_coeff.clone()),
        }
    }

    /// Coefficients `(A, B)` of the reduced equation it produced.
    pub fn coeffs_after(&self) -> (BigInt, BigInt) {
        match self.side {
            Side::ReduceA => (self.new_coeff.clone(), self.other_coeff.clone()),
            Side::ReduceB => (self.other_coeff.clone(), self.new_coeff.clone()),
        }
    }

    /// Defining identity, the contraction inequality and the root bound.
    pub fn verify(&self) -> bool {
        let ident = &self.root * &self.root - &self.other_coeff
            == &self.h * &self.h * &self.new_coeff * &self.carried_coeff;
        let k_consistent = self.k == &self.h * &self.h * &self.new_coeff;
        let contraction = &self.new_coeff * &self.h * 4 < self.carried_coeff;
        let root_bound = &self.root * 2 <= self.carried_coeff;
        ident && k_consistent && contraction && root_bound && self.new_coeff.is_positive()
    }
}

/// Perform one reduction of `a` in `a·x² + b·y² = z²` using the canonical
/// root `β ≤ a/2` of `b` mod `a`: compute `k = (β² − b)/a`, split off its
/// square part and return the recorded step.
///
/// Panics when the conditions that the theorem guarantees fail to hold; any
/// such panic is an internal bug, not bad input.
pub fn reduce_once(a: &BigInt, b: &BigInt, beta: &BigInt) -> ReductionStep {
    assert!(b > &BigInt::one() && a > b, "reduce_once: need 1 < b < a");
    assert!(
        !beta.is_negative() && beta * 2 <= *a,
        "reduce_once: root must lie in [0, a/2]"
    );
    let num = beta * beta - b;
    assert!(
        num.is_multiple_of(a),
        "reduce_once: {beta}² ≢ {b} (mod {a})"
    );
    let k = num / a;
    assert!(k.is_positive(), "reduce_once: k = 0 implies b = 1, handled by the base case");
    let split = squarefree_split(&k);
    let step = ReductionStep {
        index: 0,
        side: Side::ReduceA,
        root: beta.clone(),
        h: split.h.clone(),
        k,
        new_coeff: split.s,
        carried_coeff: a.clone(),
        other_coeff: b.clone(),
    };
    assert!(
        &step.new_coeff * &step.h * 4 < step.carried_coeff,
        "reduce_once: contraction A·h < a/4 violated"
    );
    // Condition preservation: Θ(A, b) must hold whenever Θ(a, b) does.
    let reduced = NormalEquation::new_unchecked(step.new_coeff.clone(), b.clone());
    assert!(
        check_normal_conditions(&reduced).all_hold(),
        "reduce_once: conditions not preserved at ({}, {}) — internal bug",
        step.new_coeff,
        b
    );
    step
}

/// Mirror image of [`reduce_once`] acting on the `b` slot.
fn reduce_once_b(a: &BigInt, b: &BigInt, alpha: &BigInt) -> ReductionStep {
    let mut step = reduce_once(b, a, alpha);
    step.side = Side::ReduceB;
    step
}

/// Lift a solution of `A·x² + b·y² = z²` through a `ReduceA` step to a
/// solution of `a·x² + b·y² = z²` via `(A·x·h, z + y·β, z·β + b·y)`.
pub fn lift_beta(step: &ReductionStep, inner: &Solution) -> Solution {
    assert_eq!(step.side, Side::ReduceA, "lift_beta: expects a ReduceA step");
    let (a_next, b_next) = step.coeffs_after();
    debug_assert!(
        (&a_next * &inner.x * &inner.x + &b_next * &inner.y * &inner.y
            - &inner.z * &inner.z)
            .is_zero(),
        "lift_beta: inner triple does not solve the reduced equation"
    );
    let out = Solution {
        x: &step.new_coeff * &inner.x * &step.h,
        y: &inner.z + &inner.y * &step.root,
        z: &inner.z * &step.root + &step.other_coeff * &inner.y,
    };
    let (a_prev, b_prev) = step.coeffs_before();
    assert!(
        (&a_prev * &out.x * &out.x + &b_prev * &out.y * &out.y - &out.z * &out.z).is_zero(),
        "lift_beta: lifted triple fails substitution — internal bug"
    );
    assert!(!out.is_trivial());
    out
}

/// Lift a solution of `a·x² + B·y² = z²` through a `ReduceB` step to a
/// solution of `a·x² + b·y² = z²` via `(z + x·α, B·y·h, z·α + a·x)`.
pub fn lift_alpha(step: &ReductionStep, inner: &Solution) -> Solution {
    assert_eq!(step.side, Side::ReduceB, "lift_alpha: expects a ReduceB step");
    let (a_next, b_next) = step.coeffs_after();
    debug_assert!(
        (&a_next * &inner.x * &inner.x + &b_next * &inner.y * &inner.y
            - &inner.z * &inner.z)
            .is_zero(),
        "lift_alpha: inner triple does not solve the reduced equation"
    );
    let out = Solution {
        x: &inner.z + &inner.x * &step.root,
        y: &step.new_coeff * &inner.y * &step.h,
        z: &inner.z * &step.root + &step.other_coeff * &inner.x,
    };
    let (a_prev, b_prev) = step.coeffs_before();
    assert!(
        (&a_prev * &out.x * &out.x + &b_prev * &out.y * &out.y - &out.z * &out.z).is_zero(),
        "lift_alpha: lifted triple fails substitution — internal bug"
    );
    assert!(!out.is_trivial());
    out
}

/// Terminal case of the descent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BaseCase {
    /// `a = 1`: `(1, 0, 1)`.
    AIsOne,
    /// `b = 1`: `(0, 1, 1)`.
    BIsOne,
    /// `a = b`: `(r, s, b)` with `b = r² + s²` from the two-squares descent.
    Equal(TwoSquares),
}

/// Solve one of the trivial cases `a = 1`, `b = 1` or `a = b`.
///
/// For `a = b`, Norm.3 degenerates to `−1 R b` (carried by `cond`) and the
/// two-squares machinery supplies `b = r² + s²`.
pub fn solve_base(a: &BigInt, b: &BigInt, cond: &NormalConditions) -> Solution {
    if a.is_one() {
        return Solution::new(BigInt::one(), BigInt::zero(), BigInt::one());
    }
    if b.is_one() {
        return Solution::new(BigInt::zero(), BigInt::one(), BigInt::one());
    }
    assert_eq!(a, b, "solve_base: not a base case");
    assert!(
        cond.neg_ab_res_d.is_some(),
        "solve_base: −1 R {b} must hold when the conditions do — internal bug"
    );
    let mut roots = Vec::new();
    for (p, _) in factorize(b) {
        if p.is_odd() {
            let r = sqrt_mod_prime(&BigInt::from(-1), &p)
                .expect("solve_base: −1 R b implies −1 R p for every prime factor");
            roots.push((p, r));
        }
    }
    let ts = two_squares_squarefree(b, &roots)
        .expect("solve_base: roots supplied for every odd prime factor");
    let out = Solution::new(ts.r, ts.s, b.clone());
    debug_assert!((a * &out.x * &out.x + b * &out.y * &out.y - &out.z * &out.z).is_zero());
    out
}

/// The certified component bound `⌈b·(3a/2)^⌈log₄a⌉·(3b/2)^⌈log₄b⌉⌉`,
/// evaluated in exact rational arithmetic.
pub fn solution_bound(a: &BigInt, b: &BigInt) -> BigInt {
    assert!(a.is_positive() && b.is_positive());
    let la = ceil_log4(a);
    let lb = ceil_log4(b);
    let num = b * (a * 3u32).pow(la) * (b * 3u32).pow(lb);
    let den = BigInt::one() << (la + lb);
    (num + &den - 1u32).div_floor(&den)
}

/// Full record of one descent run on `E₀: a·x² + b·y² = z²`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DescentTrace {
    pub equation: NormalEquation,
    pub steps: Vec<ReductionStep>,
    pub base_case: BaseCase,
    pub base_solution: Solution,
    /// `lifted[j]` solves the equation *above* `steps[j]`; `lifted[0]` is the
    /// raw (possibly imprimitive) solution of `E₀`.
    pub lifted: Vec<Solution>,
    pub bound: BigInt,
}

impl DescentTrace {
    /// Number of reduction steps.
    pub fn length(&self) -> usize {
        self.steps.len()
    }

    /// The raw solution of `E₀` before primitivity reduction.
    pub fn raw_solution(&self) -> &Solution {
        self.lifted.first().unwrap_or(&self.base_solution)
    }

    /// Re-verify the whole trace from scratch: step identities, contraction,
    /// condition preservation at every level, every lift, the base case, the
    /// length bound and the component bound.
    pub fn verify(&self) -> Result<(), String> {
        let (a0, b0) = (self.equation.a().clone(), self.equation.b().clone());
        if self.bound != solution_bound(&a0, &b0) {
            return Err("stored bound disagrees with the formula".into());
        }
        let max_len = (ceil_log4(&a0) + ceil_log4(&b0)) as usize;
        if self.steps.len() > max_len {
            return Err(format!(
                "trace length {} exceeds ⌈log₄a⌉+⌈log₄b⌉ = {max_len}",
                self.steps.len()
            ));
        }
        if self.lifted.len() != self.steps.len() {
            return Err("one lifted solution per step expected".into());
        }
        let mut coeffs = (a0, b0);
        for (j, step) in self.steps.iter().enumerate() {
            if step.index != j + 1 {
                return Err(format!("step {} carries index {}", j + 1, step.index));
            }
            if step.coeffs_before() != coeffs {
                return Err(format!("step {} does not apply to level {j}", j + 1));
            }
            if !step.verify() {
                return Err(format!("step {} fails verification", j + 1));
            }
            coeffs = step.coeffs_after();
            let eq = NormalEquation::new_unchecked(coeffs.0.clone(), coeffs.1.clone());
            if !check_normal_conditions(&eq).all_hold() {
                return Err(format!("conditions lost after step {}", j + 1));
            }
        }
        // Base case consistency.
        let (al, bl) = coeffs;
        let base_ok = match &self.base_case {
            BaseCase::AIsOne => al.is_one(),
            BaseCase::BIsOne => bl.is_one(),
            BaseCase::Equal(ts) => al == bl && ts.n == al && ts.verify(),
        };
        if !base_ok {
            return Err("base case does not match the final level".into());
        }
        let base_eq = NormalEquation::new_unchecked(al, bl);
        if !base_eq.is_nontrivial_solution(&self.base_solution) {
            return Err("base solution does not solve the final level".into());
        }
        // Replay the lifts bottom-up and compare.
        let mut cur = self.base_solution.clone();
        for (j, step) in self.steps.iter().enumerate().rev() {
            cur = match step.side {
                Side::ReduceA => lift_beta(step, &cur),
                Side::ReduceB => lift_alpha(step, &cur),
            };
            if self.lifted[j] != cur {
                return Err(format!("lifted solution at level {j} does not replay"));
            }
        }
        for c in self.raw_solution().components() {
            if *c > self.bound {
                return Err(format!("component {c} exceeds the bound {}", self.bound));
            }
        }
        Ok(())
    }
}

/// Outcome of [`solve_normal`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NormalVerdict {
    Solvable {
        solution: Solution,
        trace: DescentTrace,
    },
    NoSolution(FailedNormalCondition),
}

impl NormalVerdict {
    pub fn is_solvable(&self) -> bool {
        matches!(self, NormalVerdict::Solvable { .. })
    }
}

/// Decide `a·x² + b·y² = z²` and construct a solution when one exists.
///
/// Returns the first failing condition as a refutation certificate, or a
/// primitive solution together with the full descent trace. The run is
/// implemented as an explicit loop (descend fully, then lift), so the trace
/// depth is observable and bounded.
pub fn solve_normal(eq: &NormalEquation) -> NormalVerdict {
    let cond = check_normal_conditions(eq);
    if let Some(failed) = first_failed_condition(eq, &cond) {
        return NormalVerdict::NoSolution(failed);
    }
    let (mut a, mut b) = (eq.a.clone(), eq.b.clone());
    let max_iter = (ceil_log4(&a) + ceil_log4(&b) + 2) as usize;
    let mut steps: Vec<ReductionStep> = Vec::new();
    while !a.is_one() && !b.is_one() && a != b {
        let mut step = if a > b {
            let w = sqrt_mod_squarefree(&b, &a)
                .expect("solve_normal: Norm.2 preserved at every level — internal bug");
            reduce_once(&a, &b, &w.root)
        } else {
            let w = sqrt_mod_squarefree(&a, &b)
                .expect("solve_normal: Norm.1 preserved at every level — internal bug");
            reduce_once_b(&a, &b, &w.root)
        };
        step.index = steps.len() + 1;
        let after = step.coeffs_after();
        a = after.0;
        b = after.1;
        steps.push(step);
        assert!(
            steps.len() <= max_iter,
            "solve_normal: descent exceeded its length bound — internal bug"
        );
    }
    let level_eq = NormalEquation::new_unchecked(a.clone(), b.clone());
    let level_cond = check_normal_conditions(&level_eq);
    let base_solution = solve_base(&a, &b, &level_cond);
    let base_case = if a.is_one() {
        BaseCase::AIsOne
    } else if b.is_one() {
        BaseCase::BIsOne
    } else {
        BaseCase::Equal(TwoSquares {
            r: base_solution.x.clone(),
            s: base_solution.y.clone(),
            n: b.clone(),
        })
    };
    let mut lifted = Vec::with_capacity(steps.len());
    let mut cur = base_solution.clone();
    for step in steps.iter().rev() {
        cur = match step.side {
            Side::ReduceA => lift_beta(step, &cur),
            Side::ReduceB => lift_alpha(step, &cur),
        };
        lifted.push(cur.clone());
    }
    lifted.reverse();
    let bound = solution_bound(eq.a(), eq.b());
    let trace = DescentTrace {
        equation: eq.clone(),
        steps,
        base_case,
        base_solution,
        lifted,
        bound,
    };
    for c in trace.raw_solution().components() {
        assert!(
            *c <= trace.bound,
            "solve_normal: bound certificate violated — internal bug"
        );
    }
    debug_assert_eq!(trace.verify(), Ok(()));
    let raw = trace.raw_solution().clone();
    let solution = crate::legendre::make_primitive(
        &crate::legendre::Equation::Normal(eq.clone()),
        &raw,
    );
    NormalVerdict::Solvable { solution, trace }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    fn eq(a: i64, b: i64) -> NormalEquation {
        NormalEquation::new(big(a), big(b)).unwrap()
    }

    fn sol(x: i64, y: i64, z: i64) -> Solution {
        Solution::new(big(x), big(y), big(z))
    }

    #[test]
    fn equation_validation() {
        assert!(NormalEquation::new(big(3), big(13)).is_ok());
        assert_eq!(
            NormalEquation::new(big(4), big(3)),
            Err(InvalidNormalEquation::NotSquareFree(NormalSlot::A, big(4)))
        );
        assert_eq!(
            NormalEquation::new(big(3), big(0)),
            Err(InvalidNormalEquation::NonPositive(NormalSlot::B))
        );
        assert!(matches!(
            NormalEquation::with_max_coeff(big(100), big(3), &big(50)),
            Err(InvalidNormalEquation::TooLarge(NormalSlot::A, _, _))
        ));
    }

    #[test]
    fn conditions_examples() {
        let c = check_normal_conditions(&eq(3, 13));
        assert!(c.all_hold());
        assert_eq!(c.d, big(1));
        assert_eq!(c.a_res_b.as_ref().unwrap().root, big(4));
        assert_eq!(c.b_res_a.as_ref().unwrap().root, big(1));

        let c = check_normal_conditions(&eq(2, 3));
        assert!(c.a_res_b.is_none());
        let f = first_failed_condition(&eq(2, 3), &c).unwrap();
        assert_eq!(f.kind, NormalConditionKind::AResB);
        assert_eq!(f.modulus, big(3));
        assert_eq!(f.prime, big(3));

        let c = check_normal_conditions(&eq(5, 5));
        assert_eq!(c.d, big(5));
        let w = c.neg_ab_res_d.unwrap();
        assert_eq!(w.root, big(2));
        assert_eq!(w.value, big(-1));
    }

    #[test]
    fn conditions_composite_modulus_failure_names_prime() {
        // a=7, b=15: 7 mod 3 = 1 (root 1), 7 mod 5 = 2 is a non-residue.
        let c = check_normal_conditions(&eq(7, 15));
        let f = first_failed_condition(&eq(7, 15), &c).unwrap();
        assert_eq!(f.kind, NormalConditionKind::AResB);
        assert_eq!(f.modulus, big(15));
        assert_eq!(f.prime, big(5));
    }

    #[test]
    fn reduce_once_examples() {
        let s = reduce_once(&big(13), &big(3), &big(4));
        assert_eq!((s.k.clone(), s.h.clone(), s.new_coeff.clone()), (big(1), big(1), big(1)));
        assert!(s.verify());

        let s = reduce_once(&big(17), &big(13), &big(8));
        assert_eq!((s.k.clone(), s.h.clone(), s.new_coeff.clone()), (big(3), big(1), big(3)));
        assert!(s.verify());

        let s = reduce_once(&big(41), &big(5), &big(13));
        assert_eq!((s.k.clone(), s.h.clone(), s.new_coeff.clone()), (big(4), big(2), big(1)));
        assert!(s.verify());
    }

    #[test]
    fn lift_beta_examples() {
        let s = reduce_once(&big(13), &big(3), &big(4));
        assert_eq!(lift_beta(&s, &sol(1, 0, 1)), sol(1, 1, 4));

        let s = reduce_once(&big(41), &big(5), &big(13));
        assert_eq!(lift_beta(&s, &sol(1, 0, 1)), sol(2, 1, 13));

        let s = reduce_once(&big(17), &big(13), &big(8));
        assert_eq!(lift_beta(&s, &sol(1, 1, 4)), sol(3, 12, 45));
    }

    #[test]
    fn lift_alpha_examples() {
        let s = reduce_once_b(&big(3), &big(13), &big(4));
        assert_eq!(lift_alpha(&s, &sol(0, 1, 1)), sol(1, 1, 4));
        // homogeneity: scaled inner solutions scale the lift
        assert_eq!(lift_alpha(&s, &sol(0, 2, 2)), sol(2, 2, 8));
    }

    #[test]
    fn alpha_lift_is_the_mirror_of_beta_lift() {
        // Swapping (x ↔ y, a ↔ b) turns a ReduceA step into a ReduceB step;
        // the lifted solutions swap the same way.
        let beta_step = reduce_once(&big(17), &big(13), &big(8));
        let alpha_step = reduce_once_b(&big(13), &big(17), &big(8));
        let inner = sol(1, 1, 4); // solves 3x² + 13y² = z²
        let swapped_inner = Solution::new(inner.y.clone(), inner.x.clone(), inner.z.clone());
        let out = lift_beta(&beta_step, &inner);
        let mirrored = lift_alpha(&alpha_step, &swapped_inner);
        assert_eq!(mirrored, Solution::new(out.y.clone(), out.x.clone(), out.z.clone()));
    }

    #[test]
    fn alpha_lift_without_the_swap_fails_substitution() {
        // The symmetric lift must swap the roles of x and y; the naive
        // transcription (z + y·α, B·x·h, z·α + A·y) does not satisfy the
        // identity.
        let s = reduce_once_b(&big(3), &big(13), &big(4));
        let inner = sol(0, 1, 1);
        let wrong = Solution::new(
            &inner.z + &inner.y * &s.root,
            &s.new_coeff * &inner.x * &s.h,
            &inner.z * &s.root + &s.other_coeff * &inner.y,
        );
        let (a, b) = s.coeffs_before();
        assert_ne!(&a * &wrong.x * &wrong.x + &b * &wrong.y * &wrong.y, &wrong.z * &wrong.z);
    }

    #[test]
    fn solve_base_examples() {
        let c = check_normal_conditions(&eq(1, 7));
        assert_eq!(solve_base(&big(1), &big(7), &c), sol(1, 0, 1));
        let c = check_normal_conditions(&eq(7, 1));
        assert_eq!(solve_base(&big(7), &big(1), &c), sol(0, 1, 1));
        let c = check_normal_conditions(&eq(5, 5));
        assert_eq!(solve_base(&big(5), &big(5), &c), sol(1, 2, 5));
    }

    #[test]
    fn solution_bound_examples() {
        assert_eq!(solution_bound(&big(1), &big(1)), big(1));
        assert_eq!(solution_bound(&big(13), &big(3)), big(5134));
        assert_eq!(solution_bound(&big(17), &big(13)), big(81_965_882));
    }

    #[test]
    fn solution_bound_matches_exact_rational_oracle() {
        use num_rational::BigRational;
        for a in 1i64..=40 {
            for b in 1i64..=40 {
                let la = ceil_log4(&big(a));
                let lb = ceil_log4(&big(b));
                let exact = BigRational::from(big(b))
                    * BigRational::new(big(3 * a), big(2)).pow(la as i32)
                    * BigRational::new(big(3 * b), big(2)).pow(lb as i32);
                assert_eq!(solution_bound(&big(a), &big(b)), exact.ceil().to_integer());
            }
        }
    }

    #[test]
    fn solve_normal_examples() {
        match solve_normal(&eq(3, 13)) {
            NormalVerdict::Solvable { solution, trace } => {
                assert_eq!(solution, sol(1, 1, 4));
                assert_eq!(trace.length(), 1);
                assert_eq!(trace.verify(), Ok(()));
            }
            v => panic!("expected solvable, got {v:?}"),
        }

        match solve_normal(&eq(2, 3)) {
            NormalVerdict::NoSolution(f) => {
                assert_eq!(f.kind, NormalConditionKind::AResB);
                assert_eq!(f.prime, big(3));
            }
            v => panic!("expected no solution, got {v:?}"),
        }
    }

    #[test]
    fn solve_normal_worked_trace_17_13() {
        let NormalVerdict::Solvable { solution, trace } = solve_normal(&eq(17, 13)) else {
            panic!("(17,13) must be solvable");
        };
        assert_eq!(trace.length(), 2);
        let s1 = &trace.steps[0];
        assert_eq!(s1.side, Side::ReduceA);
        assert_eq!(
            (s1.root.clone(), s1.h.clone(), s1.new_coeff.clone()),
            (big(8), big(1), big(3))
        );
        let s2 = &trace.steps[1];
        assert_eq!(s2.side, Side::ReduceB);
        assert_eq!(
            (s2.root.clone(), s2.h.clone(), s2.new_coeff.clone()),
            (big(4), big(1), big(1))
        );
        assert_eq!(trace.base_case, BaseCase::BIsOne);
        assert_eq!(trace.base_solution, sol(0, 1, 1));
        assert_eq!(trace.lifted, vec![sol(3, 12, 45), sol(1, 1, 4)]);
        assert_eq!(trace.raw_solution(), &sol(3, 12, 45));
        assert_eq!(solution, sol(1, 4, 15));
        assert_eq!(trace.bound, big(81_965_882));
        assert_eq!(trace.verify(), Ok(()));
    }

    #[test]
    fn solve_normal_trivial_and_equal_cases() {
        match solve_normal(&eq(1, 1)) {
            NormalVerdict::Solvable { solution, trace } => {
                assert_eq!(solution, sol(1, 0, 1));
                assert_eq!(trace.bound, big(1));
                assert_eq!(trace.length(), 0);
            }
            v => panic!("{v:?}"),
        }
        match solve_normal(&eq(5, 5)) {
            NormalVerdict::Solvable { solution, trace } => {
                assert_eq!(solution, sol(1, 2, 5));
                assert_eq!(trace.base_case, BaseCase::Equal(TwoSquares { r: big(1), s: big(2), n: big(5) }));
            }
            v => panic!("{v:?}"),
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn verdicts_are_sound_and_certified(a in 1i64..150, b in 1i64..150) {
            prop_assume!(is_squarefree(&big(a)) && is_squarefree(&big(b)));
            let e = eq(a, b);
            match solve_normal(&e) {
                NormalVerdict::Solvable { solution, trace } => {
                    prop_assert!(e.is_nontrivial_solution(&solution));
                    prop_assert_eq!(trace.verify(), Ok(()));
                    for c in solution.components() {
                        prop_assert!(*c <= trace.bound);
                    }
                }
                NormalVerdict::NoSolution(f) => {
                    // the named prime really refutes the condition
                    prop_assert!(sqrt_mod_prime(&f.value, &f.prime).is_none());
                    prop_assert!(f.modulus.is_multiple_of(&f.prime));
                }
            }
        }
    }
}
