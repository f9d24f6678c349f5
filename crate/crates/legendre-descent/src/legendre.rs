//! General-form API for `a·x² + b·y² + c·z² = 0` with square-free, pairwise
//! coprime, mixed-sign coefficients.
//!
//! The general form reduces to the normal form and back: with `a, b > 0 > c`,
//! multiplying by `−c` turns the equation into `(−ac)x² + (−bc)y² = (cz)²`,
//! and a normal equation `ax² + by² = z²` with `d = gcd(a, b)` corresponds to
//! `(a/d)x² + (b/d)y² − d·z² = 0`. Both directions come with explicit
//! solution maps, and refusals carry residue certificates.

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::arith::{factorize, gcd, is_squarefree, mod_centered, mod_inverse};
use crate::descent::{
    solve_normal, DescentTrace, NormalConditions, NormalEquation, NormalVerdict, Solution,
};
use crate::residues::{sqrt_mod_prime, sqrt_mod_squarefree, ResidueWitness};
use crate::DEFAULT_MAX_COEFF;

/// A coefficient slot of the general form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Slot {
    A,
    B,
    C,
}

impl std::fmt::Display for Slot {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Slot::A => "a",
            Slot::B => "b",
            Slot::C => "c",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ValidationError {
    #[error("coefficient {0} must be non-zero")]
    ZeroCoefficient(Slot),
    #[error("coefficient {0} = {1} is not square-free")]
    NotSquareFree(Slot, BigInt),
    #[error("coefficients {0} and {1} are not coprime (gcd {2})")]
    NotCoprime(Slot, Slot, BigInt),
    #[error("all coefficients have the same sign")]
    AllSameSign,
    #[error("coefficient {0} = {1} exceeds the factorization cap {2}")]
    TooLarge(Slot, BigInt, BigInt),
}

/// The equation `a·x² + b·y² + c·z² = 0` under the theorem's hypotheses:
/// non-zero, square-free, pairwise coprime, not all of one sign.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneralEquation {
    a: BigInt,
    b: BigInt,
    c: BigInt,
}

impl GeneralEquation {
    pub fn new(a: BigInt, b: BigInt, c: BigInt) -> Result<Self, ValidationError> {
        Self::with_max_coeff(a, b, c, &BigInt::from(DEFAULT_MAX_COEFF))
    }

    pub fn with_max_coeff(
        a: BigInt,
        b: BigInt,
        c: BigInt,
        max_coeff: &BigInt,
    ) -> Result<Self, ValidationError> {
        let slots = [(Slot::A, &a), (Slot::B, &b), (Slot::C, &c)];
        for (slot, v) in &slots {
            if v.is_zero() {
                return Err(ValidationError::ZeroCoefficient(*slot));
            }
            if v.abs() > *max_coeff {
                return Err(ValidationError::TooLarge(*slot, (*v).clone(), max_coeff.clone()));
            }
        }
        for (slot, v) in &slots {
            if !is_squarefree(v) {
                return Err(ValidationError::NotSquareFree(*slot, (*v).clone()));
            }
        }
        for (i, (si, vi)) in slots.iter().enumerate() {
            for (sj, vj) in slots.iter().skip(i + 1) {
                let g = gcd(vi, vj);
                if !g.is_one() {
                    return Err(ValidationError::NotCoprime(*si, *sj, g));
                }
            }
        }
        let negatives = slots.iter().filter(|(_, v)| v.is_negative()).count();
        if negatives == 0 || negatives == 3 {
            return Err(ValidationError::AllSameSign);
        }
        Ok(Self { a, b, c })
    }

    pub(crate) fn new_unchecked(a: BigInt, b: BigInt, c: BigInt) -> Self {
        let eq = Self { a, b, c };
        debug_assert!(
            GeneralEquation::with_max_coeff(
                eq.a.clone(),
                eq.b.clone(),
                eq.c.clone(),
                &eq.a.abs().max(eq.b.abs()).max(eq.c.abs())
            )
            .is_ok()
        );
        eq
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    pub fn c(&self) -> &BigInt {
        &self.c
    }

    pub fn coefficients(&self) -> [&BigInt; 3] {
        [&self.a, &self.b, &self.c]
    }

    /// Already in the shape `a, b > 0 > c`?
    pub fn is_canonical(&self) -> bool {
        self.a.is_positive() && self.b.is_positive() && self.c.is_negative()
    }

    /// `a·x² + b·y² + c·z²`, zero exactly on solutions.
    pub fn eval(&self, s: &Solution) -> BigInt {
        &self.a * &s.x * &s.x + &self.b * &s.y * &s.y + &self.c * &s.z * &s.z
    }

    pub fn is_nontrivial_solution(&self, s: &Solution) -> bool {
        !s.is_trivial() && self.eval(s).is_zero()
    }
}

impl std::fmt::Display for GeneralEquation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let term = |v: &BigInt| {
            if v.is_negative() {
                format!("- {}", v.abs())
            } else {
                format!("+ {v}")
            }
        };
        write!(f, "{}x² {}y² {}z² = 0", self.a, term(&self.b), term(&self.c))
    }
}

/// Either form of equation; used where both are handled uniformly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Equation {
    Normal(NormalEquation),
    General(GeneralEquation),
}

impl Equation {
    pub fn is_nontrivial_solution(&self, s: &Solution) -> bool {
        match self {
            Equation::Normal(eq) => eq.is_nontrivial_solution(s),
            Equation::General(eq) => eq.is_nontrivial_solution(s),
        }
    }
}

/// Sign flip and slot permutation taking a valid equation to the canonical
/// shape `a, b > 0 > c`.
///
/// `canonical.coeff[i] = s·original.coeff[slots[i]]` where `s = −1` iff
/// `flipped`; solutions map back by the same slot permutation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Canonicalization {
    pub slots: [usize; 3],
    pub flipped: bool,
    pub canonical: GeneralEquation,
}

impl Canonicalization {
    /// Undo the permutation/flip, recovering the input equation.
    pub fn original(&self) -> GeneralEquation {
        let canon = self.canonical.coefficients();
        let mut coeffs = [BigInt::zero(), BigInt::zero(), BigInt::zero()];
        for i in 0..3 {
            coeffs[self.slots[i]] = if self.flipped { -canon[i] } else { canon[i].clone() };
        }
        let [a, b, c] = coeffs;
        GeneralEquation::new_unchecked(a, b, c)
    }

    /// Map a solution of the canonical equation to one of the original.
    pub fn solution_to_original(&self, sol: &Solution) -> Solution {
        let canon = [&sol.x, &sol.y, &sol.z];
        let mut comps = [BigInt::zero(), BigInt::zero(), BigInt::zero()];
        for i in 0..3 {
            comps[self.slots[i]] = canon[i].clone();
        }
        let [x, y, z] = comps;
        Solution::new(x, y, z)
    }
}

/// Flip signs when two coefficients are negative, then swap the single
/// negative coefficient into slot `c`.
pub fn canonicalize(eq: &GeneralEquation) -> Canonicalization {
    let flipped = eq.coefficients().iter().filter(|v| v.is_negative()).count() == 2;
    let coeffs: Vec<BigInt> = eq
        .coefficients()
        .iter()
        .map(|v| if flipped { -*v } else { (*v).clone() })
        .collect();
    let neg_at = coeffs
        .iter()
        .position(|v| v.is_negative())
        .expect("validated equations have mixed signs");
    let mut slots = [0usize, 1, 2];
    slots.swap(neg_at, 2);
    let canonical = GeneralEquation::new_unchecked(
        coeffs[slots[0]].clone(),
        coeffs[slots[1]].clone(),
        coeffs[slots[2]].clone(),
    );
    debug_assert!(canonical.is_canonical());
    let out = Canonicalization { slots, flipped, canonical };
    debug_assert_eq!(&out.original(), eq);
    out
}

/// Witnesses (or refutations) of the three general-form conditions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LegendreConditions {
    /// Leg.1: `−ab R c`
    pub neg_ab_res_c: Option<ResidueWitness>,
    /// Leg.2: `−bc R a`
    pub neg_bc_res_a: Option<ResidueWitness>,
    /// Leg.3: `−ac R b`
    pub neg_ac_res_b: Option<ResidueWitness>,
}

impl LegendreConditions {
    pub fn all_hold(&self) -> bool {
        self.neg_ab_res_c.is_some() && self.neg_bc_res_a.is_some() && self.neg_ac_res_b.is_some()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LegendreConditionKind {
    /// Leg.1: `−ab R c`
    NegAbResC,
    /// Leg.2: `−bc R a`
    NegBcResA,
    /// Leg.3: `−ac R b`
    NegAcResB,
}

impl std::fmt::Display for LegendreConditionKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            LegendreConditionKind::NegAbResC => "Leg.1 (-ab R c)",
            LegendreConditionKind::NegBcResA => "Leg.2 (-bc R a)",
            LegendreConditionKind::NegAcResB => "Leg.3 (-ac R b)",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FailedLegendreCondition {
    pub kind: LegendreConditionKind,
    pub value: BigInt,
    pub modulus: BigInt,
    pub prime: BigInt,
}

impl std::fmt::Display for FailedLegendreCondition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{} fails: {} is not a square modulo {}",
            self.kind, self.value, self.prime
        )
    }
}

/// Evaluate Leg.1–3 with witnesses, modulo `|c|`, `|a|`, `|b|` respectively.
pub fn check_legendre_conditions(eq: &GeneralEquation) -> LegendreConditions {
    LegendreConditions {
        neg_ab_res_c: sqrt_mod_squarefree(&(-(&eq.a * &eq.b)), &eq.c.abs()),
        neg_bc_res_a: sqrt_mod_squarefree(&(-(&eq.b * &eq.c)), &eq.a.abs()),
        neg_ac_res_b: sqrt_mod_squarefree(&(-(&eq.a * &eq.c)), &eq.b.abs()),
    }
}

/// The first failing condition in order Leg.1, Leg.2, Leg.3, or `None`.
pub fn first_failed_legendre_condition(
    eq: &GeneralEquation,
    cond: &LegendreConditions,
) -> Option<FailedLegendreCondition> {
    let checks = [
        (LegendreConditionKind::NegAbResC, &cond.neg_ab_res_c, -(&eq.a * &eq.b), eq.c.abs()),
        (LegendreConditionKind::NegBcResA, &cond.neg_bc_res_a, -(&eq.b * &eq.c), eq.a.abs()),
        (LegendreConditionKind::NegAcResB, &cond.neg_ac_res_b, -(&eq.a * &eq.c), eq.b.abs()),
    ];
    for (kind, witness, value, modulus) in checks {
        if witness.is_none() {
            let prime = factorize(&modulus)
                .into_iter()
                .map(|(p, _)| p)
                .find(|p| sqrt_mod_prime(&value, p).is_none())
                .expect("a failed condition has a refuting prime factor");
            return Some(FailedLegendreCondition { kind, value, modulus, prime });
        }
    }
    None
}

/// Multiply a canonical equation by `−c`: the normal form
/// `(−ac)·x² + (−bc)·y² = z²` with `z` standing for `c·z`.
pub fn to_normal(eq: &GeneralEquation) -> NormalEquation {
    assert!(eq.is_canonical(), "to_normal: expects the canonical shape a, b > 0 > c");
    let a = -(&eq.a * &eq.c);
    let b = -(&eq.b * &eq.c);
    // Square-freeness is inherited from pairwise coprimality.
    assert!(
        is_squarefree(&a) && is_squarefree(&b),
        "to_normal: products not square-free — internal bug"
    );
    NormalEquation::new_unchecked(a, b)
}

/// Map a solution of `to_normal(eq)` back to the general equation: the `z`
/// component of the normal solution is `c·z₀`, so divide it by `|c|`.
pub fn from_normal_solution(eq: &GeneralEquation, sol: &Solution) -> Solution {
    let normal = to_normal(eq);
    assert!(
        normal.is_nontrivial_solution(sol),
        "from_normal_solution: input does not solve the normal form"
    );
    let c_abs = eq.c.abs();
    assert!(
        sol.z.is_multiple_of(&c_abs),
        "from_normal_solution: c must divide the z component — internal bug"
    );
    let out = Solution::new(sol.x.clone(), sol.y.clone(), &sol.z / &c_abs);
    assert!(
        eq.is_nontrivial_solution(&out),
        "from_normal_solution: mapped solution fails substitution — internal bug"
    );
    out
}

/// Normal form to general form: `ax² + by² = z²` with `d = gcd(a, b)`
/// becomes `(a/d)·x² + (b/d)·y² − d·z² = 0`.
pub fn normal_to_general(eq: &NormalEquation) -> GeneralEquation {
    let d = gcd(eq.a(), eq.b());
    GeneralEquation::new_unchecked(eq.a() / &d, eq.b() / &d, -d)
}

/// The companion solution map of [`normal_to_general`]: a general solution
/// `(x, y, z)` yields the normal solution `(x, y, d·z)`.
pub fn normal_solution_from_general(eq: &NormalEquation, sol: &Solution) -> Solution {
    let d = gcd(eq.a(), eq.b());
    let out = Solution::new(sol.x.clone(), sol.y.clone(), &d * &sol.z);
    assert!(
        eq.is_nontrivial_solution(&out),
        "normal_solution_from_general: mapped solution fails substitution"
    );
    out
}

/// Repeatedly divide out primes shared by at least two components; the
/// square-freeness of the coefficients forces them to divide the third.
///
/// Panics when the input is not a solution of `eq`.
pub fn make_primitive(eq: &Equation, sol: &Solution) -> Solution {
    assert!(
        eq.is_nontrivial_solution(sol),
        "make_primitive: input is not a nontrivial solution"
    );
    let mut cur = Solution::new(sol.x.abs(), sol.y.abs(), sol.z.abs());
    loop {
        let pair_gcds = [
            gcd(&cur.x, &cur.y),
            gcd(&cur.x, &cur.z),
            gcd(&cur.y, &cur.z),
        ];
        let Some(shared) = pair_gcds.iter().find(|g| !g.is_one() && !g.is_zero()) else {
            break;
        };
        let p = factorize(shared)
            .first()
            .map(|(p, _)| p.clone())
            .expect("non-unit gcd has a prime factor");
        // The coefficients are square-free, so p divides all three components.
        assert!(
            cur.x.is_multiple_of(&p) && cur.y.is_multiple_of(&p) && cur.z.is_multiple_of(&p),
            "make_primitive: prime {p} does not divide all components of {cur} — internal bug"
        );
        cur = Solution::new(&cur.x / &p, &cur.y / &p, &cur.z / &p);
    }
    assert!(
        eq.is_nontrivial_solution(&cur),
        "make_primitive: reduced triple fails substitution — internal bug"
    );
    cur
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NecessityError {
    #[error("the supplied triple is not a nontrivial solution")]
    NotASolution,
    #[error("component {component} is not invertible modulo {modulus}; the solution is not primitive")]
    NotInvertible {
        component: &'static str,
        modulus: BigInt,
    },
}

fn necessity_root(
    factor: &BigInt,
    component: &BigInt,
    inverse_of: &BigInt,
    inverse_name: &'static str,
    modulus: &BigInt,
) -> Result<BigInt, NecessityError> {
    let inv = mod_inverse(inverse_of, modulus).ok_or(NecessityError::NotInvertible {
        component: inverse_name,
        modulus: modulus.clone(),
    })?;
    Ok(mod_centered(&(factor * component * inv), modulus).abs())
}

/// Extract the residue witnesses of Norm.1–3 from a primitive solution,
/// exactly as in the necessity proofs: `b ≡ (z·y⁻¹)² (mod a)`,
/// `a ≡ (z·x⁻¹)² (mod b)` and `−(a/d)(b/d) ≡ ((b/d)·y·x⁻¹)² (mod d)`.
pub fn necessity_witnesses_normal(
    eq: &NormalEquation,
    sol: &Solution,
) -> Result<NormalConditions, NecessityError> {
    if !eq.is_nontrivial_solution(sol) {
        return Err(NecessityError::NotASolution);
    }
    let (a, b) = (eq.a(), eq.b());
    let d = gcd(a, b);
    let b1 = b / &d;
    let one = BigInt::one();
    let root_ab = necessity_root(&one, &sol.z, &sol.x, "x", b)?;
    let root_ba = necessity_root(&one, &sol.z, &sol.y, "y", a)?;
    let root_d = necessity_root(&b1, &sol.y, &sol.x, "x", &d)?;
    let out = NormalConditions {
        d: d.clone(),
        a_res_b: Some(ResidueWitness { value: a.clone(), modulus: b.clone(), root: root_ab }),
        b_res_a: Some(ResidueWitness { value: b.clone(), modulus: a.clone(), root: root_ba }),
        neg_ab_res_d: Some(ResidueWitness {
            value: -((a / &d) * &b1),
            modulus: d,
            root: root_d,
        }),
    };
    for w in [&out.a_res_b, &out.b_res_a, &out.neg_ab_res_d] {
        assert!(
            w.as_ref().unwrap().verify(),
            "necessity witness failed verification — solution not primitive?"
        );
    }
    Ok(out)
}

/// Extract the residue witnesses of Leg.1–3 from a primitive solution:
/// `−ab ≡ (b·y·x⁻¹)² (mod c)`, `−bc ≡ (c·z·y⁻¹)² (mod a)` and
/// `−ac ≡ (a·x·z⁻¹)² (mod b)`.
pub fn necessity_witnesses_general(
    eq: &GeneralEquation,
    sol: &Solution,
) -> Result<LegendreConditions, NecessityError> {
    if !eq.is_nontrivial_solution(sol) {
        return Err(NecessityError::NotASolution);
    }
    let (a, b, c) = (&eq.a, &eq.b, &eq.c);
    let (ma, mb, mc) = (a.abs(), b.abs(), c.abs());
    let root_c = necessity_root(b, &sol.y, &sol.x, "x", &mc)?;
    let root_a = necessity_root(c, &sol.z, &sol.y, "y", &ma)?;
    let root_b = necessity_root(a, &sol.x, &sol.z, "z", &mb)?;
    let out = LegendreConditions {
        neg_ab_res_c: Some(ResidueWitness { value: -(a * b), modulus: mc, root: root_c }),
        neg_bc_res_a: Some(ResidueWitness { value: -(b * c), modulus: ma, root: root_a }),
        neg_ac_res_b: Some(ResidueWitness { value: -(a * c), modulus: mb, root: root_b }),
    };
    for w in [&out.neg_ab_res_c, &out.neg_bc_res_a, &out.neg_ac_res_b] {
        assert!(
            w.as_ref().unwrap().verify(),
            "necessity witness failed verification — solution not primitive?"
        );
    }
    Ok(out)
}

/// Outcome of [`solve_general`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GeneralVerdict {
    Solvable {
        solution: Solution,
        /// Trace of the associated normal-form descent.
        trace: DescentTrace,
    },
    NoSolution(FailedLegendreCondition),
}

impl GeneralVerdict {
    pub fn is_solvable(&self) -> bool {
        matches!(self, GeneralVerdict::Solvable { .. })
    }
}

/// Decide `a·x² + b·y² + c·z² = 0` and construct a primitive solution when
/// one exists.
///
/// Pipeline: canonicalize, check Leg.1–3 (failing fast with a certificate
/// stated for the canonical equation), transform to the normal form, run the
/// descent, map the solution back and reduce it to primitive form.
pub fn solve_general(eq: &GeneralEquation) -> GeneralVerdict {
    let canon = canonicalize(eq);
    let cond = check_legendre_conditions(&canon.canonical);
    if let Some(failed) = first_failed_legendre_condition(&canon.canonical, &cond) {
        return GeneralVerdict::NoSolution(failed);
    }
    let normal = to_normal(&canon.canonical);
    let NormalVerdict::Solvable { solution, trace } = solve_normal(&normal) else {
        unreachable!("Leg.1-3 imply the normal-form conditions — internal bug");
    };
    let canonical_sol = from_normal_solution(&canon.canonical, &solution);
    let original_sol = canon.solution_to_original(&canonical_sol);
    let primitive = make_primitive(&Equation::General(eq.clone()), &original_sol);
    GeneralVerdict::Solvable { solution: primitive, trace }
}
