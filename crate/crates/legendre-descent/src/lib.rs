//! Exact-integer solver for ternary quadratic diophantine equations.
//!
//! This crate decides whether `a·x² + b·y² + c·z² = 0` (square-free, pairwise
//! coprime, mixed-sign coefficients) and the normal form `a·x² + b·y² = z²`
//! (square-free positive coefficients) have non-trivial integer solutions —
//! the classical criterion of Legendre — and, when they do, constructs one by
//! an explicit descent. Every run produces checkable artifacts:
//!
//! * residue **witnesses** for each solvability condition (or a refuting
//!   prime when one fails),
//! * a **descent trace** recording each coefficient reduction and each
//!   lifted solution, re-verifiable step by step,
//! * a **bound certificate**: all components of the constructed solution are
//!   at most `b·(3a/2)^⌈log₄a⌉·(3b/2)^⌈log₄b⌉`.
//!
//! All arithmetic is exact (`num-bigint`); nothing is floating-point or
//! probabilistic.
//!
//! ```
//! use legendre_descent::{NormalEquation, NormalVerdict, solve_normal};
//! use num_bigint::BigInt;
//!
//! let eq = NormalEquation::new(BigInt::from(17), BigInt::from(13)).unwrap();
//! match solve_normal(&eq) {
//!     NormalVerdict::Solvable { solution, trace } => {
//!         assert_eq!(solution.to_string(), "(1, 4, 15)");
//!         assert!(trace.verify().is_ok());
//!     }
//!     NormalVerdict::NoSolution(failed) => println!("{failed}"),
//! }
//! ```
//!
//! Module map: [`arith`] has the integer primitives (gcd/Bézout, isqrt,
//! factorization, square-free splitting), [`residues`] the quadratic-residue
//! and CRT machinery, [`two_squares`] the sum-of-two-squares descent,
//! [`descent`] the normal-form solver, [`legendre`] the general-form API,
//! [`oracle`] an independent brute-force ground truth, and [`report`] the
//! JSON serialization of results. The `examples/` directory walks through
//! each capability; a thin `legendre` binary exposes them as subcommands.

pub mod arith;
pub mod descent;
pub mod legendre;
pub mod oracle;
pub mod report;
pub mod residues;
pub mod two_squares;

/// Default cap on coefficient magnitude: trial-division factorization stays
/// tractable up to here. Override per equation with the `with_max_coeff`
/// constructors or the CLI `--max-coeff` flag.
pub const DEFAULT_MAX_COEFF: u64 = 1_000_000_000_000;

pub use arith::{BezoutCertificate, SquareFreeSplit};
pub use descent::{
    check_normal_conditions, solution_bound, solve_normal, BaseCase, DescentTrace,
    FailedNormalCondition, InvalidNormalEquation, NormalConditionKind, NormalConditions,
    NormalEquation, NormalVerdict, ReductionStep, Side, Solution,
};
pub use legendre::{
    canonicalize, check_legendre_conditions, make_primitive, necessity_witnesses_general,
    necessity_witnesses_normal, normal_to_general, solve_general, to_normal, Canonicalization,
    Equation, FailedLegendreCondition, GeneralEquation, GeneralVerdict, LegendreConditionKind,
    LegendreConditions, ValidationError,
};
pub use report::SolveReport;
pub use residues::{CongruenceSystem, ResidueWitness};
pub use two_squares::TwoSquares;
