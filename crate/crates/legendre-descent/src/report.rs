//! Machine-readable reports: a stable JSON form of solver results.
//!
//! All integers are serialized as decimal strings so arbitrary-precision
//! values survive any JSON reader. A parsed report can be re-verified from
//! scratch with [`SolveReport::verify`]: every descent step, every lift, the
//! base case, the bound and refutation certificates are checked against the
//! algebra, independent of how the report was produced.

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{gcd, is_prime};
use crate::descent::{
    BaseCase, DescentTrace, FailedNormalCondition, NormalConditionKind, NormalEquation,
    NormalVerdict, Side, Solution,
};
use crate::legendre::{
    canonicalize, to_normal, FailedLegendreCondition, GeneralEquation, GeneralVerdict,
    LegendreConditionKind,
};
use crate::residues::sqrt_mod_prime;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquationReport {
    /// `"normal"` or `"general"`.
    pub form: String,
    pub a: String,
    pub b: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub c: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStepReport {
    pub i: String,
    /// `"reduce_a"` or `"reduce_b"`.
    pub side: String,
    pub root: String,
    pub h: String,
    pub k: String,
    /// Coefficients of the reduced equation this step produced.
    #[serde(rename = "A")]
    pub a: String,
    #[serde(rename = "B")]
    pub b: String,
    /// Solution of the equation above this step, produced by its lift.
    pub lifted: [String; 3],
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BaseCaseReport {
    /// `"a_is_one"`, `"b_is_one"` or `"equal"`.
    pub case: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FailedConditionReport {
    /// `"Norm.1"`..`"Norm.3"` or `"Leg.1"`..`"Leg.3"`.
    pub condition: String,
    pub value: String,
    pub modulus: String,
    pub prime: String,
}

/// Top-level report for one solve invocation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveReport {
    pub equation: EquationReport,
    /// `"solvable"`, `"no_solution"` or `"invalid"`.
    pub result: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub solution: Option<[String; 3]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bound: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trace: Option<Vec<TraceStepReport>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub base_case: Option<BaseCaseReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failed_condition: Option<FailedConditionReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

fn dec(n: &BigInt) -> String {
    n.to_string()
}

fn solution_strings(s: &Solution) -> [String; 3] {
    [dec(&s.x), dec(&s.y), dec(&s.z)]
}

fn trace_reports(trace: &DescentTrace) -> Vec<TraceStepReport> {
    trace
        .steps
        .iter()
        .zip(&trace.lifted)
        .map(|(step, lifted)| {
            let (a, b) = step.coeffs_after();
            TraceStepReport {
                i: step.index.to_string(),
                side: match step.side {
                    Side::ReduceA => "reduce_a".into(),
                    Side::ReduceB => "reduce_b".into(),
                },
                root: dec(&step.root),
                h: dec(&step.h),
                k: dec(&step.k),
                a: dec(&a),
                b: dec(&b),
                lifted: solution_strings(lifted),
            }
        })
        .collect()
}

fn base_case_report(base: &BaseCase) -> BaseCaseReport {
    match base {
        BaseCase::AIsOne => BaseCaseReport { case: "a_is_one".into(), r: None, s: None },
        BaseCase::BIsOne => BaseCaseReport { case: "b_is_one".into(), r: None, s: None },
        BaseCase::Equal(ts) => BaseCaseReport {
            case: "equal".into(),
            r: Some(dec(&ts.r)),
            s: Some(dec(&ts.s)),
        },
    }
}

fn normal_condition_name(kind: NormalConditionKind) -> &'static str {
    match kind {
        NormalConditionKind::AResB => "Norm.1",
        NormalConditionKind::BResA => "Norm.2",
        NormalConditionKind::NegProductResGcd => "Norm.3",
    }
}

fn legendre_condition_name(kind: LegendreConditionKind) -> &'static str {
    match kind {
        LegendreConditionKind::NegAbResC => "Leg.1",
        LegendreConditionKind::NegBcResA => "Leg.2",
        LegendreConditionKind::NegAcResB => "Leg.3",
    }
}

impl SolveReport {
    pub fn from_normal(eq: &NormalEquation, verdict: &NormalVerdict) -> Self {
        let equation = EquationReport {
            form: "normal".into(),
            a: dec(eq.a()),
            b: dec(eq.b()),
            c: None,
        };
        match verdict {
            NormalVerdict::Solvable { solution, trace } => SolveReport {
                equation,
                result: "solvable".into(),
                solution: Some(solution_strings(solution)),
                bound: Some(dec(&trace.bound)),
                trace: Some(trace_reports(trace)),
                base_case: Some(base_case_report(&trace.base_case)),
                failed_condition: None,
                error: None,
            },
            NormalVerdict::NoSolution(f) => SolveReport {
                equation,
                result: "no_solution".into(),
                solution: None,
                bound: None,
                trace: None,
                base_case: None,
                failed_condition: Some(failed_normal_report(f)),
                error: None,
            },
        }
    }

    pub fn from_general(eq: &GeneralEquation, verdict: &GeneralVerdict) -> Self {
        let equation = EquationReport {
            form: "general".into(),
            a: dec(eq.a()),
            b: dec(eq.b()),
            c: Some(dec(eq.c())),
        };
        match verdict {
            GeneralVerdict::Solvable { solution, trace } => SolveReport {
                equation,
                result: "solvable".into(),
                solution: Some(solution_strings(solution)),
                bound: Some(dec(&trace.bound)),
                trace: Some(trace_reports(trace)),
                base_case: Some(base_case_report(&trace.base_case)),
                failed_condition: None,
                error: None,
            },
            GeneralVerdict::NoSolution(f) => SolveReport {
                equation,
                result: "no_solution".into(),
                solution: None,
                bound: None,
                trace: None,
                base_case: None,
                failed_condition: Some(failed_legendre_report(f)),
                error: None,
            },
        }
    }

    pub fn invalid(a: &BigInt, b: &BigInt, c: Option<&BigInt>, message: &str) -> Self {
        SolveReport {
            equation: EquationReport {
                form: if c.is_some() { "general" } else { "normal" }.into(),
                a: dec(a),
                b: dec(b),
                c: c.map(dec),
            },
            result: "invalid".into(),
            solution: None,
            bound: None,
            trace: None,
            base_case: None,
            failed_condition: None,
            error: Some(message.to_string()),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serialization cannot fail")
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }

    pub fn from_json(json: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(json)
    }

    /// Re-verify everything the report claims, from the parsed strings alone.
    pub fn verify(&self) -> Result<(), String> {
        if self.result == "invalid" {
            // Nothing provable to check; the equation may well be malformed.
            return Ok(());
        }
        let a = parse_int(&self.equation.a)?;
        let b = parse_int(&self.equation.b)?;
        let c = self.equation.c.as_deref().map(parse_int).transpose()?;
        enum Eq {
            Normal(NormalEquation),
            General(GeneralEquation),
        }
        let eq = match (self.equation.form.as_str(), &c) {
            ("normal", None) => {
                let cap = a.abs().max(b.abs()).max(BigInt::one());
                Eq::Normal(
                    NormalEquation::with_max_coeff(a.clone(), b.clone(), &cap)
                        .map_err(|e| e.to_string())?,
                )
            }
            ("general", Some(c)) => {
                let cap = a.abs().max(b.abs()).max(c.abs());
                Eq::General(
                    GeneralEquation::with_max_coeff(a.clone(), b.clone(), c.clone(), &cap)
                        .map_err(|e| e.to_string())?,
                )
            }
            _ => return Err("equation form and coefficients disagree".into()),
        };
        match self.result.as_str() {
            "no_solution" => {
                let f = self
                    .failed_condition
                    .as_ref()
                    .ok_or("no_solution requires failed_condition")?;
                let value = parse_int(&f.value)?;
                let modulus = parse_int(&f.modulus)?;
                let prime = parse_int(&f.prime)?;
                if !is_prime(&prime) {
                    return Err(format!("{prime} is not prime"));
                }
                if !modulus.is_multiple_of(&prime) {
                    return Err(format!("{prime} does not divide {modulus}"));
                }
                if sqrt_mod_prime(&value, &prime).is_some() {
                    return Err(format!("{value} is a square mod {prime}; refutation is wrong"));
                }
                let expected = match &eq {
                    Eq::Normal(ne) => {
                        let d = gcd(ne.a(), ne.b());
                        match f.condition.as_str() {
                            "Norm.1" => (ne.a().clone(), ne.b().clone()),
                            "Norm.2" => (ne.b().clone(), ne.a().clone()),
                            "Norm.3" => (-((ne.a() / &d) * (ne.b() / &d)), d),
                            other => return Err(format!("unknown condition {other}")),
                        }
                    }
                    Eq::General(ge) => {
                        let canon = canonicalize(ge).canonical;
                        match f.condition.as_str() {
                            "Leg.1" => (-(canon.a() * canon.b()), canon.c().abs()),
                            "Leg.2" => (-(canon.b() * canon.c()), canon.a().abs()),
                            "Leg.3" => (-(canon.a() * canon.c()), canon.b().abs()),
                            other => return Err(format!("unknown condition {other}")),
                        }
                    }
                };
                if (value, modulus) != expected {
                    return Err("failed condition does not match the equation".into());
                }
                Ok(())
            }
            "solvable" => {
                let sol = self.solution.as_ref().ok_or("solvable requires a solution")?;
                let sol = parse_solution(sol)?;
                let solves = match &eq {
                    Eq::Normal(ne) => ne.is_nontrivial_solution(&sol),
                    Eq::General(ge) => ge.is_nontrivial_solution(&sol),
                };
                if !solves {
                    return Err("claimed solution fails substitution".into());
                }
                if !gcd(&gcd(&sol.x, &sol.y), &sol.z).is_one() {
                    return Err("claimed solution is not primitive".into());
                }
                let steps = self.trace.as_ref().ok_or("solvable requires a trace")?;
                let base = self.base_case.as_ref().ok_or("solvable requires a base case")?;
                let bound = parse_int(self.bound.as_deref().ok_or("solvable requires a bound")?)?;
                let normal_eq = match &eq {
                    Eq::Normal(ne) => ne.clone(),
                    Eq::General(ge) => to_normal(&canonicalize(ge).canonical),
                };
                verify_trace(&normal_eq, steps, base, &bound)
            }
            other => Err(format!("unknown result {other}")),
        }
    }
}

fn failed_normal_report(f: &FailedNormalCondition) -> FailedConditionReport {
    FailedConditionReport {
        condition: normal_condition_name(f.kind).into(),
        value: dec(&f.value),
        modulus: dec(&f.modulus),
        prime: dec(&f.prime),
    }
}

fn failed_legendre_report(f: &FailedLegendreCondition) -> FailedConditionReport {
    FailedConditionReport {
        condition: legendre_condition_name(f.kind).into(),
        value: dec(&f.value),
        modulus: dec(&f.modulus),
        prime: dec(&f.prime),
    }
}

fn parse_int(s: &str) -> Result<BigInt, String> {
    s.parse().map_err(|_| format!("malformed integer {s:?}"))
}

fn parse_solution(strings: &[String; 3]) -> Result<Solution, String> {
    Ok(Solution::new(
        parse_int(&strings[0])?,
        parse_int(&strings[1])?,
        parse_int(&strings[2])?,
    ))
}

/// Check every recorded step identity and re-play every lift of a trace.
fn verify_trace(
    eq: &NormalEquation,
    steps: &[TraceStepReport],
    base: &BaseCaseReport,
    bound: &BigInt,
) -> Result<(), String> {
    let mut coeffs = (eq.a().clone(), eq.b().clone());
    let mut parsed = Vec::new();
    for (j, step) in steps.iter().enumerate() {
        if step.i != (j + 1).to_string() {
            return Err(format!("step {} carries index {}", j + 1, step.i));
        }
        let root = parse_int(&step.root)?;
        let h = parse_int(&step.h)?;
        let k = parse_int(&step.k)?;
        let a_after = parse_int(&step.a)?;
        let b_after = parse_int(&step.b)?;
        let lifted = parse_solution(&step.lifted)?;
        let (carried, other, new_coeff) = match step.side.as_str() {
            "reduce_a" => {
                if b_after != coeffs.1 {
                    return Err(format!("step {}: B changed on a reduce_a step", j + 1));
                }
                (coeffs.0.clone(), coeffs.1.clone(), a_after.clone())
            }
            "reduce_b" => {
                if a_after != coeffs.0 {
                    return Err(format!("step {}: A changed on a reduce_b step", j + 1));
                }
                (coeffs.1.clone(), coeffs.0.clone(), b_after.clone())
            }
            other => return Err(format!("unknown side {other}")),
        };
        if &root * &root - &other != &h * &h * &new_coeff * &carried {
            return Err(format!("step {}: root² − other ≠ h²·new·carried", j + 1));
        }
        if k != &h * &h * &new_coeff {
            return Err(format!("step {}: k ≠ h²·new", j + 1));
        }
        if &new_coeff * &h * 4 >= carried {
            return Err(format!("step {}: contraction new·h < carried/4 violated", j + 1));
        }
        if &root * 2 > carried {
            return Err(format!("step {}: root exceeds carried/2", j + 1));
        }
        coeffs = (a_after, b_after);
        parsed.push((step.side.clone(), root, h, new_coeff, other, lifted));
    }
    // Base case at the final level.
    let (al, bl) = coeffs;
    let base_solution = match base.case.as_str() {
        "a_is_one" => {
            if !al.is_one() {
                return Err("base case a_is_one but final A ≠ 1".into());
            }
            Solution::new(BigInt::one(), BigInt::zero(), BigInt::one())
        }
        "b_is_one" => {
            if !bl.is_one() {
                return Err("base case b_is_one but final B ≠ 1".into());
            }
            Solution::new(BigInt::zero(), BigInt::one(), BigInt::one())
        }
        "equal" => {
            if al != bl {
                return Err("base case equal but final A ≠ B".into());
            }
            let r = parse_int(base.r.as_deref().ok_or("equal base case requires r")?)?;
            let s = parse_int(base.s.as_deref().ok_or("equal base case requires s")?)?;
            if &r * &r + &s * &s != al {
                return Err("two-squares base case does not recompose".into());
            }
            Solution::new(r, s, bl)
        }
        other => return Err(format!("unknown base case {other}")),
    };
    // Replay the lifts bottom-up.
    let mut cur = base_solution;
    for (j, (side, root, h, new_coeff, other, lifted)) in parsed.iter().enumerate().rev() {
        cur = match side.as_str() {
            "reduce_a" => Solution::new(
                new_coeff * &cur.x * h,
                &cur.z + &cur.y * root,
                &cur.z * root + other * &cur.y,
            ),
            _ => Solution::new(
                &cur.z + &cur.x * root,
                new_coeff * &cur.y * h,
                &cur.z * root + other * &cur.x,
            ),
        };
        if &cur != lifted {
            return Err(format!("lift at step {} does not replay", j + 1));
        }
    }
    for c in cur.components() {
        if c > bound {
            return Err(format!("raw solution component {c} exceeds the bound {bound}"));
        }
    }
    if !eq.is_nontrivial_solution(&cur) {
        return Err("replayed raw solution fails substitution".into());
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::descent::solve_normal;
    use crate::legendre::solve_general;

    fn neq(a: i64, b: i64) -> NormalEquation {
        NormalEquation::new(BigInt::from(a), BigInt::from(b)).unwrap()
    }

    fn geq(a: i64, b: i64, c: i64) -> GeneralEquation {
        GeneralEquation::new(BigInt::from(a), BigInt::from(b), BigInt::from(c)).unwrap()
    }

    #[test]
    fn json_round_trip_reverifies() {
        for (a, b) in [(3, 13), (17, 13), (6, 10), (5, 5), (1, 7), (2, 3), (7, 15)] {
            let eq = neq(a, b);
            let report = SolveReport::from_normal(&eq, &solve_normal(&eq));
            let json = report.to_json();
            let parsed = SolveReport::from_json(&json).unwrap();
            assert_eq!(parsed, report);
            assert_eq!(parsed.verify(), Ok(()), "({a},{b})");
            // byte stability
            assert_eq!(parsed.to_json(), json);
        }
        for (a, b, c) in [(1, 1, -2), (3, 5, -2), (1, 1, -3), (-2, 1, 1), (-3, -5, 2)] {
            let eq = geq(a, b, c);
            let report = SolveReport::from_general(&eq, &solve_general(&eq));
            let json = report.to_json();
            let parsed = SolveReport::from_json(&json).unwrap();
            assert_eq!(parsed.verify(), Ok(()), "({a},{b},{c})");
            assert_eq!(parsed.to_json(), json);
        }
    }

    #[test]
    fn tampered_reports_fail_verification() {
        let eq = neq(17, 13);
        let good = SolveReport::from_normal(&eq, &solve_normal(&eq));

        let mut bad = good.clone();
        bad.solution = Some(["1".into(), "4".into(), "16".into()]);
        assert!(bad.verify().is_err());

        let mut bad = good.clone();
        bad.trace.as_mut().unwrap()[0].root = "9".into();
        assert!(bad.verify().is_err());

        let mut bad = good.clone();
        bad.trace.as_mut().unwrap()[1].lifted = ["2".into(), "2".into(), "8".into()];
        assert!(bad.verify().is_err());

        let mut bad = good.clone();
        bad.bound = Some("44".into());
        assert!(bad.verify().is_err());

        // refutation tampering
        let eq = neq(2, 3);
        let good = SolveReport::from_normal(&eq, &solve_normal(&eq));
        let mut bad = good.clone();
        bad.failed_condition.as_mut().unwrap().prime = "5".into();
        assert!(bad.verify().is_err());
    }

    #[test]
    fn invalid_report_shape() {
        let r = SolveReport::invalid(&BigInt::from(4), &BigInt::from(3), None, "a is not square-free");
        assert_eq!(r.result, "invalid");
        let json = r.to_json();
        let parsed = SolveReport::from_json(&json).unwrap();
        assert_eq!(parsed.error.as_deref(), Some("a is not square-free"));
    }
}
