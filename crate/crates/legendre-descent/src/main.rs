//! Thin command-line front end.
//!
//! Exit codes: 0 = solvable / verified / found, 2 = provably unsolvable /
//! not a solution / nothing found, 1 = invalid input.

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use legendre_descent::descent::{
    check_normal_conditions, first_failed_condition, solve_normal, NormalEquation, NormalVerdict,
    Solution,
};
use legendre_descent::legendre::{
    check_legendre_conditions, first_failed_legendre_condition, make_primitive,
    necessity_witnesses_general, necessity_witnesses_normal, solve_general, Equation,
    GeneralEquation, GeneralVerdict,
};
use legendre_descent::oracle;
use legendre_descent::report::SolveReport;
use legendre_descent::residues::ResidueWitness;
use legendre_descent::DEFAULT_MAX_COEFF;

const EXIT_OK: i32 = 0;
const EXIT_INVALID: i32 = 1;
const EXIT_NO: i32 = 2;

fn parse_bigint(s: &str) -> Result<BigInt, String> {
    s.parse().map_err(|_| format!("{s:?} is not an integer"))
}

#[derive(Parser)]
#[command(
    name = "legendre",
    about = "Decide and solve ax² + by² + cz² = 0 and ax² + by² = z² over the integers",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CoeffArgs {
    /// Coefficient a
    #[arg(long, value_parser = parse_bigint, allow_hyphen_values = true)]
    a: BigInt,
    /// Coefficient b
    #[arg(long, value_parser = parse_bigint, allow_hyphen_values = true)]
    b: BigInt,
    /// Coefficient c; omit it to work with the normal form ax² + by² = z²
    #[arg(long, value_parser = parse_bigint, allow_hyphen_values = true)]
    c: Option<BigInt>,
    /// Cap on coefficient magnitude (trial-division factorization)
    #[arg(long, value_parser = parse_bigint, default_value_t = BigInt::from(DEFAULT_MAX_COEFF))]
    max_coeff: BigInt,
}

#[derive(Subcommand)]
enum Command {
    /// Decide solvability and construct a solution with its certificate
    Solve {
        #[command(flatten)]
        coeffs: CoeffArgs,
        /// Emit the result as JSON (integers as decimal strings)
        #[arg(long)]
        json: bool,
        /// Print the full descent trace
        #[arg(long)]
        trace: bool,
    },
    /// Report each solvability condition with its witness or refutation
    Check {
        #[command(flatten)]
        coeffs: CoeffArgs,
    },
    /// Check a claimed solution and re-derive its residue witnesses
    Verify {
        #[command(flatten)]
        coeffs: CoeffArgs,
        #[arg(long, value_parser = parse_bigint, allow_hyphen_values = true)]
        x: BigInt,
        #[arg(long, value_parser = parse_bigint, allow_hyphen_values = true)]
        y: BigInt,
        #[arg(long, value_parser = parse_bigint, allow_hyphen_values = true)]
        z: BigInt,
    },
    /// Brute-force scans and residue tables (ground truth for small inputs)
    Oracle {
        #[arg(long, value_parser = parse_bigint, allow_hyphen_values = true)]
        a: Option<BigInt>,
        #[arg(long, value_parser = parse_bigint, allow_hyphen_values = true)]
        b: Option<BigInt>,
        #[arg(long, value_parser = parse_bigint, allow_hyphen_values = true)]
        c: Option<BigInt>,
        /// Scan bound for x, y (and z in the general form)
        #[arg(long, default_value_t = 1000)]
        limit: u64,
        /// Print the quadratic residues modulo this number instead
        #[arg(long, value_parser = parse_bigint)]
        residues: Option<BigInt>,
    },
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // help/version requests are not input errors
            if e.use_stderr() {
                eprintln!("{e}");
                std::process::exit(EXIT_INVALID);
            }
            print!("{e}");
            std::process::exit(EXIT_OK);
        }
    };
    let code = match cli.command {
        Command::Solve { coeffs, json, trace } => cmd_solve(coeffs, json, trace),
        Command::Check { coeffs } => cmd_check(coeffs),
        Command::Verify { coeffs, x, y, z } => cmd_verify(coeffs, x, y, z),
        Command::Oracle { a, b, c, limit, residues } => cmd_oracle(a, b, c, limit, residues),
    };
    std::process::exit(code);
}

enum AnyEquation {
    Normal(NormalEquation),
    General(GeneralEquation),
}

fn build_equation(coeffs: &CoeffArgs) -> Result<AnyEquation, String> {
    match &coeffs.c {
        None => NormalEquation::with_max_coeff(coeffs.a.clone(), coeffs.b.clone(), &coeffs.max_coeff)
            .map(AnyEquation::Normal)
            .map_err(|e| e.to_string()),
        Some(c) => GeneralEquation::with_max_coeff(
            coeffs.a.clone(),
            coeffs.b.clone(),
            c.clone(),
            &coeffs.max_coeff,
        )
        .map(AnyEquation::General)
        .map_err(|e| e.to_string()),
    }
}

fn invalid_input(coeffs: &CoeffArgs, json: bool, message: &str) -> i32 {
    if json {
        println!(
            "{}",
            SolveReport::invalid(&coeffs.a, &coeffs.b, coeffs.c.as_ref(), message).to_json()
        );
    }
    eprintln!("invalid input: {message}");
    EXIT_INVALID
}

fn print_trace(report: &SolveReport) {
    let Some(steps) = &report.trace else { return };
    println!("descent trace:");
    for s in steps {
        println!(
            "  step {} [{}]: root={} h={} k={} -> A={} B={}, lifted solution ({}, {}, {})",
            s.i, s.side, s.root, s.h, s.k, s.a, s.b, s.lifted[0], s.lifted[1], s.lifted[2]
        );
    }
    if let Some(base) = &report.base_case {
        match (base.r.as_deref(), base.s.as_deref()) {
            (Some(r), Some(s)) => println!("  base case: {} with A = {r}² + {s}²", base.case),
            _ => println!("  base case: {}", base.case),
        }
    }
}

fn cmd_solve(coeffs: CoeffArgs, json: bool, trace: bool) -> i32 {
    let eq = match build_equation(&coeffs) {
        Ok(eq) => eq,
        Err(e) => return invalid_input(&coeffs, json, &e),
    };
    let (report, solvable, human) = match &eq {
        AnyEquation::Normal(ne) => {
            let verdict = solve_normal(ne);
            let report = SolveReport::from_normal(ne, &verdict);
            let human = match &verdict {
                NormalVerdict::Solvable { solution, trace } => {
                    format!("{ne}\nsolution: {solution}\nbound: {}", trace.bound)
                }
                NormalVerdict::NoSolution(f) => format!("{ne}\nno solution: {f}"),
            };
            (report, verdict.is_solvable(), human)
        }
        AnyEquation::General(ge) => {
            let verdict = solve_general(ge);
            let report = SolveReport::from_general(ge, &verdict);
            let human = match &verdict {
                GeneralVerdict::Solvable { solution, trace } => {
                    format!("{ge}\nsolution: {solution}\nbound: {}", trace.bound)
                }
                GeneralVerdict::NoSolution(f) => format!("{ge}\nno solution: {f}"),
            };
            (report, verdict.is_solvable(), human)
        }
    };
    if json {
        println!("{}", report.to_json());
    } else {
        println!("{human}");
        if trace {
            print_trace(&report);
        }
    }
    if solvable {
        EXIT_OK
    } else {
        EXIT_NO
    }
}

fn describe(held: &Option<ResidueWitness>) -> String {
    match held {
        Some(w) => format!("holds — {w}"),
        None => "fails".to_string(),
    }
}

fn cmd_check(coeffs: CoeffArgs) -> i32 {
    let eq = match build_equation(&coeffs) {
        Ok(eq) => eq,
        Err(e) => return invalid_input(&coeffs, false, &e),
    };
    match eq {
        AnyEquation::Normal(ne) => {
            let cond = check_normal_conditions(&ne);
            println!("{ne}");
            println!("d = gcd(a, b) = {}", cond.d);
            println!("Norm.1 (a R b): {}", describe(&cond.a_res_b));
            println!("Norm.2 (b R a): {}", describe(&cond.b_res_a));
            println!("Norm.3 (-(ab/d²) R d): {}", describe(&cond.neg_ab_res_d));
            match first_failed_condition(&ne, &cond) {
                None => {
                    println!("all conditions hold: the equation has a non-trivial solution");
                    EXIT_OK
                }
                Some(f) => {
                    println!("{f}");
                    EXIT_NO
                }
            }
        }
        AnyEquation::General(ge) => {
            let canon = legendre_descent::legendre::canonicalize(&ge);
            let cond = check_legendre_conditions(&canon.canonical);
            println!("{ge}");
            println!(
                "pairwise coprime: gcd(a,b) = gcd(a,c) = gcd(b,c) = 1; all square-free, mixed signs"
            );
            if canon.canonical != ge {
                println!("canonical form: {}", canon.canonical);
            }
            println!("Leg.1 (-ab R c): {}", describe(&cond.neg_ab_res_c));
            println!("Leg.2 (-bc R a): {}", describe(&cond.neg_bc_res_a));
            println!("Leg.3 (-ac R b): {}", describe(&cond.neg_ac_res_b));
            match first_failed_legendre_condition(&canon.canonical, &cond) {
                None => {
                    println!("all conditions hold: the equation has a non-trivial solution");
                    EXIT_OK
                }
                Some(f) => {
                    println!("{f}");
                    EXIT_NO
                }
            }
        }
    }
}

fn cmd_verify(coeffs: CoeffArgs, x: BigInt, y: BigInt, z: BigInt) -> i32 {
    let eq = match build_equation(&coeffs) {
        Ok(eq) => eq,
        Err(e) => return invalid_input(&coeffs, false, &e),
    };
    let sol = Solution::new(x.abs(), y.abs(), z.abs());
    let (wrapped, ok) = match &eq {
        AnyEquation::Normal(ne) => (Equation::Normal(ne.clone()), ne.is_nontrivial_solution(&sol)),
        AnyEquation::General(ge) => (Equation::General(ge.clone()), ge.is_nontrivial_solution(&sol)),
    };
    if !ok {
        println!("{sol} is not a non-trivial solution");
        return EXIT_NO;
    }
    println!("{sol} is a non-trivial solution");
    let primitive = make_primitive(&wrapped, &sol);
    if primitive != sol {
        println!("primitive form: {primitive}");
    }
    match &eq {
        AnyEquation::Normal(ne) => match necessity_witnesses_normal(ne, &primitive) {
            Ok(cond) => {
                println!("necessity witnesses:");
                println!("  Norm.1: {}", cond.a_res_b.unwrap());
                println!("  Norm.2: {}", cond.b_res_a.unwrap());
                println!("  Norm.3: {}", cond.neg_ab_res_d.unwrap());
            }
            Err(e) => println!("necessity witnesses unavailable: {e}"),
        },
        AnyEquation::General(ge) => match necessity_witnesses_general(ge, &primitive) {
            Ok(cond) => {
                println!("necessity witnesses:");
                println!("  Leg.1: {}", cond.neg_ab_res_c.unwrap());
                println!("  Leg.2: {}", cond.neg_bc_res_a.unwrap());
                println!("  Leg.3: {}", cond.neg_ac_res_b.unwrap());
            }
            Err(e) => println!("necessity witnesses unavailable: {e}"),
        },
    }
    EXIT_OK
}

fn cmd_oracle(
    a: Option<BigInt>,
    b: Option<BigInt>,
    c: Option<BigInt>,
    limit: u64,
    residues: Option<BigInt>,
) -> i32 {
    if let Some(m) = residues {
        if !m.is_positive() {
            eprintln!("invalid input: modulus must be positive");
            return EXIT_INVALID;
        }
        let table = oracle::residue_table(&m);
        let entries: Vec<String> = table.iter().map(|v| v.to_string()).collect();
        println!("quadratic residues mod {m}: {{{}}}", entries.join(", "));
        return EXIT_OK;
    }
    let (Some(a), Some(b)) = (a, b) else {
        eprintln!("invalid input: oracle needs --a and --b (or --residues)");
        return EXIT_INVALID;
    };
    if limit < 1 {
        eprintln!("invalid input: --limit must be at least 1");
        return EXIT_INVALID;
    }
    let found = match c {
        None => {
            if !a.is_positive() || !b.is_positive() {
                eprintln!("invalid input: normal-form coefficients must be positive");
                return EXIT_INVALID;
            }
            oracle::brute_force_normal(&a, &b, limit)
        }
        Some(c) => {
            if a.is_zero() || b.is_zero() || c.is_zero() {
                eprintln!("invalid input: coefficients must be non-zero");
                return EXIT_INVALID;
            }
            oracle::brute_force_general(&a, &b, &c, limit)
        }
    };
    match found {
        Some(sol) => {
            println!("first solution in scan order: {sol}");
            EXIT_OK
        }
        None => {
            println!("no solution with components up to {limit}");
            EXIT_NO
        }
    }
}
