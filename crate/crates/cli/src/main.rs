//! `kummer` — exact computations with cyclotomic integers and their ideal
//! prime divisors, plus the radical-axis / ideal-chord geometry companion.
//!
//! Exit codes: 0 success, 1 input error, 2 internal contract violation
//! (an oracle disagreement or theorem-check failure — never expected).

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

mod render;
mod run;

#[derive(Parser)]
#[command(
    name = "kummer",
    about = "Exact cyclotomic ideal-divisor arithmetic and exact circle geometry",
    version
)]
struct Cli {
    /// Output format
    #[arg(long, global = true, default_value = "text", value_parser = ["text", "json"])]
    format: String,

    /// Lift the default lambda <= 31 guard
    #[arg(long, global = true)]
    allow_large: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct BudgetArgs {
    /// Max number of nonzero coefficients in search candidates
    #[arg(long, default_value_t = 3)]
    support: usize,
    /// Coefficients range over [-bound, bound]
    #[arg(long, default_value_t = 3)]
    bound: u64,
    /// Hard cap on the number of candidates scanned
    #[arg(long, default_value_t = 1_000_000)]
    max_candidates: u64,
}

#[derive(Args, Clone)]
struct DivisorSelector {
    /// Rational prime whose divisors are meant
    #[arg(long)]
    q: u64,
    /// Divisor index: cyclic shift of the canonical u-tuple
    #[arg(long, conflicts_with = "xi")]
    shift: Option<usize>,
    /// Divisor identity by its congruence root (f = 1 divisors only)
    #[arg(long)]
    xi: Option<u64>,
}

#[derive(Subcommand)]
enum Command {
    /// Norm of a cyclotomic integer, cross-checked against the resultant route
    Norm {
        #[arg(long)]
        lambda: u64,
        /// Comma-separated coefficient list a0,a1,...,a_{lambda-1}
        #[arg(long)]
        coeffs: String,
    },
    /// Product of two cyclotomic integers
    Mul {
        #[arg(long)]
        lambda: u64,
        #[arg(long)]
        g: String,
        #[arg(long)]
        h: String,
    },
    /// The substitution alpha -> alpha^k
    Conj {
        #[arg(long)]
        lambda: u64,
        #[arg(long)]
        g: String,
        #[arg(long)]
        k: u64,
    },
    /// Evaluate g at alpha = xi modulo an integer
    Eval {
        #[arg(long)]
        lambda: u64,
        #[arg(long)]
        g: String,
        #[arg(long)]
        xi: u64,
        #[arg(long)]
        modulus: u64,
    },
    /// Period system of (lambda, q): f, e, gamma, cosets, period polynomial, u-tuple
    Periods {
        #[arg(long)]
        lambda: u64,
        #[arg(long)]
        q: u64,
    },
    /// All ideal prime divisors of q over lambda
    Divisors {
        #[arg(long)]
        lambda: u64,
        #[arg(long)]
        q: u64,
    },
    /// Does the selected divisor divide g?
    Divides {
        #[arg(long)]
        lambda: u64,
        #[command(flatten)]
        divisor: DivisorSelector,
        #[arg(long)]
        g: String,
    },
    /// Multiplicity of the selected divisor in g
    Valuation {
        #[arg(long)]
        lambda: u64,
        #[command(flatten)]
        divisor: DivisorSelector,
        #[arg(long)]
        g: String,
    },
    /// Full ideal factorization of g
    Factor {
        #[arg(long)]
        lambda: u64,
        #[arg(long)]
        coeffs: String,
    },
    /// Bounded brute-force search for an actual generator of a divisor
    Search {
        #[arg(long)]
        lambda: u64,
        #[command(flatten)]
        divisor: DivisorSelector,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Oracle-agreement report: congruence test vs exact division by found generators
    Verify {
        #[arg(long)]
        lambda: u64,
        #[arg(long)]
        q: u64,
        #[arg(long)]
        g: String,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Per-prime divisor census table for q <= q-max
    Sweep {
        #[arg(long)]
        lambda: u64,
        #[arg(long)]
        q_max: u64,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Exact circle and conic geometry
    #[command(subcommand)]
    Geometry(GeometryCommand),
}

#[derive(Subcommand)]
enum GeometryCommand {
    /// Radical axis of two circles and, when real, their common chord
    RadicalAxis {
        /// First circle as cx,cy,r2 (rationals like 1/2 allowed)
        #[arg(long)]
        c1: String,
        /// Second circle as cx,cy,r2
        #[arg(long)]
        c2: String,
    },
    /// Chord configuration of the ellipse x^2/a^2 + y^2/b^2 = 1 cut at x = x0
    Chord {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        #[arg(long)]
        x0: String,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // clap's own exit code conventions collide with "2 = internal";
            // every argument problem is an input error here.
            if err.use_stderr() {
                eprint!("{err}");
                return ExitCode::from(1);
            }
            print!("{err}");
            return ExitCode::SUCCESS;
        }
    };
    let json = cli.format == "json";
    match run::dispatch(cli.command, json, cli.allow_large) {
        Ok(output) => {
            println!("{output}");
            ExitCode::SUCCESS
        }
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}
