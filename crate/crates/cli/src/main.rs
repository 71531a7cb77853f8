//! `hecke`: closed forms and verification suites as JSON.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
//! 3 precondition violation.

use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use hecke_core::arith::{format_rational, parse_rational};
use hecke_core::formulas::{
    compute_dset, corollary_h, hook_dimension, prop4_rhs, rtheta_value, theorem1_value, theorem2_value,
};
use hecke_core::partition::{IndexKind, IndexSequence, Partition};
use hecke_core::repr::matrix_element_f;
use hecke_core::tableau::StandardTableau;
use hecke_core::verify::{run_suite, Suite, VerificationReport, VerifyOptions};
use hecke_core::{Error, RatFunc, Rational};

#[derive(Parser)]
#[command(name = "hecke", version, about = "Eigenvalues of the intertwiner J on induced modules of the degenerate affine Hecke algebra")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a closed form or build an element.
    Compute {
        what: What,
        #[command(flatten)]
        inputs: Inputs,
    },
    /// Run a verification suite (or `all`) and print its report.
    Verify {
        /// theorem1, theorem2, corollary, prop1..prop7, eq4, yangbaxter, hookdim, rtheta or all
        suite: String,
        #[arg(long)]
        max_size: Option<usize>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 20)]
        samples: usize,
        /// Worker threads (default: all cores).
        #[arg(long)]
        jobs: Option<usize>,
        /// Compute over rational functions instead of at points.
        #[arg(long)]
        symbolic: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum What {
    H,
    RGamma,
    RDelta,
    Prop4Rhs,
    RTheta,
    Dset,
    Hooks,
    #[value(name = "F")]
    F,
}

#[derive(Args)]
struct Inputs {
    #[arg(long, allow_hyphen_values = true)]
    lambda: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    mu: Option<String>,
    #[arg(long)]
    a: Option<String>,
    #[arg(long)]
    b: Option<String>,
    #[arg(long)]
    shape: Option<String>,
    /// Rows separated by `/`, entries by `,`.
    #[arg(long)]
    tableau: Option<String>,
    /// Evaluate at this rational point instead of printing the function.
    #[arg(long, allow_hyphen_values = true)]
    u: Option<String>,
    /// Row length for r-theta.
    #[arg(long)]
    m: Option<usize>,
}

enum Failure {
    Usage(String),
    Precondition(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) => Failure::Usage(e.to_string()),
            _ => Failure::Precondition(e.to_string()),
        }
    }
}

fn required<'a>(v: &'a Option<String>, flag: &str) -> Result<&'a str, Failure> {
    v.as_deref().ok_or_else(|| Failure::Usage(format!("missing --{flag}")))
}

fn partition(v: &Option<String>, flag: &str) -> Result<Partition, Failure> {
    required(v, flag)?.parse::<Partition>().map_err(|e| Failure::Usage(format!("--{flag}: {e}")))
}

fn function_output(f: &RatFunc, u: &Option<String>) -> Result<Value, Failure> {
    match u {
        None => Ok(f.to_json()),
        Some(s) => {
            let point: Rational = parse_rational(s).map_err(|e| Failure::Usage(format!("--u: {e}")))?;
            let value = f.eval(&point)?;
            Ok(json!({ "u": format_rational(&point), "value": format_rational(&value) }))
        }
    }
}

fn compute(what: What, inp: &Inputs) -> Result<Value, Failure> {
    match what {
        What::H => function_output(&corollary_h(&partition(&inp.lambda, "lambda")?, &partition(&inp.mu, "mu")?), &inp.u),
        What::RGamma => {
            let a = IndexSequence::parse(required(&inp.a, "a")?, IndexKind::Rows)?;
            let f = theorem1_value(&partition(&inp.lambda, "lambda")?, &partition(&inp.mu, "mu")?, &a)?;
            function_output(&f, &inp.u)
        }
        What::RDelta => {
            let b = IndexSequence::parse(required(&inp.b, "b")?, IndexKind::Columns)?;
            let f = theorem2_value(&partition(&inp.lambda, "lambda")?, &partition(&inp.mu, "mu")?, &b)?;
            function_output(&f, &inp.u)
        }
        What::Prop4Rhs => {
            function_output(&prop4_rhs(&partition(&inp.lambda, "lambda")?, &partition(&inp.mu, "mu")?), &inp.u)
        }
        What::RTheta => {
            let m = inp.m.ok_or_else(|| Failure::Usage("missing --m".into()))?;
            function_output(&rtheta_value(&partition(&inp.lambda, "lambda")?, m)?, &inp.u)
        }
        What::Dset => {
            let d = compute_dset(&partition(&inp.lambda, "lambda")?, &partition(&inp.mu, "mu")?)?;
            Ok(json!({
                "lambda": d.lam.parts(),
                "mu": d.mu.parts(),
                "points": d.points.iter().collect::<Vec<_>>(),
                "gamma_sequences": d.gammas,
                "delta_sequences": d.deltas,
            }))
        }
        What::Hooks => {
            let h = hook_dimension(&partition(&inp.shape, "shape")?)?;
            let num = |x: String| Value::Number(x.parse().expect("integer literal"));
            Ok(json!({ "hooks": h.hooks, "product": num(h.product.to_string()), "dim": num(h.dim.to_string()) }))
        }
        What::F => {
            let t = StandardTableau::parse(required(&inp.tableau, "tableau")?)?;
            let f = matrix_element_f(&t);
            let terms: Vec<Value> = f
                .terms()
                .iter()
                .map(|(s, c)| json!({ "perm": s.to_string(), "coeff": format_rational(c) }))
                .collect();
            Ok(json!({ "tableau": t.to_string(), "degree": t.size(), "terms": terms }))
        }
    }
}

fn summarize(r: &VerificationReport, secs: f64) {
    eprintln!("{}: {} ({} cases, {} failed) in {:.1}s", r.suite, r.status, r.total, r.failed, secs);
}

fn verify(suite: &str, opts: &VerifyOptions) -> Result<(Value, bool), Failure> {
    if suite == "all" {
        let mut reports = Vec::new();
        for s in Suite::ALL {
            let start = Instant::now();
            let o = VerifyOptions { max_size: opts.max_size.map(|m| m.min(s.hard_cap())), ..opts.clone() };
            let r = run_suite(s, &o)?;
            summarize(&r, start.elapsed().as_secs_f64());
            reports.push(r);
        }
        let ok = reports.iter().all(VerificationReport::passed);
        let value = json!({
            "suite": "all",
            "status": if ok { "pass" } else { "fail" },
            "reports": reports,
        });
        return Ok((value, ok));
    }
    let s: Suite = suite.parse().map_err(|e: Error| Failure::Usage(e.to_string()))?;
    let start = Instant::now();
    let r = run_suite(s, opts)?;
    summarize(&r, start.elapsed().as_secs_f64());
    let ok = r.passed();
    Ok((serde_json::to_value(&r).expect("report serializes"), ok))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Compute { what, inputs } => compute(*what, inputs).map(|v| (v, true, false)),
        Command::Verify { suite, max_size, seed, samples, jobs, symbolic } => {
            if let Some(j) = jobs {
                if rayon::ThreadPoolBuilder::new().num_threads(*j).build_global().is_err() {
                    eprintln!("warning: thread pool already initialized");
                }
            }
            let opts = VerifyOptions { max_size: *max_size, seed: *seed, samples: *samples, symbolic: *symbolic };
            verify(suite, &opts).map(|(v, ok)| (v, ok, true))
        }
    };
    match outcome {
        Ok((value, ok, pretty)) => {
            let text = if pretty { serde_json::to_string_pretty(&value) } else { serde_json::to_string(&value) };
            println!("{}", text.expect("json"));
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Precondition(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
