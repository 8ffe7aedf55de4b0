mod io;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use poslab::checks::{is_mconvex_function, is_valuated_matroid, ConeMode, FunctionMode};
use poslab::registry::{CheckOptions, Outcome, Registry, Subject};
use poslab::tropical::{tropicalize, Puiseux};
use poslab::{Rational, Status, Verdict};
use serde::Serialize;

use io::{InputDigest, LoadedPoly};

/// Exact and sampled checks for positroids, Lorentzian, stable and Rayleigh
/// polynomials, and Dressians.
///
/// Exit status: 0 for PASS_CERTIFIED or PASS_SAMPLED, 1 for FAIL, 2 for
/// input errors.
#[derive(Debug, Parser)]
#[command(name = "poslab", version)]
struct Cli {
    /// Seed for every sampled check.
    #[arg(long, global = true, env = "POSLAB_SEED", default_value_t = 0)]
    seed: u64,
    /// Sample budget (per check; defaults depend on the check).
    #[arg(long, global = true)]
    samples: Option<usize>,
    /// Write the report as JSON to this file.
    #[arg(long, global = true, value_name = "FILE")]
    json: Option<PathBuf>,
    /// Report wall time (also recorded in the JSON report).
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct MatroidArg {
    /// Matroid JSON file or corpus name (fano, vamos, choe-wagner-L, uniform-k-n).
    #[arg(long)]
    matroid: String,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct PolySource {
    /// Use the basis generating polynomial of this matroid.
    #[arg(long)]
    matroid: Option<String>,
    /// Polynomial JSON file.
    #[arg(long)]
    poly: Option<String>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check the basis exchange axiom.
    Validate(MatroidArg),
    /// Positroid test of a matroid, or total nonnegativity of a matrix.
    Positroid {
        #[arg(long, required_unless_present = "matrix", conflicts_with = "matrix")]
        matroid: Option<String>,
        /// Matrix JSON file (rows of rationals).
        #[arg(long)]
        matrix: Option<String>,
    },
    /// Negative correlation of every minor.
    Balanced(MatroidArg),
    /// Negative correlation of every pair, listing correlated pairs.
    Correlated(MatroidArg),
    /// Sampled c-Rayleigh check on the nonnegative orthant.
    Rayleigh {
        #[command(flatten)]
        source: PolySource,
        /// The constant c, as p/q.
        #[arg(long)]
        c: Rational,
    },
    /// Sampled Rayleigh check on all of real space, then a fixed grid.
    StrongRayleigh {
        #[command(flatten)]
        source: PolySource,
    },
    /// Real-rootedness along sampled lines with positive direction.
    Stable {
        #[command(flatten)]
        source: PolySource,
    },
    /// Exact Lorentzian test.
    Lorentzian {
        #[command(flatten)]
        source: PolySource,
    },
    /// Sampled hyperbolicity in direction e.
    Hyperbolic {
        #[command(flatten)]
        source: PolySource,
        /// Direction, e.g. "1,1,0".
        #[arg(long, allow_hyphen_values = true)]
        e: String,
        /// Also require the nonnegative orthant to lie in the hyperbolicity cone.
        #[arg(long)]
        cone: bool,
    },
    /// Three-term tropical Plücker relations.
    Dressian {
        /// Defaults to the support of the weights.
        #[arg(long)]
        matroid: Option<String>,
        #[arg(long)]
        weights: String,
        /// Positive relations (the matroid must be a positroid).
        #[arg(long)]
        positive: bool,
    },
    /// Tropical incidence relations of a flag.
    Flag {
        #[arg(long)]
        chain: String,
    },
    /// Lorentzian lift of a valuated matroid, checked at t0 or on a schedule.
    Lift {
        #[arg(long)]
        weights: String,
        #[arg(long)]
        matroid: Option<String>,
        #[arg(long)]
        t0: Option<Rational>,
    },
    /// Tropicalize a polynomial with Puiseux coefficients.
    Tropicalize {
        #[arg(long)]
        poly: String,
    },
    /// Run a named reproduction scenario.
    Reproduce { name: String },
    /// List checks and scenarios.
    List,
}

#[derive(Serialize)]
struct Report<'a> {
    command: Vec<String>,
    check: &'a str,
    inputs: &'a [InputDigest],
    seed: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    samples: Option<usize>,
    status: &'static str,
    #[serde(flatten)]
    outcome: &'a Outcome,
    #[serde(skip_serializing_if = "Option::is_none")]
    wall_time_ms: Option<u128>,
}

struct Run {
    check: String,
    inputs: Vec<InputDigest>,
    outcome: Outcome,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    match execute(&cli) {
        Ok(Some(run)) => {
            let elapsed = cli.timing.then(|| start.elapsed().as_millis());
            if let Err(e) = report(&cli, &run, elapsed) {
                eprintln!("error: {e:#}");
                return ExitCode::from(2);
            }
            if run.outcome.status() == Status::Fail {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Ok(None) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn poly_subject(source: &PolySource, inputs: &mut Vec<InputDigest>) -> Result<Subject> {
    if let Some(m) = &source.matroid {
        let (raw, d) = io::load_matroid(m)?;
        inputs.push(d);
        return Ok(Subject::Matroid(raw.into_matroid()?));
    }
    let path = source.poly.as_deref().expect("clap requires one source");
    let (poly, d) = io::load_poly(path)?;
    inputs.push(d);
    match poly {
        LoadedPoly::Rational(f) => Ok(Subject::Poly(f)),
        LoadedPoly::Puiseux(_) => bail!("{path} has Puiseux coefficients; this check needs rational ones"),
    }
}

fn matroid_subject(arg: &str, inputs: &mut Vec<InputDigest>) -> Result<Subject> {
    let (raw, d) = io::load_matroid(arg)?;
    inputs.push(d);
    Ok(Subject::Matroid(raw.into_matroid()?))
}

fn weighted_subject(weights: &str, matroid: Option<&str>, inputs: &mut Vec<InputDigest>) -> Result<Subject> {
    let m = match matroid {
        Some(arg) => {
            let (raw, d) = io::load_matroid(arg)?;
            inputs.push(d);
            Some(raw.into_matroid()?)
        }
        None => None,
    };
    let (w, d) = io::load_weights(weights, m.as_ref())?;
    inputs.push(d);
    let matroid = m.unwrap_or_else(|| w.matroid().clone());
    Ok(Subject::Weighted { matroid, weights: w })
}

/// Runs the command; `None` for commands without a verdict.
fn execute(cli: &Cli) -> Result<Option<Run>> {
    let registry = Registry::with_builtin();
    let mut options = CheckOptions { seed: cli.seed, samples: cli.samples, ..Default::default() };
    let mut inputs = Vec::new();
    let (check, subject) = match &cli.command {
        Command::List => {
            for name in registry.check_names() {
                println!("check     {name:<32} {}", registry.check(name).expect("listed").description());
            }
            for name in registry.scenario_names() {
                println!("scenario  {name:<32} {}", registry.scenario(name).expect("listed").description());
            }
            return Ok(None);
        }
        Command::Reproduce { name } => {
            let outcome = registry.reproduce(name, &options).map_err(|e| {
                let known: Vec<&str> = registry.scenario_names().collect();
                anyhow::anyhow!("{e} (known: {})", known.join(", "))
            })?;
            return Ok(Some(Run { check: format!("reproduce {name}"), inputs, outcome }));
        }
        Command::Tropicalize { poly } => {
            let (p, d) = io::load_poly(poly)?;
            inputs.push(d);
            let outcome = tropical_outcome(p)?;
            return Ok(Some(Run { check: "tropicalize".into(), inputs, outcome }));
        }
        Command::Validate(a) => {
            let (raw, d) = io::load_matroid(&a.matroid)?;
            inputs.push(d);
            if raw.sets.is_empty() {
                bail!("no bases given");
            }
            ("validate", Subject::Family { n: raw.ground.len(), sets: raw.sets })
        }
        Command::Positroid { matroid, matrix } => match (matroid, matrix) {
            (_, Some(path)) => {
                let (a, d) = io::load_matrix(path)?;
                inputs.push(d);
                ("positroid", Subject::Matrix(a))
            }
            (Some(m), None) => ("positroid", matroid_subject(m, &mut inputs)?),
            (None, None) => unreachable!("clap requires one source"),
        },
        Command::Balanced(a) => ("balanced", matroid_subject(&a.matroid, &mut inputs)?),
        Command::Correlated(a) => ("correlated", matroid_subject(&a.matroid, &mut inputs)?),
        Command::Rayleigh { source, c } => {
            options.c = Some(c.clone());
            ("rayleigh", poly_subject(source, &mut inputs)?)
        }
        Command::StrongRayleigh { source } => ("strong-rayleigh", poly_subject(source, &mut inputs)?),
        Command::Stable { source } => ("stable", poly_subject(source, &mut inputs)?),
        Command::Lorentzian { source } => ("lorentzian", poly_subject(source, &mut inputs)?),
        Command::Hyperbolic { source, e, cone } => {
            options.e = Some(io::parse_vector(e).context("bad --e")?);
            options.cone = if *cone { ConeMode::Orthant } else { ConeMode::Off };
            ("hyperbolic", poly_subject(source, &mut inputs)?)
        }
        Command::Dressian { matroid, weights, positive } => {
            let name = if *positive { "positive-dressian" } else { "dressian" };
            (name, weighted_subject(weights, matroid.as_deref(), &mut inputs)?)
        }
        Command::Flag { chain } => {
            let (c, d) = io::load_chain(chain)?;
            inputs.push(d);
            ("flag", Subject::Chain(c))
        }
        Command::Lift { weights, matroid, t0 } => {
            options.t0 = t0.clone();
            ("lift", weighted_subject(weights, matroid.as_deref(), &mut inputs)?)
        }
    };
    let outcome = registry.run(check, &subject, &options)?;
    Ok(Some(Run { check: check.to_string(), inputs, outcome }))
}

/// Min-plus tropicalization; the verdict is the valuated-matroid test on a
/// 0/1 domain and the M-convexity test otherwise.
fn tropical_outcome(p: LoadedPoly) -> Result<Outcome> {
    let f = match p {
        LoadedPoly::Puiseux(f) => f,
        LoadedPoly::Rational(f) => f.map_coeffs(|c| Puiseux::constant(c.clone())),
    };
    let trop = tropicalize(&f)?;
    let mu = &trop.min_plus;
    let binary = mu.values().keys().all(|e| e.iter().all(|&a| a <= 1));
    let verdict: Verdict =
        if binary { is_valuated_matroid(mu)?.verdict } else { is_mconvex_function(mu, FunctionMode::Symmetric)? };
    let mut out = Outcome::new(verdict);
    for (e, v) in mu.values() {
        let sign = if trop.signs[e] > 0 { "+" } else { "-" };
        let exp: Vec<String> = e.iter().map(u32::to_string).collect();
        out = out.detail(format!("ord [{}]", exp.join(",")), format!("{v} (leading sign {sign})"));
    }
    Ok(out)
}

fn report(cli: &Cli, run: &Run, elapsed: Option<u128>) -> Result<()> {
    let v = &run.outcome.verdict;
    println!("{}: {}", run.check, v.status.label());
    print_verdict_body(v, "  ")?;
    for d in &run.outcome.details {
        println!("  {}: {}", d.key, d.value);
    }
    for s in &run.outcome.steps {
        println!("  step {}: {}", s.name, s.verdict.status.label());
        print_verdict_body(&s.verdict, "    ")?;
    }
    if let Some(ms) = elapsed {
        eprintln!("wall time: {ms} ms");
    }
    if let Some(path) = &cli.json {
        let command = std::iter::once("poslab".to_string()).chain(std::env::args().skip(1)).collect();
        let r = Report {
            command,
            check: &run.check,
            inputs: &run.inputs,
            seed: cli.seed,
            samples: cli.samples,
            status: v.status.label(),
            outcome: &run.outcome,
            wall_time_ms: elapsed,
        };
        let mut text = serde_json::to_string_pretty(&r)?;
        text.push('\n');
        std::fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))?;
    }
    Ok(())
}

fn print_verdict_body(v: &Verdict, indent: &str) -> Result<()> {
    if let Some(c) = &v.certificate {
        println!("{indent}certificate: {}", serde_json::to_string(c)?);
    }
    if let Some(w) = &v.witness {
        println!("{indent}witness: {}", serde_json::to_string(w)?);
    }
    let e = v.effort;
    if e.samples > 0 || e.relations > 0 {
        println!("{indent}effort: samples={} relations={}", e.samples, e.relations);
    }
    Ok(())
}
