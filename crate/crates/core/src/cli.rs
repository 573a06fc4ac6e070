//! Command-line front end: argument types, dispatch, and report rendering.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::characters::{mn_character, CycleType};
use crate::littlewood_richardson::{lr_coefficient, lr_expand_product};
use crate::partitions::Partition;
use crate::symfunc::{reduced_schur, schur, GradedPolynomial};
use crate::theorems::{self, basis_for_weight, weight_of, DecompositionReport, Weight};
use crate::vertex::{self, commutator_fit, CommutatorFit, OddPolynomial, Operator};

pub const THREADS_ENV: &str = "COREQUOT_THREADS";

#[derive(Debug, Clone, Parser)]
#[command(name = "corequot", version, about = "2-quotients, reduced Schur functions and weight spaces of the basic A1(1)-module")]
pub struct CommandRequest {
    /// Print the canonical JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Beta-set, 2-core and 2-quotient of a partition.
    Quotient {
        #[arg(value_parser = parse_partition)]
        partition: Partition,
        /// Even beta-set length (defaults to the smallest valid one).
        #[arg(long)]
        padding: Option<usize>,
    },
    /// The 2-core of a partition.
    Core {
        #[arg(value_parser = parse_partition)]
        partition: Partition,
    },
    /// The 2-sign of a partition.
    Sign {
        #[arg(value_parser = parse_partition)]
        partition: Partition,
    },
    /// Schur function in the variables t1, t2, ...
    Schur {
        #[arg(value_parser = parse_partition)]
        partition: Partition,
        /// Set the even variables to zero.
        #[arg(long)]
        reduced: bool,
    },
    /// Irreducible character value of S_N.
    Character {
        #[arg(value_parser = parse_partition)]
        shape: Partition,
        #[arg(value_parser = parse_partition)]
        cycles: Partition,
    },
    /// Littlewood–Richardson coefficient c^outer_{inner, content}.
    Lr {
        #[arg(value_parser = parse_partition)]
        outer: Partition,
        #[arg(value_parser = parse_partition)]
        inner: Partition,
        #[arg(value_parser = parse_partition)]
        content: Partition,
    },
    /// Expand the product S_mu · S_nu in Schur functions.
    LrExpand {
        #[arg(value_parser = parse_partition)]
        mu: Partition,
        #[arg(value_parser = parse_partition)]
        nu: Partition,
    },
    /// Weight Λ_r - nδ of the reduced Schur function of a partition.
    Weight {
        #[arg(value_parser = parse_partition)]
        partition: Partition,
    },
    /// Basis partitions of the weight space Λ_r - nδ.
    Basis { r: usize, n: usize },
    /// Run one of the verification suites.
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// Heisenberg and vertex operators.
    #[command(subcommand)]
    Vertex(VertexCommand),
    /// Run a check on every partition listed in a file, one per line.
    Batch(BatchArgs),
}

#[derive(Debug, Clone, Subcommand)]
pub enum VerifyCommand {
    /// Linear independence of the weight-space basis.
    Theorem2 {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        n: usize,
    },
    /// LR formula against the exact decomposition.
    Theorem3 {
        #[arg(value_parser = parse_partition, conflicts_with = "max_size")]
        partition: Option<Partition>,
        /// Check every partition up to this size.
        #[arg(long)]
        max_size: Option<usize>,
    },
    /// Weight multiplicities against odd-part partition counts.
    Multiplicity {
        #[arg(long)]
        max_degree: usize,
    },
    /// The truncated q-series identity.
    Gauss {
        #[arg(long)]
        order: usize,
    },
}

#[derive(Debug, Clone, Subcommand)]
pub enum VertexCommand {
    /// Apply X_k to a reduced Schur function or to a polynomial.
    Apply {
        #[arg(long, allow_negative_numbers = true)]
        k: i64,
        /// A partition, or a polynomial when --poly is given.
        input: String,
        /// Read the input as a polynomial (pretty or JSON form).
        #[arg(long)]
        poly: bool,
    },
    /// Fit the brackets among a_j and X_k on all monomials up to a degree.
    Commutators {
        #[arg(long, default_value_t = 6)]
        degree: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BatchCheck {
    Theorem3,
    Theorem2,
    Roundtrip,
}

#[derive(Debug, Clone, Args)]
pub struct BatchArgs {
    pub path: PathBuf,
    #[arg(long, value_enum, default_value_t = BatchCheck::Theorem3)]
    pub check: BatchCheck,
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    s.parse().map_err(|e: crate::Error| e.to_string())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::Error => 2,
        }
    }

    fn from_pass(pass: bool) -> Self {
        if pass {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub payload: Option<Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub message: Option<String>,
    pub elapsed_ms: f64,
}

/// A report together with its text rendering.
#[derive(Debug, Clone)]
pub struct Execution {
    pub report: RunReport,
    pub text: String,
}

impl Execution {
    pub fn output(&self, json: bool) -> String {
        if json {
            serde_json::to_string_pretty(&self.report).expect("reports serialize")
        } else {
            self.text.clone()
        }
    }
}

struct Outcome {
    status: Status,
    payload: Value,
    text: String,
}

impl Outcome {
    fn pass(payload: Value, text: String) -> Self {
        Outcome { status: Status::Pass, payload, text }
    }
}

/// Worker pool sized by `COREQUOT_THREADS` when set.
pub fn thread_pool() -> Result<rayon::ThreadPool, String> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Ok(raw) = std::env::var(THREADS_ENV) {
        let n: usize = raw
            .trim()
            .parse()
            .ok()
            .filter(|&n| n > 0)
            .ok_or_else(|| format!("{THREADS_ENV} must be a positive integer, got {raw:?}"))?;
        builder = builder.num_threads(n);
    }
    builder.build().map_err(|e| e.to_string())
}

pub fn run_command(req: &CommandRequest) -> RunReport {
    execute(req).report
}

pub fn execute(req: &CommandRequest) -> Execution {
    let start = Instant::now();
    let result = dispatch(&req.command);
    let elapsed_ms = start.elapsed().as_secs_f64() * 1000.0;
    match result {
        Ok(o) => Execution {
            report: RunReport { status: o.status, payload: Some(o.payload), message: None, elapsed_ms },
            text: o.text,
        },
        Err(message) => Execution {
            text: format!("error: {message}"),
            report: RunReport { status: Status::Error, payload: None, message: Some(message), elapsed_ms },
        },
    }
}

fn dispatch(cmd: &Command) -> Result<Outcome, String> {
    match cmd {
        Command::Quotient { partition, padding } => quotient(partition, *padding),
        Command::Core { partition } => {
            let t = partition.two_quotient();
            let r = t.core.staircase_index().expect("staircase");
            Ok(Outcome::pass(
                json!({ "partition": partition, "core": t.core, "core_index": r }),
                format!("{} (K{r})", show(&t.core)),
            ))
        }
        Command::Sign { partition } => {
            let s = partition.two_sign().value();
            Ok(Outcome::pass(json!({ "partition": partition, "sign": s }), format!("{s:+}")))
        }
        Command::Schur { partition, reduced } => {
            let f = if *reduced { reduced_schur(partition) } else { schur(partition) };
            Ok(Outcome::pass(
                json!({ "partition": partition, "reduced": reduced, "polynomial": f, "pretty": f.pretty() }),
                f.pretty(),
            ))
        }
        Command::Character { shape, cycles } => {
            let value = mn_character(shape, &CycleType::new(cycles.clone())).map_err(|e| e.to_string())?;
            Ok(Outcome::pass(
                json!({ "shape": shape, "cycles": cycles, "value": value.to_string() }),
                value.to_string(),
            ))
        }
        Command::Lr { outer, inner, content } => {
            let c = lr_coefficient(outer, inner, content);
            Ok(Outcome::pass(
                json!({ "outer": outer, "inner": inner, "content": content, "coefficient": c }),
                c.to_string(),
            ))
        }
        Command::LrExpand { mu, nu } => {
            let terms = lr_expand_product(mu, nu);
            let mut text = String::new();
            let mut list = Vec::new();
            for (lambda, c) in terms.iter().rev() {
                let _ = writeln!(text, "{c}\t{}", show(lambda));
                list.push(json!({ "partition": lambda, "coefficient": c }));
            }
            Ok(Outcome::pass(json!({ "mu": mu, "nu": nu, "terms": list }), text.trim_end().to_string()))
        }
        Command::Weight { partition } => {
            let w = weight_of(partition);
            Ok(Outcome::pass(
                json!({ "partition": partition, "r": w.r, "n": w.n, "degree": w.degree() }),
                format!("{w} (r = {}, n = {}, degree {})", w.r, w.n, w.degree()),
            ))
        }
        Command::Basis { r, n } => {
            let basis = basis_for_weight(Weight::new(*r, *n));
            let text = basis.iter().map(show).collect::<Vec<_>>().join("\n");
            Ok(Outcome::pass(json!({ "r": r, "n": n, "basis": basis }), text))
        }
        Command::Verify(v) => verify(v),
        Command::Vertex(v) => vertex_cmd(v),
        Command::Batch(args) => batch(args),
    }
}

fn show(p: &Partition) -> String {
    if p.is_empty() {
        "∅".to_string()
    } else {
        p.to_string()
    }
}

fn quotient(partition: &Partition, padding: Option<usize>) -> Result<Outcome, String> {
    let n = padding.unwrap_or_else(|| partition.default_padding());
    let beta = partition.beta_set(n).map_err(|e| e.to_string())?;
    let t = beta.triplet();
    let r = t.core.staircase_index().expect("staircase");
    let beta_str = beta.entries().iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
    let text = format!(
        "beta-set:  {beta_str}\ncore:      {} (K{r})\nquotient0: {}\nquotient1: {}",
        show(&t.core),
        show(&t.quotient0),
        show(&t.quotient1)
    );
    Ok(Outcome::pass(
        json!({
            "partition": partition,
            "beta_set": beta.entries(),
            "core": t.core,
            "core_index": r,
            "quotient0": t.quotient0,
            "quotient1": t.quotient1,
        }),
        text,
    ))
}

fn theorem3_text(rep: &DecompositionReport) -> String {
    let mut text = format!("S^red[{}]:", show(&rep.subject));
    for (i, z) in rep.basis.iter().enumerate() {
        let solved = rep.solved.as_ref().map_or("-", |s| s[i].as_str());
        let _ = write!(text, "\n  {:>12}  formula {:>4}  solved {:>6}", show(z), rep.formula[i], solved);
    }
    let _ = write!(text, "\n{}", if rep.matches { "match" } else { "MISMATCH" });
    text
}

fn verify(cmd: &VerifyCommand) -> Result<Outcome, String> {
    match cmd {
        VerifyCommand::Theorem2 { r, n } => {
            let rep = theorems::verify_theorem2(Weight::new(*r, *n));
            let text = format!(
                "{}: {} basis vectors over {} monomials, rank {} (expected {}) {}",
                rep.weight,
                rep.basis.len(),
                rep.monomials,
                rep.rank,
                rep.expected,
                if rep.pass { "pass" } else { "FAIL" }
            );
            Ok(Outcome {
                status: Status::from_pass(rep.pass),
                payload: serde_json::to_value(&rep).expect("serializes"),
                text,
            })
        }
        VerifyCommand::Theorem3 { partition: Some(y), .. } => {
            let rep = theorems::verify_theorem3(y);
            Ok(Outcome {
                status: Status::from_pass(rep.matches),
                text: theorem3_text(&rep),
                payload: serde_json::to_value(&rep).expect("serializes"),
            })
        }
        VerifyCommand::Theorem3 { partition: None, max_size } => {
            let max = max_size.ok_or("give a partition or --max-size")?;
            let all = theorems::partitions_up_to(max);
            let pool = thread_pool()?;
            let reports: Vec<DecompositionReport> =
                pool.install(|| all.par_iter().map(theorems::verify_theorem3).collect());
            let failures: Vec<&DecompositionReport> = reports.iter().filter(|r| !r.matches).collect();
            let passed = reports.len() - failures.len();
            let mut text = format!("{passed}/{} partitions of size <= {max} match", reports.len());
            for f in &failures {
                let _ = write!(text, "\n{}", theorem3_text(f));
            }
            Ok(Outcome {
                status: Status::from_pass(failures.is_empty()),
                payload: json!({
                    "max_size": max,
                    "checked": reports.len(),
                    "passed": passed,
                    "failures": failures,
                }),
                text,
            })
        }
        VerifyCommand::Multiplicity { max_degree } => {
            let rep = theorems::multiplicity_report(*max_degree);
            let mut text = String::new();
            for row in &rep.rows {
                let _ = writeln!(
                    text,
                    "d = {:>3}: Σ p(n) = {:>8}  p_odd = {:>8}  {}",
                    row.degree,
                    row.total,
                    row.odd_partitions,
                    if row.pass { "ok" } else { "FAIL" }
                );
            }
            Ok(Outcome {
                status: Status::from_pass(rep.pass),
                payload: serde_json::to_value(&rep).expect("serializes"),
                text: text.trim_end().to_string(),
            })
        }
        VerifyCommand::Gauss { order } => {
            let rep = theorems::gauss_series_check(*order);
            let text = format!(
                "lhs: [{}]\nrhs: [{}]\n{}",
                rep.lhs.join(", "),
                rep.rhs.join(", "),
                if rep.pass { "equal" } else { "DIFFERENT" }
            );
            Ok(Outcome {
                status: Status::from_pass(rep.pass),
                payload: serde_json::to_value(&rep).expect("serializes"),
                text,
            })
        }
    }
}

fn parse_poly_arg(input: &str) -> Result<GradedPolynomial, String> {
    if input.trim_start().starts_with('[') {
        serde_json::from_str(input).map_err(|e| e.to_string())
    } else {
        input.parse().map_err(|e: crate::Error| e.to_string())
    }
}

/// Asserted brackets: [a_i, a_j] = i δ_{i+j,0} and [a_j, X_k] = 2 X_{j+k}.
pub fn expected_bracket(op1: Operator, op2: Operator) -> Option<Vec<(Operator, BigRational)>> {
    let int = |n: i64| BigRational::from_integer(n.into());
    match (op1, op2) {
        (Operator::Heisenberg(i), Operator::Heisenberg(j)) => Some(if i + j == 0 {
            vec![(Operator::Identity, int(i))]
        } else {
            vec![]
        }),
        (Operator::Heisenberg(j), Operator::Vertex(k)) => Some(vec![(Operator::Vertex(j + k), int(2))]),
        _ => None,
    }
}

/// Bracket grid: odd |i|, |j| ≤ 7 for the Heisenberg pairs and against X_k
/// with |k| ≤ 4; X_j against X_k with |j|, |k| ≤ 2 is fitted but not asserted.
pub fn commutator_grid() -> Vec<(Operator, Operator)> {
    let odd: Vec<i64> = (-7..=7).filter(|j: &i64| j % 2 != 0).collect();
    let mut grid = Vec::new();
    for &i in &odd {
        for &j in &odd {
            grid.push((Operator::Heisenberg(i), Operator::Heisenberg(j)));
        }
    }
    for &j in &odd {
        for k in -4..=4 {
            grid.push((Operator::Heisenberg(j), Operator::Vertex(k)));
        }
    }
    for j in -2..=2 {
        for k in -2..=2 {
            grid.push((Operator::Vertex(j), Operator::Vertex(k)));
        }
    }
    grid
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct CheckedFit {
    #[serde(flatten)]
    fit: CommutatorFit,
    asserted: bool,
    /// First monomial on which an asserted relation fails.
    relation_witness: Option<String>,
    pass: bool,
}

fn vertex_cmd(cmd: &VertexCommand) -> Result<Outcome, String> {
    match cmd {
        VertexCommand::Apply { k, input, poly } => {
            let f = if *poly {
                OddPolynomial::new(parse_poly_arg(input)?).map_err(|e| e.to_string())?
            } else {
                let y = parse_partition(input)?;
                OddPolynomial::new(reduced_schur(&y)).expect("reduced Schur functions are odd")
            };
            let g = vertex::vertex_apply(*k, &f);
            Ok(Outcome::pass(
                json!({ "k": k, "input": f.as_poly(), "output": g.as_poly(), "pretty": g.to_string() }),
                g.to_string(),
            ))
        }
        VertexCommand::Commutators { degree } => {
            let pool = thread_pool()?;
            let grid = commutator_grid();
            let fits: Vec<Result<CheckedFit, String>> = pool.install(|| {
                grid.par_iter()
                    .map(|&(a, b)| {
                        let fit = commutator_fit(a, b, *degree).map_err(|e| e.to_string())?;
                        let expected = expected_bracket(a, b);
                        let (pass, witness) = match &expected {
                            Some(want) => {
                                let w = vertex::check_relation(a, b, want, *degree).map_err(|e| e.to_string())?;
                                (w.is_none(), w.map(|m| m.to_string()))
                            }
                            None => (fit.is_consistent(), None),
                        };
                        Ok(CheckedFit { asserted: expected.is_some(), pass, relation_witness: witness, fit })
                    })
                    .collect()
            });
            let fits: Vec<CheckedFit> = fits.into_iter().collect::<Result<_, _>>()?;
            let pass = fits.iter().all(|f| f.pass);
            let mut text = String::new();
            for f in &fits {
                let mark = match (f.pass, f.asserted) {
                    (false, _) => "FAIL",
                    (true, true) => "ok",
                    (true, false) => "fit",
                };
                let _ = writeln!(text, "{:<4} {}", mark, f.fit);
            }
            let _ = write!(
                text,
                "{} brackets on monomials of degree <= {degree}: {}",
                fits.len(),
                if pass { "pass" } else { "FAIL" }
            );
            Ok(Outcome {
                status: Status::from_pass(pass),
                payload: json!({ "degree": degree, "fits": fits, "pass": pass }),
                text,
            })
        }
    }
}

/// Non-empty, non-comment lines with their 1-based line numbers.
pub fn read_batch(path: &std::path::Path) -> Result<Vec<(usize, Partition)>, String> {
    let content = std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let mut out = Vec::new();
    for (i, line) in content.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let p = line.parse::<Partition>().map_err(|e| format!("line {}: {e}", i + 1))?;
        out.push((i + 1, p));
    }
    Ok(out)
}

fn batch(args: &BatchArgs) -> Result<Outcome, String> {
    let lines = read_batch(&args.path)?;
    let pool = thread_pool()?;
    let check = args.check;
    let results: Vec<(usize, Partition, bool, Value)> = pool.install(|| {
        lines
            .par_iter()
            .map(|(line, y)| {
                let (pass, detail) = match check {
                    BatchCheck::Theorem3 => {
                        let rep = theorems::verify_theorem3(y);
                        (rep.matches, serde_json::to_value(&rep).expect("serializes"))
                    }
                    BatchCheck::Theorem2 => {
                        let rep = theorems::verify_theorem2(weight_of(y));
                        (rep.pass, serde_json::to_value(&rep).expect("serializes"))
                    }
                    BatchCheck::Roundtrip => {
                        let t = y.two_quotient();
                        let back = t.to_partition().ok();
                        (back.as_ref() == Some(y), json!({ "triplet": t }))
                    }
                };
                (*line, y.clone(), pass, detail)
            })
            .collect()
    });
    let passed = results.iter().filter(|r| r.2).count();
    let mut text = String::new();
    for (line, y, pass, _) in &results {
        let _ = writeln!(text, "{line:>5}  {:<20} {}", show(y), if *pass { "pass" } else { "FAIL" });
    }
    let _ = write!(text, "{passed}/{} passed", results.len());
    let list: Vec<Value> = results
        .iter()
        .map(|(line, y, pass, detail)| json!({ "line": line, "partition": y, "pass": pass, "detail": detail }))
        .collect();
    Ok(Outcome {
        status: Status::from_pass(passed == results.len()),
        payload: json!({
            "file": args.path.display().to_string(),
            "check": check,
            "checked": results.len(),
            "passed": passed,
            "results": list,
        }),
        text,
    })
}
