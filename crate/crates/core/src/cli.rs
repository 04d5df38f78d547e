//! Command-line front end.
//!
//! Exit codes: 0 success or EQUAL, 1 DIFFER or a failed check, 2 usage and
//! parse errors, 3 refused for exceeding the tuple budget or a search limit.
//! Results go to standard output (or `--output`), diagnostics to standard
//! error.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::matroid::{
    are_isomorphic_bruteforce, check_independence_axioms, check_rank_axioms, downward_closure,
    Matroid, MatroidError, MatroidKind, MatroidSpec, SubsetMask, MAX_ISO_GROUND_SET,
};
use crate::poly::Polynomial;
use crate::tutte::{
    compare_polynomials, m1, m2, specialize_down, tutte_closed_uniform, tutte_delete_contract,
    tutte_genus, tutte_sum, EngineConfig, TutteError, Verdict, DEFAULT_BUDGET_LOG2,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DIFFER: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "tutte-genus",
    version,
    about = "Exact genus-g Tutte polynomials of matroids"
)]
pub struct RunConfig {
    /// Output format.
    #[arg(long, value_enum, default_value = "text", global = true)]
    pub format: Format,
    /// Write results here instead of standard output.
    #[arg(short = 'o', long, global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Sum,
    Dc,
    Closed,
}

/// Matroid inputs. Files come first, then builtins, in the order given.
#[derive(Args, Debug)]
pub struct Source {
    /// Matroid JSON file.
    #[arg(short = 'm', long = "matroid")]
    pub paths: Vec<PathBuf>,
    /// Built-in matroid: U:r,n  R:r,n  Q:r,n  S:n  Sprime:n.
    #[arg(long = "builtin")]
    pub builtins: Vec<String>,
}

#[derive(Args, Debug)]
pub struct EngineArgs {
    /// Worker threads (default: all available cores).
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub threads: Option<u32>,
    /// Refuse runs enumerating more than 2^N tuples.
    #[arg(long = "budget-log2", default_value_t = DEFAULT_BUDGET_LOG2)]
    pub budget_log2: u32,
}

impl EngineArgs {
    fn config(&self) -> EngineConfig {
        let mut cfg = match self.threads {
            Some(t) => EngineConfig::with_threads(t as usize),
            None => EngineConfig::default(),
        };
        cfg.budget_log2 = self.budget_log2;
        cfg
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Rank of a subset.
    Rank {
        #[command(flatten)]
        source: Source,
        /// Comma-separated 1-based elements; empty for the empty set.
        #[arg(short = 's', long = "set", allow_hyphen_values = true)]
        set: String,
    },
    /// Classical Tutte polynomial.
    Tutte {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value = "sum")]
        method: Method,
    },
    /// Genus-g Tutte polynomial.
    Genus {
        #[command(flatten)]
        source: Source,
        #[arg(short = 'g', long, value_parser = clap::value_parser!(u32).range(1..))]
        genus: u32,
        #[command(flatten)]
        engine: EngineArgs,
    },
    /// Compare the genus-g invariants of two matroids.
    Compare {
        #[command(flatten)]
        source: Source,
        #[arg(short = 'g', long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
        genus: u32,
        #[command(flatten)]
        engine: EngineArgs,
    },
    /// Check the matroid axioms.
    Verify {
        #[command(flatten)]
        source: Source,
    },
    /// Brute-force isomorphism test.
    Iso {
        #[command(flatten)]
        source: Source,
    },
    /// Check that specializing T^(g) recovers 2^n T^(g-1).
    SpecializeCheck {
        #[command(flatten)]
        source: Source,
        #[arg(short = 'g', long, default_value_t = 2, value_parser = clap::value_parser!(u32).range(2..))]
        genus: u32,
        #[command(flatten)]
        engine: EngineArgs,
    },
    /// Print m1 and m2 for the S/S' family.
    Mbounds { n: usize },
}

#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<MatroidError> for Failure {
    fn from(e: MatroidError) -> Self {
        Failure::usage(e.to_string())
    }
}

impl From<TutteError> for Failure {
    fn from(e: TutteError) -> Self {
        let code = match e {
            TutteError::BudgetExceeded { .. } | TutteError::Capacity { .. } => EXIT_BUDGET,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

/// What a command produced: text for standard output and an exit code.
struct Outcome {
    body: String,
    code: i32,
}

impl Outcome {
    fn ok(body: String) -> Self {
        Outcome {
            body,
            code: EXIT_OK,
        }
    }
}

/// Parses `args` (including the program name), runs the command, and
/// returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{e}");
                    EXIT_USAGE
                }
            };
        }
    };
    match execute(&config) {
        Ok(outcome) => {
            let mut body = outcome.body;
            body.push('\n');
            let written = match &config.output {
                Some(path) => std::fs::write(path, &body)
                    .map_err(|e| format!("cannot write {}: {e}", path.display())),
                None => out.write_all(body.as_bytes()).map_err(|e| e.to_string()),
            };
            if let Err(e) = written {
                let _ = writeln!(err, "error: {e}");
                return EXIT_USAGE;
            }
            outcome.code
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn execute(config: &RunConfig) -> Result<Outcome, Failure> {
    let json = config.format == Format::Json;
    match &config.command {
        Command::Rank { source, set } => {
            let m = load_one(source)?;
            let mask = parse_set(set, m.ground_set_size())?;
            let r = m.rank(mask)?;
            Ok(Outcome::ok(if json {
                json!({ "rank": r }).to_string()
            } else {
                r.to_string()
            }))
        }
        Command::Tutte { source, method } => {
            let m = load_one(source)?;
            let p = match method {
                Method::Sum => tutte_sum(&m)?,
                Method::Dc => tutte_delete_contract(&m)?,
                Method::Closed => match m.kind() {
                    MatroidKind::Uniform { rank } => {
                        tutte_closed_uniform(*rank, m.ground_set_size())?
                    }
                    _ => {
                        return Err(Failure::usage(
                            "method 'closed' applies only to uniform matroids",
                        ))
                    }
                },
            };
            Ok(Outcome::ok(render_poly(&p, json)))
        }
        Command::Genus {
            source,
            genus,
            engine,
        } => {
            let m = load_one(source)?;
            let p = tutte_genus(&m, *genus as usize, &engine.config())?;
            Ok(Outcome::ok(render_poly(&p, json)))
        }
        Command::Compare {
            source,
            genus,
            engine,
        } => {
            let (a, b) = load_two(source)?;
            let cfg = engine.config();
            let verdict = compare_matroids(&a, &b, *genus as usize, &cfg)?;
            Ok(render_verdict(&verdict, json))
        }
        Command::Verify { source } => verify(source, json),
        Command::Iso { source } => {
            let (a, b) = load_two(source)?;
            if a.ground_set_size() > MAX_ISO_GROUND_SET {
                return Err(Failure {
                    code: EXIT_BUDGET,
                    message: format!(
                        "isomorphism search over {}! permutations refused (limit n <= {MAX_ISO_GROUND_SET})",
                        a.ground_set_size()
                    ),
                });
            }
            let outcome = are_isomorphic_bruteforce(&a, &b)?;
            let body = match (&outcome.witness, json) {
                (Some(w), false) => format!("ISO witness={w}"),
                (None, false) => {
                    format!("NONISO after {} permutations", outcome.permutations_checked)
                }
                (w, true) => json!({
                    "isomorphic": w.is_some(),
                    "witness": w.as_ref().map(|w| w.images().to_vec()),
                    "permutations_checked": outcome.permutations_checked,
                })
                .to_string(),
            };
            Ok(Outcome {
                body,
                code: if outcome.is_isomorphic() {
                    EXIT_OK
                } else {
                    EXIT_DIFFER
                },
            })
        }
        Command::SpecializeCheck {
            source,
            genus,
            engine,
        } => {
            let m = load_one(source)?;
            let cfg = engine.config();
            let g = *genus as usize;
            let upper = tutte_genus(&m, g, &cfg)?;
            let lower = tutte_genus(&m, g - 1, &cfg)?;
            let report = specialize_check(&upper, &lower, m.ground_set_size());
            let code = if report.is_ok() { EXIT_OK } else { EXIT_DIFFER };
            let body = match (report, json) {
                (Ok(()), false) => "PASS".to_string(),
                (Err(e), false) => format!("FAIL: {e}"),
                (r, true) => json!({
                    "result": if r.is_ok() { "PASS" } else { "FAIL" },
                    "detail": r.err(),
                })
                .to_string(),
            };
            Ok(Outcome { body, code })
        }
        Command::Mbounds { n } => {
            let (a, b) = (m1(*n)?, m2(*n)?);
            Ok(Outcome::ok(if json {
                json!({ "m1": a, "m2": b }).to_string()
            } else {
                format!("m1={a} m2={b}")
            }))
        }
    }
}

fn compare_matroids(
    a: &Matroid,
    b: &Matroid,
    genus: usize,
    cfg: &EngineConfig,
) -> Result<Verdict, Failure> {
    if a.ground_set_size() != b.ground_set_size() {
        return Err(MatroidError::SizeMismatch {
            left: a.ground_set_size(),
            right: b.ground_set_size(),
        }
        .into());
    }
    let pa = tutte_genus(a, genus, cfg)?;
    let pb = tutte_genus(b, genus, cfg)?;
    Ok(compare_polynomials(&pa, &pb))
}

/// Checks `specialize_down(upper) == lower`. The error names the first bad
/// coefficient.
pub fn specialize_check(upper: &Polynomial, lower: &Polynomial, n: usize) -> Result<(), String> {
    let reduced = specialize_down(upper, n).map_err(|e| e.to_string())?;
    match compare_polynomials(&reduced, lower) {
        Verdict::Equal => Ok(()),
        Verdict::Differ(w) => Err(format!(
            "coefficient of {} is {} after specialization, expected {}",
            if w.monomial.is_empty() {
                "1"
            } else {
                &w.monomial
            },
            w.left,
            w.right
        )),
    }
}

fn render_poly(p: &Polynomial, json: bool) -> String {
    if json {
        p.to_json()
    } else {
        p.canonical_text()
    }
}

fn render_verdict(v: &Verdict, json: bool) -> Outcome {
    match v {
        Verdict::Equal => Outcome::ok(if json {
            json!({ "verdict": "EQUAL" }).to_string()
        } else {
            "EQUAL".to_string()
        }),
        Verdict::Differ(w) => Outcome {
            body: if json {
                json!({
                    "verdict": "DIFFER",
                    "monomial": w.monomial,
                    "exps": w.exponents,
                    "left": w.left.to_string(),
                    "right": w.right.to_string(),
                })
                .to_string()
            } else {
                format!(
                    "DIFFER monomial={} left={} right={}",
                    w.monomial, w.left, w.right
                )
            },
            code: EXIT_DIFFER,
        },
    }
}

fn verify(source: &Source, json: bool) -> Result<Outcome, Failure> {
    let specs = load_specs(source)?;
    let [spec] = specs.as_slice() else {
        return Err(Failure::usage(format!(
            "expected 1 matroid, got {}",
            specs.len()
        )));
    };
    let report: Result<(), String> = match spec.build() {
        Ok(m) => check_matroid(&m),
        Err(
            e @ (MatroidError::EmptyBasisFamily
            | MatroidError::UnequalBasisSizes { .. }
            | MatroidError::ExchangeViolation { .. }),
        ) => Err(e.to_string()),
        Err(e) => return Err(e.into()),
    };
    let code = if report.is_ok() { EXIT_OK } else { EXIT_DIFFER };
    let body = match (report, json) {
        (Ok(()), false) => "PASS".to_string(),
        (Err(e), false) => format!("FAIL: {e}"),
        (r, true) => json!({
            "result": if r.is_ok() { "PASS" } else { "FAIL" },
            "detail": r.err(),
        })
        .to_string(),
    };
    Ok(Outcome { body, code })
}

/// Rank axioms on the full table, then the independence axioms on the
/// downward closure of the bases when the ground set is small enough.
fn check_matroid(m: &Matroid) -> Result<(), String> {
    let table = m.rank_table().map_err(|e| e.to_string())?;
    check_rank_axioms(&table).map_err(|v| format!("rank axioms violated: {v:?}"))?;
    let n = m.ground_set_size();
    if n <= 16 {
        let family = downward_closure(n, &table.bases());
        let report = check_independence_axioms(&family, n).map_err(|e| e.to_string())?;
        if !report.is_pass() {
            return Err(report.to_string());
        }
    }
    Ok(())
}

fn load_specs(source: &Source) -> Result<Vec<MatroidSpec>, Failure> {
    let mut specs = Vec::new();
    for path in &source.paths {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))?;
        specs.push(MatroidSpec::from_json(&text)?);
    }
    for name in &source.builtins {
        specs.push(MatroidSpec::from_builtin(name)?);
    }
    Ok(specs)
}

fn load_all(source: &Source) -> Result<Vec<Matroid>, Failure> {
    load_specs(source)?
        .iter()
        .map(|s| s.build().map_err(Failure::from))
        .collect()
}

fn load_one(source: &Source) -> Result<Matroid, Failure> {
    let mut all = load_all(source)?;
    if all.len() != 1 {
        return Err(Failure::usage(format!(
            "expected 1 matroid, got {}",
            all.len()
        )));
    }
    Ok(all.remove(0))
}

fn load_two(source: &Source) -> Result<(Matroid, Matroid), Failure> {
    let mut all = load_all(source)?;
    if all.len() != 2 {
        return Err(Failure::usage(format!(
            "expected 2 matroids, got {}",
            all.len()
        )));
    }
    let b = all.pop().expect("two matroids");
    let a = all.pop().expect("two matroids");
    Ok((a, b))
}

/// `"1,2,3"` → mask; `""` → empty set.
fn parse_set(text: &str, n: usize) -> Result<SubsetMask, Failure> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(SubsetMask::EMPTY);
    }
    let elements = text
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Failure::usage(format!("invalid element {t:?} in set")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(SubsetMask::from_elements(elements, n)?)
}
