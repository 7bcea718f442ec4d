//! `symplex`: batch front end over the symplex-core library.
//!
//! Every subcommand reads one JSON document (from a positional file
//! argument or stdin) and writes one JSON document (to `--out` or
//! stdout), except `verify` and `random-word`, which take their input
//! from flags. Output is canonical: one line, keys sorted, newline
//! terminated, byte-identical across runs and platforms.
//!
//! Exit codes: 0 when the command succeeds and any verdict it computes
//! is positive; 1 when the math says no (a matrix fails the symplectic
//! test, a factorization leaves a residual, a verification suite
//! records failures, a decomposition is refused); 2 for usage errors
//! and malformed input. Diagnostics go to stderr; stdout carries only
//! data. Set SYMPLEX_LOG=info or =debug for progress notes.

use clap::{Parser, Subcommand};
use serde_json::{json, Value};
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;
use symplex_core::factor::{factor_over_euclidean, factor_over_field};
use symplex_core::geometry::polarized::validate_polarized;
use symplex_core::geometry::split::pyramid_split;
use symplex_core::geometry::{monoid_ops, PolarizedTriple};
use symplex_core::ring::{BaseRing, RingDesc};
use symplex_core::symplectic::{delta, delta_conjugate, random_word};
use symplex_core::{jsonio, lab, Error};

#[derive(Parser)]
#[command(name = "symplex", version, about = "Exact symplectic matrix calculus over monoid algebras")]
struct Cli {
    /// Write the output document here instead of stdout
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Multiply matrices left to right; reads {"matrices": [...]}
    Mult {
        /// Input file (defaults to stdin)
        input: Option<PathBuf>,
    },
    /// Test a matrix against the defining identity of the symplectic
    /// group; prints {"symplectic": true|false}
    SpCheck {
        input: Option<PathBuf>,
    },
    /// Factor a symplectic matrix into elementary generators; exit 0
    /// only if the residual is the identity
    Factor {
        input: Option<PathBuf>,
    },
    /// Conjugate a matrix by a scaling matrix built from an index set;
    /// reads {"matrix", "set", "t", "direction"}
    ConjDelta {
        input: Option<PathBuf>,
    },
    /// Run identity-verification suites and print the report
    Verify {
        /// Run a single suite instead of all of them
        #[arg(long, value_name = "ID")]
        lemma: Option<String>,
        /// Seed for the randomized instances
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Describe a monoid: rank, positivity, generators, cone data
    MonoidInfo {
        input: Option<PathBuf>,
    },
    /// Validate a polarized triple and print the axiom report
    PolarizedCheck {
        input: Option<PathBuf>,
        /// Override the generation bound stored in the document
        #[arg(long, value_name = "N")]
        bound: Option<u32>,
    },
    /// Split a pointed cone into a pyramid and a remainder glued along
    /// a shared face
    PyramidSplit {
        input: Option<PathBuf>,
    },
    /// Generate a reproducible random generator word
    RandomWord {
        /// Half-size of the matrices the word acts on
        #[arg(long, default_value_t = 2)]
        n: usize,
        /// Number of tokens
        #[arg(long, default_value_t = 6)]
        length: usize,
        /// Scalar ring: Z, Q, or Fp:p
        #[arg(long, default_value = "Z")]
        ring: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::new().filter_or("SYMPLEX_LOG", "error"))
        .init();
    let cli = Cli::parse();
    match run(&cli.command) {
        Ok((doc, clean)) => {
            let text = jsonio::to_canonical_string(&doc);
            if let Some(path) = &cli.out {
                if let Err(e) = std::fs::write(path, &text) {
                    eprintln!("symplex: cannot write {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            } else {
                print!("{text}");
            }
            if clean {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("symplex: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

/// Usage and malformed-input errors exit 2; mathematical refusals on
/// well-formed input exit 1.
fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse(_)
        | Error::NonPrimeModulus(_)
        | Error::UnknownLemmaId(_)
        | Error::BadIndices(_)
        | Error::RankTooLarge(_)
        | Error::IncompleteAssignment(_) => 2,
        _ => 1,
    }
}

/// Run a subcommand; returns the output document and whether the
/// verdict (if the command computes one) was positive.
fn run(cmd: &Command) -> Result<(Value, bool), Error> {
    match cmd {
        Command::Mult { input } => {
            let doc = read_doc(input)?;
            let arr = doc
                .get("matrices")
                .and_then(Value::as_array)
                .ok_or_else(|| Error::Parse("expected {\"matrices\": [...]}".into()))?;
            let mut mats = arr.iter().map(jsonio::matrix_from_value);
            let mut acc = mats
                .next()
                .ok_or_else(|| Error::Parse("matrix list is empty".into()))??;
            for m in mats {
                acc = acc.mul(&m?)?;
            }
            Ok((jsonio::matrix_to_value(&acc), true))
        }
        Command::SpCheck { input } => {
            let m = jsonio::matrix_from_value(&read_doc(input)?)?;
            let ok = m.is_symplectic();
            Ok((json!({ "symplectic": ok }), ok))
        }
        Command::Factor { input } => {
            let m = jsonio::matrix_from_value(&read_doc(input)?)?;
            let res = if m.ring().base.is_field() && m.ring().monoid.is_constants() {
                log::info!("factoring by unit pivots over a field");
                factor_over_field(&m)?
            } else {
                log::info!("factoring by euclidean descent");
                factor_over_euclidean(&m)?
            };
            let clean = res.is_complete();
            log::info!(
                "{} tokens, {} pivot steps, residual {}",
                res.stats.token_count,
                res.stats.pivot_steps,
                if clean { "trivial" } else { "NONTRIVIAL" }
            );
            Ok((jsonio::factorization_to_value(&res), clean))
        }
        Command::ConjDelta { input } => {
            let doc = read_doc(input)?;
            let obj = doc
                .as_object()
                .ok_or_else(|| Error::Parse("expected an object".into()))?;
            let m = jsonio::matrix_from_value(field(obj, "matrix")?)?;
            let set = jsonio::index_set_from_value(m.n(), field(obj, "set")?)?;
            let t = jsonio::element_from_value(field(obj, "t")?)?;
            let direction = field(obj, "direction")?
                .as_i64()
                .ok_or_else(|| Error::Parse("direction must be 1 or -1".into()))?;
            let pair = delta(&set, &t)?;
            let conj = delta_conjugate(&pair, &m, direction as i32)?;
            Ok((jsonio::matrix_to_value(&conj), true))
        }
        Command::Verify { lemma, seed } => {
            let reports = match lemma {
                Some(id) => lab::run_suite(&[id.as_str()], *seed)?,
                None => lab::run_all(*seed)?,
            };
            let clean = reports.iter().all(|r| r.failures.is_empty());
            for r in &reports {
                log::info!(
                    "{}: {} instances, {} failures",
                    r.lemma_id,
                    r.instances_run,
                    r.failures.len()
                );
            }
            Ok((jsonio::report_set_to_value(&reports, *seed), clean))
        }
        Command::MonoidInfo { input } => {
            let m = jsonio::monoid_from_value(&read_doc(input)?)?;
            let info = monoid_ops::monoid_info(&m);
            Ok((jsonio::monoid_info_to_value(&info), true))
        }
        Command::PolarizedCheck { input, bound } => {
            let mut triple = jsonio::polarized_from_value(&read_doc(input)?)?;
            if let Some(b) = bound {
                triple = PolarizedTriple::new(
                    triple.monoid.clone(),
                    triple.apex_ray.clone(),
                    triple.base_polytope.clone(),
                    triple.t_exponent.clone(),
                    *b,
                )?;
            }
            let report = validate_polarized(&triple);
            Ok((jsonio::polarized_report_to_value(&report), report.all_passed))
        }
        Command::PyramidSplit { input } => {
            let cone = jsonio::cone_from_value(&read_doc(input)?)?;
            let split = pyramid_split(&cone)?;
            Ok((jsonio::pyramid_split_to_value(&split), true))
        }
        Command::RandomWord {
            n,
            length,
            ring,
            seed,
        } => {
            let ring = RingDesc::scalars(BaseRing::parse(ring)?);
            let w = random_word(*n, *length, &ring, *seed);
            Ok((jsonio::word_to_value(&w, &ring), true))
        }
    }
}

fn field<'a>(obj: &'a serde_json::Map<String, Value>, key: &str) -> Result<&'a Value, Error> {
    obj.get(key)
        .ok_or_else(|| Error::Parse(format!("missing key {key}")))
}

fn read_doc(path: &Option<PathBuf>) -> Result<Value, Error> {
    let text = match path {
        Some(p) => std::fs::read_to_string(p)
            .map_err(|e| Error::Parse(format!("cannot read {}: {e}", p.display())))?,
        None => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| Error::Parse(format!("cannot read stdin: {e}")))?;
            buf
        }
    };
    serde_json::from_str(&text).map_err(|e| Error::Parse(format!("invalid json: {e}")))
}
