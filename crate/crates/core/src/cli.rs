//! Command-line front end. `run` does all the work and returns the exit code
//! with the text destined for stdout and stderr, so the binary is a thin
//! wrapper and tests can drive commands in-process.
//!
//! Exit codes: 0 for any verdict (including "no"), 1 when `verify` reports
//! a failure, 2 for usage errors and invalid input, 3 for unsupported
//! requests.

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::corpus::{default_corpus, Built};
use crate::dsl;
use crate::error::Error;
use crate::ideals::{core, find_c_witness, find_weak_c_witness, subideal_chain, verify_c, verify_weak_c};
use crate::lattice::Lattice;
use crate::liecore::SeriesKind;
use crate::linspace::{Budget, Subspace};
use crate::structure::{self, Tri};
use crate::verify::run_suite;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_UNSUPPORTED: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "weakc", version, about = "Exact Lie algebra computations: ideals, subideals, c-ideals and weak c-ideals")]
pub struct Cli {
    /// Cap on the number of subspaces an exhaustive search may enumerate.
    #[arg(long, global = true, value_name = "N")]
    pub budget: Option<u64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide a predicate for the algebra or one of its named subspaces.
    Check {
        file: PathBuf,
        #[arg(long, value_enum)]
        predicate: Predicate,
        #[arg(long, value_name = "NAME")]
        subspace: Option<String>,
        /// File of `subspace C = span(...)` statements; switches the
        /// c-ideal searches to certificate verification.
        #[arg(long, value_name = "FILE")]
        witness: Option<PathBuf>,
    },
    /// Structure report computed from the subalgebra lattice.
    Lattice { file: PathBuf },
    /// Run the verification suite.
    Verify {
        #[arg(long, value_enum, default_value_t = PresetSet::Default)]
        preset_set: PresetSet,
        #[arg(long)]
        json: bool,
    },
    /// Derived or lower central series.
    Series {
        file: PathBuf,
        #[arg(long, value_enum)]
        kind: Kind,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Predicate {
    Ideal,
    Subideal,
    CIdeal,
    WeakCIdeal,
    Core,
    Nilpotent,
    Solvable,
    Supersolvable,
    Simple,
}

impl Predicate {
    fn name(self) -> &'static str {
        match self {
            Predicate::Ideal => "ideal",
            Predicate::Subideal => "subideal",
            Predicate::CIdeal => "c-ideal",
            Predicate::WeakCIdeal => "weak-c-ideal",
            Predicate::Core => "core",
            Predicate::Nilpotent => "nilpotent",
            Predicate::Solvable => "solvable",
            Predicate::Supersolvable => "supersolvable",
            Predicate::Simple => "simple",
        }
    }

    fn needs_subspace(self) -> bool {
        matches!(
            self,
            Predicate::Ideal | Predicate::Subideal | Predicate::CIdeal | Predicate::WeakCIdeal | Predicate::Core
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PresetSet {
    Default,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Derived,
    LowerCentral,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Output {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn usage(msg: impl Into<String>) -> Self {
        Output {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: format!("error: {}\n", msg.into()),
        }
    }

    fn json(code: i32, v: &Value) -> Self {
        Output {
            code,
            stdout: format!("{}\n", serde_json::to_string_pretty(v).expect("serializable")),
            stderr: String::new(),
        }
    }
}

/// Parse `args` (including the program name) and run the command.
pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(&cli),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                Output {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Output::ok(text)
            }
        }
    }
}

pub fn execute(cli: &Cli) -> Output {
    let budget = cli.budget.map(Budget::new).unwrap_or_default();
    match &cli.command {
        Command::Check {
            file,
            predicate,
            subspace,
            witness,
        } => match load(file) {
            Ok(built) => check(&built, *predicate, subspace.as_deref(), witness.as_deref(), &budget),
            Err(o) => o,
        },
        Command::Lattice { file } => match load(file) {
            Ok(built) => lattice(&built, &budget),
            Err(o) => o,
        },
        Command::Verify { preset_set, json } => {
            let corpus = match preset_set {
                PresetSet::Default => default_corpus(),
            };
            let report = run_suite(&corpus, budget);
            let code = if report.has_failures() {
                EXIT_VERIFY_FAILED
            } else {
                EXIT_OK
            };
            let stdout = if *json {
                format!("{}\n", report.to_json())
            } else {
                report.to_text()
            };
            Output {
                code,
                stdout,
                stderr: String::new(),
            }
        }
        Command::Series { file, kind } => match load(file) {
            Ok(built) => series(&built, *kind),
            Err(o) => o,
        },
    }
}

/// Derived or lower central series with term dimensions.
pub fn series(built: &Built, kind: Kind) -> Output {
    let kind = match kind {
        Kind::Derived => SeriesKind::Derived,
        Kind::LowerCentral => SeriesKind::LowerCentral,
    };
    let report = built.algebra.series(kind);
    let reaches_zero = report.reaches_zero();
    let mut v = serde_json::to_value(&report).expect("serializable");
    v["reaches_zero"] = json!(reaches_zero);
    v["dims"] = json!(report.terms.iter().map(Subspace::dim).collect::<Vec<_>>());
    Output::json(EXIT_OK, &v)
}

fn read(path: &Path) -> Result<String, Output> {
    fs::read_to_string(path).map_err(|e| Output::usage(format!("cannot read {}: {e}", path.display())))
}

fn load(path: &Path) -> Result<Built, Output> {
    let text = read(path)?;
    dsl::parse(&text).map_err(|e| Output::usage(format!("{}: {e}", path.display())))
}

fn unsupported(predicate: &str, subspace: Option<&str>, reason: String) -> Output {
    Output::json(
        EXIT_UNSUPPORTED,
        &json!({
            "predicate": predicate,
            "subspace": subspace,
            "verdict": "unsupported",
            "reason": reason,
        }),
    )
}

fn verdict(predicate: &str, subspace: Option<&str>, yes: bool, extra: Value) -> Output {
    let mut v = json!({
        "predicate": predicate,
        "subspace": subspace,
        "verdict": if yes { "yes" } else { "no" },
    });
    if let (Value::Object(dst), Value::Object(src)) = (&mut v, extra) {
        dst.extend(src);
    }
    Output::json(EXIT_OK, &v)
}

fn tri_verdict(predicate: &str, t: Tri) -> Output {
    match t.as_bool() {
        Some(b) => verdict(predicate, None, b, json!({})),
        None => unsupported(predicate, None, format!("{predicate} is not decided over this field")),
    }
}

pub fn check(
    built: &Built,
    predicate: Predicate,
    subspace: Option<&str>,
    witness: Option<&Path>,
    budget: &Budget,
) -> Output {
    let alg = &built.algebra;
    let name = predicate.name();
    if witness.is_some() && !matches!(predicate, Predicate::CIdeal | Predicate::WeakCIdeal) {
        return Output::usage("--witness only applies to c-ideal and weak-c-ideal");
    }
    if !predicate.needs_subspace() {
        if subspace.is_some() {
            return Output::usage(format!("--subspace does not apply to {name}"));
        }
        return match predicate {
            Predicate::Nilpotent => verdict(name, None, alg.is_nilpotent(), json!({})),
            Predicate::Solvable => verdict(name, None, alg.is_solvable(), json!({})),
            Predicate::Supersolvable => tri_verdict(name, structure::is_supersolvable(alg, budget)),
            Predicate::Simple => tri_verdict(name, structure::is_simple(alg, budget)),
            _ => unreachable!("subspace predicates handled below"),
        };
    }
    let Some(sname) = subspace else {
        return Output::usage(format!("{name} needs --subspace NAME"));
    };
    let Some(b) = built.subspaces.get(sname) else {
        let known: Vec<&str> = built.subspaces.keys().map(String::as_str).collect();
        return Output::usage(format!("no subspace named `{sname}` (known: {})", known.join(", ")));
    };
    let not_sub = || verdict(name, Some(sname), false, json!({ "reason": "B is not a subalgebra" }));
    match predicate {
        Predicate::Ideal => verdict(name, Some(sname), alg.is_ideal(b), json!({})),
        Predicate::Subideal => match subideal_chain(alg, b) {
            Ok(Some(chain)) => verdict(name, Some(sname), true, json!({ "chain": chain })),
            Ok(None) => verdict(name, Some(sname), false, json!({})),
            Err(Error::NotSubalgebra(_)) => not_sub(),
            Err(e) => usage_or_unsupported(name, sname, e),
        },
        Predicate::Core => match core(alg, b) {
            Ok(c) => Output::json(
                EXIT_OK,
                &json!({ "predicate": name, "subspace": sname, "core": c, "dim": c.dim() }),
            ),
            Err(Error::NotSubalgebra(_)) => Output::usage(format!("`{sname}` is not a subalgebra")),
            Err(e) => usage_or_unsupported(name, sname, e),
        },
        Predicate::CIdeal | Predicate::WeakCIdeal => {
            let weak = predicate == Predicate::WeakCIdeal;
            if let Some(path) = witness {
                let text = match read(path) {
                    Ok(t) => t,
                    Err(o) => return o,
                };
                let subs = match dsl::parse_subspaces(alg, &text) {
                    Ok(s) => s,
                    Err(e) => return Output::usage(format!("{}: {e}", path.display())),
                };
                let Some(c) = subs.get("C") else {
                    return Output::usage(format!("{}: no `subspace C = span(...)` statement", path.display()));
                };
                let checked = if weak {
                    verify_weak_c(alg, b, c).map(|cert| serde_json::to_value(cert).expect("serializable"))
                } else {
                    verify_c(alg, b, c).map(|cert| serde_json::to_value(cert).expect("serializable"))
                };
                return match checked {
                    Ok(cert) => verdict(name, Some(sname), true, json!({ "mode": "certificate", "certificate": cert })),
                    Err(f) => verdict(
                        name,
                        Some(sname),
                        false,
                        json!({ "mode": "certificate", "reason": f.to_string(), "failure": f }),
                    ),
                };
            }
            let found = if weak {
                find_weak_c_witness(alg, b, budget).map(|c| c.map(|c| serde_json::to_value(c).expect("serializable")))
            } else {
                find_c_witness(alg, b, budget).map(|c| c.map(|c| serde_json::to_value(c).expect("serializable")))
            };
            match found {
                Ok(Some(cert)) => verdict(name, Some(sname), true, json!({ "mode": "search", "certificate": cert })),
                Ok(None) => verdict(name, Some(sname), false, json!({ "mode": "search" })),
                Err(Error::NotSubalgebra(_)) => not_sub(),
                Err(e) => usage_or_unsupported(name, sname, e),
            }
        }
        _ => unreachable!("algebra predicates handled above"),
    }
}

fn usage_or_unsupported(name: &str, sname: &str, e: Error) -> Output {
    if e.is_unsupported() {
        unsupported(name, Some(sname), e.to_string())
    } else {
        Output::usage(e.to_string())
    }
}

/// Flags, one-dimensional classification and the lattice summary.
pub fn lattice(built: &Built, budget: &Budget) -> Output {
    let alg = &built.algebra;
    let flags = structure::flags(alg, budget);
    let one_dim = structure::classify_one_dim_weak_c(alg, budget);
    let mut v = json!({
        "algebra": alg.to_json(),
        "flags": flags,
        "one_dim": one_dim,
    });
    match Lattice::build(alg, budget) {
        Ok(lat) => {
            let (frattini, phi) = structure::frattini(&lat);
            v["lattice"] = json!({
                "subalgebras": lat.len(),
                "subalgebras_by_dim": lat.counts_by_dim(),
                "ideals": lat.ideal_indices().len(),
                "subideals": lat.subideal_indices().len(),
                "maximal_subalgebras": structure::maximal_subalgebras(&lat),
                "frattini_subalgebra": frattini,
                "frattini_ideal": phi,
                "minimal_ideals": lat.minimal_ideals().into_iter().map(|i| lat.get(i).clone()).collect::<Vec<_>>(),
                "maximal_nilpotent_subalgebras": structure::maximal_nilpotent_subalgebras(&lat),
                "cartan_subalgebras": structure::cartan_subalgebras(&lat),
            });
            Output::json(EXIT_OK, &v)
        }
        Err(e) if e.is_unsupported() => {
            v["lattice"] = json!({ "unsupported": e.to_string() });
            Output::json(EXIT_UNSUPPORTED, &v)
        }
        Err(e) => Output::usage(e.to_string()),
    }
}
