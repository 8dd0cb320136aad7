//! Command-line front end. Reports go to standard output as JSON, diagnostics
//! to standard error.
//!
//! Exit codes: 0 success, 1 a check or audit found a violation or
//! counterexample (the report is still written), 2 input errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::audit::{parse_selection, run_theorem_audit, AuditOptions, AuditStatus};
use crate::connectivity::{ConnectivitySystem, EfficiencyBound};
use crate::construction::{
    construct_ultrafilter, enumerate_families, extend_filter_to_ultrafilter, generate_from_subbase, ultrafilter_number,
    EnumerationKind, EnumerationRequest,
};
use crate::decomposition::{branch_width, decomposition_width, linear_width, ordering_width, Certificate};
use crate::error::{Error, Result};
use crate::families::{check_family, classify_family, FamilyKind, SingleMode};
use crate::io;
use crate::order::{chain_partition_of, max_antichain_of};

#[derive(Parser, Debug)]
#[command(name = "connsys", version, about = "Connectivity systems, set families and width duality")]
struct Cli {
    /// Worker threads for the searches that support them.
    #[arg(long, global = true, default_value_t = 1)]
    parallel: usize,
    /// Accepted for reproducible invocations; every computation here is exact.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Include wall-clock time in the report (breaks byte-identical output).
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check symmetry, normalization and submodularity.
    Validate { instance: PathBuf },
    /// Exact branch-width or linear width.
    Width {
        which: WidthKind,
        instance: PathBuf,
        /// Include an optimal certificate.
        #[arg(long)]
        certificate: bool,
        /// Evaluate the given certificate instead of searching.
        #[arg(long, value_name = "FILE")]
        evaluate: Option<PathBuf>,
    },
    /// Family operations.
    Family {
        #[command(subcommand)]
        op: FamilyOp,
    },
    /// List ultrafilters, tangles or single ultrafilters.
    Enumerate {
        what: EnumerateKind,
        #[command(flatten)]
        k: KArg,
        #[arg(long)]
        non_principal: bool,
        #[arg(long)]
        limit: Option<usize>,
        instance: PathBuf,
    },
    /// Build one ultrafilter with the three-step construction.
    Construct {
        what: ConstructKind,
        #[command(flatten)]
        k: KArg,
        instance: PathBuf,
    },
    /// Extend a filter to an ultrafilter of the same order.
    Extend {
        #[arg(long, value_name = "FILE")]
        family: PathBuf,
        instance: PathBuf,
    },
    /// The filter generated by a subbase.
    Generate {
        #[arg(long, value_name = "FILE")]
        subbase: PathBuf,
        #[arg(short = 'k', long = "k")]
        k: Option<u32>,
        instance: PathBuf,
    },
    /// Exhaustive theorem audits.
    Audit {
        /// all, duality, dilworth, chains, families, or comma-separated ids.
        #[arg(long, default_value = "all")]
        theorems: String,
        #[arg(short = 'k', long = "k", conflicts_with = "k_range")]
        k: Option<u32>,
        /// Inclusive range `a..b`.
        #[arg(long)]
        k_range: Option<String>,
        instance: PathBuf,
    },
    /// Maximum antichain and minimum chain cover of the non-empty k-efficient sets.
    Dilworth {
        #[command(flatten)]
        k: KArg,
        instance: PathBuf,
    },
    /// Smallest generating prefilter of a non-principal ultrafilter.
    UltrafilterNumber {
        #[command(flatten)]
        k: KArg,
        instance: PathBuf,
    },
}

#[derive(Args, Debug)]
struct KArg {
    /// Efficiency bound.
    #[arg(short = 'k', long = "k")]
    k: u32,
}

#[derive(Subcommand, Debug)]
enum FamilyOp {
    /// Check a family against one kind's axioms.
    Check {
        #[arg(long)]
        kind: String,
        /// Overrides the bound stored in the family file.
        #[arg(short = 'k', long = "k")]
        k: Option<u32>,
        #[arg(long, value_name = "FILE")]
        family: PathBuf,
        instance: PathBuf,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum WidthKind {
    Branch,
    Linear,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum EnumerateKind {
    Ultrafilters,
    Tangles,
    SingleUltrafilters,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum ConstructKind {
    Ultrafilter,
}

struct Outcome {
    result: Value,
    finding: bool,
}

impl Outcome {
    fn ok(result: Value) -> Self {
        Outcome { result, finding: false }
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display())))
}

fn load(path: &Path) -> Result<ConnectivitySystem> {
    io::parse_instance(&read(path)?)
}

fn parse_range(s: &str) -> Result<(u32, u32)> {
    let bad = || Error::InvalidInput(format!("k range {s:?} is not of the form a..b"));
    let (a, b) = s.split_once("..").ok_or_else(bad)?;
    let a: u32 = a.trim().parse().map_err(|_| bad())?;
    let b: u32 = b.trim_start_matches('=').trim().parse().map_err(|_| bad())?;
    if a > b {
        return Err(bad());
    }
    Ok((a, b))
}

fn dispatch(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Validate { instance } => {
            let sys = load(instance)?;
            Ok(Outcome::ok(json!({
                "valid": true,
                "type": sys.spec().kind_name(),
                "n": sys.n(),
                "max_f": sys.max_value(),
            })))
        }
        Command::Width { which, instance, certificate, evaluate } => {
            let sys = load(instance)?;
            if let Some(path) = evaluate {
                let cert = io::parse_certificate(&sys, &read(path)?)?;
                let width = match (which, &cert) {
                    (WidthKind::Branch, Certificate::Branch(d)) => decomposition_width(&sys, d)?,
                    (WidthKind::Linear, Certificate::Linear(o)) => ordering_width(&sys, o)?,
                    _ => return Err(Error::InvalidInput("certificate does not match the width kind".into())),
                };
                return Ok(Outcome::ok(json!({"width": width})));
            }
            let w = match which {
                WidthKind::Branch => branch_width(&sys)?,
                WidthKind::Linear => linear_width(&sys)?,
            };
            Ok(Outcome::ok(io::width_to_json(&sys, &w, *certificate)))
        }
        Command::Family { op: FamilyOp::Check { kind, k, family, instance } } => {
            let sys = load(instance)?;
            let kind: FamilyKind = kind.parse()?;
            let mut fam = io::parse_family(&sys, &read(family)?)?;
            if let Some(k) = k {
                fam = fam.with_bound(EfficiencyBound(*k));
            }
            let verdict = check_family(&sys, &fam, kind)?;
            let flags = classify_family(&sys, &fam)?;
            let mut result = json!({"kind": kind.name(), "k": fam.bound().0});
            if let (Value::Object(out), Value::Object(v)) =
                (&mut result, io::verdict_to_json(&sys, &verdict, Some(&flags)))
            {
                out.extend(v);
            }
            Ok(Outcome { result, finding: !verdict.holds })
        }
        Command::Enumerate { what, k, non_principal, limit, instance } => {
            let sys = load(instance)?;
            let kind = match what {
                EnumerateKind::Ultrafilters => EnumerationKind::Ultrafilter,
                EnumerateKind::Tangles => EnumerationKind::Tangle,
                EnumerateKind::SingleUltrafilters => EnumerationKind::SingleUltrafilter(SingleMode::QS1),
            };
            let mut req = EnumerationRequest::new(kind, EfficiencyBound(k.k)).parallel(cli.parallel);
            if *non_principal {
                req = req.non_principal();
            }
            if let Some(l) = limit {
                req = req.limit(*l);
            }
            let fams = enumerate_families(&sys, &req)?;
            Ok(Outcome::ok(json!({
                "count": fams.len(),
                "families": fams.iter().map(|f| io::family_to_json(&sys, f)).collect::<Vec<_>>(),
            })))
        }
        Command::Construct { what: ConstructKind::Ultrafilter, k, instance } => {
            let sys = load(instance)?;
            let c = construct_ultrafilter(&sys, EfficiencyBound(k.k))?;
            Ok(Outcome::ok(json!({
                "family": io::family_to_json(&sys, &c.family),
                "ops": c.ops,
                "fallback": c.fallback,
            })))
        }
        Command::Extend { family, instance } => {
            let sys = load(instance)?;
            let fam = io::parse_family(&sys, &read(family)?)?;
            match extend_filter_to_ultrafilter(&sys, &fam) {
                Ok(u) => Ok(Outcome::ok(json!({"extended": true, "family": io::family_to_json(&sys, &u)}))),
                Err(Error::NoUltrafilterExtension) => {
                    Ok(Outcome { result: json!({"extended": false, "family": null}), finding: true })
                }
                Err(e) => Err(e),
            }
        }
        Command::Generate { subbase, k, instance } => {
            let sys = load(instance)?;
            let mut fam = io::parse_family(&sys, &read(subbase)?)?;
            if let Some(k) = k {
                fam = fam.with_bound(EfficiencyBound(*k));
            }
            let generated = generate_from_subbase(&sys, &fam)?;
            let filter = check_family(&sys, &generated, FamilyKind::Filter)?.holds;
            let ultrafilter = check_family(&sys, &generated, FamilyKind::Ultrafilter)?.holds;
            Ok(Outcome::ok(json!({
                "family": io::family_to_json(&sys, &generated),
                "filter": filter,
                "ultrafilter": ultrafilter,
            })))
        }
        Command::Audit { theorems, k, k_range, instance } => {
            let sys = load(instance)?;
            let ids = parse_selection(theorems)?;
            let (lo, hi) = match (k, k_range) {
                (Some(k), None) => (*k, *k),
                (None, Some(r)) => parse_range(r)?,
                _ => return Err(Error::InvalidInput("audit needs -k or --k-range".into())),
            };
            let mut reports = Vec::new();
            let mut finding = false;
            for k in lo..=hi {
                let options = AuditOptions { parallel: cli.parallel };
                for r in run_theorem_audit(&sys, EfficiencyBound(k), &ids, options)? {
                    finding |= r.status == AuditStatus::CounterexampleFound;
                    reports.push(io::audit_report_to_json(&sys, &r));
                }
            }
            Ok(Outcome { result: json!({"reports": reports}), finding })
        }
        Command::Dilworth { k, instance } => {
            let sys = load(instance)?;
            let k = EfficiencyBound(k.k);
            let family: Vec<_> = sys.enumerate_k_efficient(k).into_iter().filter(|a| !a.is_empty()).collect();
            let anti = max_antichain_of(&family);
            let cover = chain_partition_of(&family);
            Ok(Outcome {
                result: json!({
                    "family_size": family.len(),
                    "max_antichain": io::subsets_json(&sys, &anti),
                    "chain_cover": cover.iter().map(|c| io::subsets_json(&sys, c)).collect::<Vec<_>>(),
                    "equal": anti.len() == cover.len(),
                }),
                finding: anti.len() != cover.len(),
            })
        }
        Command::UltrafilterNumber { k, instance } => {
            let sys = load(instance)?;
            let r = ultrafilter_number(&sys, EfficiencyBound(k.k))?;
            Ok(Outcome::ok(json!({
                "u": r.u,
                "witness_prefilter": r.witness_prefilter.as_ref().map(|f| io::family_to_json(&sys, f)),
                "generated": r.generated.as_ref().map(|f| io::family_to_json(&sys, f)),
            })))
        }
    }
}

/// Runs one invocation; `args` includes the program name.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    let start = Instant::now();
    match dispatch(&cli) {
        Ok(outcome) => {
            let timing = cli.timing.then(|| json!({"elapsed_ms": start.elapsed().as_secs_f64() * 1e3}));
            let report = json!({
                "command": args.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect::<Vec<_>>(),
                "result": outcome.result,
                "timing": timing,
                "version": env!("CARGO_PKG_VERSION"),
            });
            let text = serde_json::to_string_pretty(&report).expect("JSON values always serialize");
            if writeln!(out, "{text}").is_err() {
                return 2;
            }
            i32::from(outcome.finding)
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}
