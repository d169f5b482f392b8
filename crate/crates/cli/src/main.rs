use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use rankvar::cp::{class_tensor, gaussian_ext, jt_ext, jt_sym, jt_tensor, JordanType};
use rankvar::gf::GaloisField;
use rankvar::lr::{verify_lemma, LemmaCase};
use rankvar::modules::ModuleRep;
use rankvar::registry::{emit_report, to_sorted_json, FamilyParams, ReportFormat, SuiteParams, SuiteRegistry};
use rankvar::variety::{generic_type, scan, ScanConfig, ScanMode};
use rankvar::Error;

#[derive(Parser)]
#[command(name = "rankvar", version, about = "Rank varieties and Jordan types of symmetric group modules over finite fields")]
struct Cli {
    /// Lift the default bounds p <= 7, k <= 4, e <= 3.
    #[arg(long, global = true)]
    allow_large: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Littlewood-Richardson source-set checks.
    Lr {
        #[command(subcommand)]
        action: LrAction,
    },
    /// Jordan types of exterior, symmetric and tensor powers of C_p-modules.
    Repring {
        #[arg(long)]
        p: u32,
        #[command(subcommand)]
        op: RepringOp,
    },
    /// Build a registered module and print its summary.
    Module {
        #[command(subcommand)]
        action: ModuleAction,
    },
    /// Jordan types over every point, or seeded samples, of GF(p^e)^k.
    Scan(ScanArgs),
    /// Generic Jordan type from random points with f_k p_k != 0.
    Generic(GenericArgs),
    /// Run a registered verification suite.
    Verify(VerifyArgs),
    /// Print the suite-to-statement table as Markdown.
    Traceability,
    /// List registered module families and suites.
    List,
}

#[derive(Subcommand)]
enum LrAction {
    Verify {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        m: u32,
        /// Inclusive range, e.g. 4..7.
        #[arg(long, value_parser = parse_range)]
        b_range: (u32, u32),
        #[arg(long)]
        case: u8,
        #[command(flatten)]
        out: OutArgs,
    },
}

#[derive(Subcommand)]
enum RepringOp {
    /// L^r(a).
    Ext {
        #[arg(long, value_parser = parse_parts)]
        a: Parts,
        #[arg(long)]
        r: usize,
    },
    /// Sym^k(a).
    Sym {
        #[arg(long, value_parser = parse_parts)]
        a: Parts,
        #[arg(long)]
        k: usize,
    },
    /// a (x) b.
    Tensor {
        #[arg(long, value_parser = parse_parts)]
        a: Parts,
        #[arg(long, value_parser = parse_parts)]
        b: Parts,
    },
}

#[derive(Subcommand)]
enum ModuleAction {
    Build(ModuleArgs),
}

#[derive(Args, Clone)]
struct ModuleArgs {
    /// Family name: natural, specht, specht-hook, specht-hook-plus, D1, Dr, D(p-1), D(kp-p-1).
    #[arg(long, alias = "module")]
    which: String,
    #[arg(long)]
    p: u32,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    r: Option<usize>,
}

#[derive(Args)]
struct OutArgs {
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, default_value = "json", value_parser = ["json", "csv"])]
    format: String,
}

#[derive(Args)]
struct ScanArgs {
    #[arg(long)]
    module: String,
    #[arg(long)]
    p: u32,
    #[arg(long)]
    k: usize,
    #[arg(long, default_value_t = 2)]
    e: u32,
    #[arg(long)]
    r: Option<usize>,
    #[arg(long, conflicts_with = "samples")]
    exhaustive: bool,
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long, default_value_t = 100_000)]
    budget: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    orbit_reduce: bool,
    /// Also judge membership and f_k = 0 against two vanishing coordinates.
    #[arg(long)]
    intersection: bool,
    #[command(flatten)]
    out: OutArgs,
}

#[derive(Args)]
struct GenericArgs {
    #[arg(long)]
    module: String,
    #[arg(long)]
    p: u32,
    #[arg(long)]
    k: usize,
    #[arg(long, default_value_t = 2)]
    e: u32,
    #[arg(long)]
    r: Option<usize>,
    #[arg(long, default_value_t = 10)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    suite: String,
    #[arg(long)]
    p: Option<u32>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    e: Option<u32>,
    #[arg(long)]
    m: Option<u32>,
    #[arg(long)]
    case: Option<u8>,
    #[arg(long, value_parser = parse_range)]
    b_range: Option<(u32, u32)>,
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[command(flatten)]
    out: OutArgs,
}

fn parse_range(s: &str) -> Result<(u32, u32), String> {
    let (a, b) = s.split_once("..").ok_or_else(|| format!("expected LO..HI, got '{s}'"))?;
    let lo = a.trim().parse::<u32>().map_err(|e| e.to_string())?;
    let hi = b.trim_start_matches('=').trim().parse::<u32>().map_err(|e| e.to_string())?;
    if lo > hi {
        return Err(format!("empty range {s}"));
    }
    Ok((lo, hi))
}

/// Block sizes such as `3,1`.
#[derive(Clone, Debug)]
struct Parts(Vec<u32>);

fn parse_parts(s: &str) -> Result<Parts, String> {
    s.split(',').map(|x| x.trim().parse::<u32>().map_err(|e| format!("'{x}': {e}"))).collect::<Result<_, _>>().map(Parts)
}

/// Exit status: 0 pass, 1 failure, 2 usage, 3 unsupported parameters, 4 I/O.
#[derive(Debug)]
enum Failure {
    Lib(Error),
    Verdict,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Io(_) => 4,
        Error::Unsupported { .. } | Error::NotOddPrime(_) | Error::OutOfRange(_) | Error::FieldTooSmall { .. } => 3,
        Error::UnknownSuite(_) | Error::UnknownModule(_) | Error::MissingParameter(_) => 2,
        _ => 1,
    }
}

fn guard(allow_large: bool, p: u32, k: usize, e: Option<u32>) -> Result<(), Error> {
    SuiteParams { p: Some(p), k: Some(k), e, allow_large, ..SuiteParams::default() }.check_guardrails()
}

fn write_out(text: &str, out: &Option<PathBuf>) -> Result<(), Error> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(Error::from),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn build_module(reg: &SuiteRegistry, which: &str, p: u32, k: usize, r: Option<usize>) -> Result<ModuleRep, Error> {
    let fp = FamilyParams { p, k, r };
    reg.families().get(which)?.build(&fp)
}

fn jordan(p: u32, parts: &Parts) -> Result<JordanType, Error> {
    JordanType::from_parts(p, parts.0.iter().copied())
}

fn repring(p: u32, op: &RepringOp) -> Result<serde_json::Value, Error> {
    let v = match op {
        RepringOp::Ext { a, r } => {
            let a = jordan(p, a)?;
            let matrix = jt_ext(&a, *r)?;
            let gaussian = match a.blocks().parts() {
                [n] if (*r as u32) < p && *r >= 1 => Some(gaussian_ext(*n, *r as u32, p)?),
                _ => None,
            };
            json!({"op": "ext", "input": a, "r": r, "matrix_path": matrix, "gaussian_path": gaussian,
                   "agree": gaussian.as_ref().map(|g| g == &matrix)})
        }
        RepringOp::Sym { a, k } => {
            let a = jordan(p, a)?;
            let matrix = jt_sym(&a, *k)?;
            let via_ext = match a.blocks().parts() {
                [i] if *k as u32 + i <= p + 1 => Some(jt_ext(&JordanType::single(p, *k as u32 + i - 1)?, *k)?),
                _ => None,
            };
            json!({"op": "sym", "input": a, "k": k, "matrix_path": matrix, "exterior_path": via_ext,
                   "agree": via_ext.as_ref().map(|g| g == &matrix)})
        }
        RepringOp::Tensor { a, b } => {
            let (a, b) = (jordan(p, a)?, jordan(p, b)?);
            let matrix = jt_tensor(&a, &b)?;
            let ring = class_tensor(&a, &b)?;
            json!({"op": "tensor", "a": a, "b": b, "matrix_path": matrix, "ring_path": ring, "agree": ring == matrix})
        }
    };
    Ok(v)
}

fn run(cli: Cli) -> Result<(), Failure> {
    let reg = SuiteRegistry::standard();
    let allow = cli.allow_large;
    match cli.command {
        Command::Lr { action: LrAction::Verify { p, m, b_range, case, out } } => {
            let report = verify_lemma(p, m, LemmaCase::try_from(case)?, b_range.0..=b_range.1)?;
            write_out(&to_sorted_json(&report)?, &out.out)?;
            eprintln!("lr verify: {} records, all equal: {}", report.records.len(), report.all_equal);
            if !report.all_equal {
                return Err(Failure::Verdict);
            }
        }
        Command::Repring { p, op } => {
            if p > 7 && !allow {
                return Err(Error::Unsupported { name: "p", value: p as u64, bound: "p <= 7 unless --allow-large is given".into() }.into());
            }
            let v = repring(p, &op)?;
            print!("{}", to_sorted_json(&v)?);
            if v["agree"] == json!(false) {
                return Err(Failure::Verdict);
            }
        }
        Command::Module { action: ModuleAction::Build(a) } => {
            guard(allow, a.p, a.k, None)?;
            let m = build_module(&reg, &a.which, a.p, a.k, a.r)?;
            let s = m.summary();
            print!("{}", to_sorted_json(&s)?);
            if !s.generators_commute || s.generator_orders.iter().any(|&o| o != a.p) {
                return Err(Failure::Verdict);
            }
        }
        Command::Scan(a) => {
            guard(allow, a.p, a.k, Some(a.e))?;
            let family = reg.families().get(&a.module)?;
            let fp = FamilyParams { p: a.p, k: a.k, r: a.r };
            let module = family.build(&fp)?;
            let mut cfg = ScanConfig::new(a.e, family.predicate(&fp));
            cfg.mode = match (a.exhaustive, a.samples) {
                (true, _) => ScanMode::Exhaustive,
                (false, Some(n)) => ScanMode::Sampled(n),
                (false, None) => ScanMode::Auto { budget: a.budget, samples: 2_000 },
            };
            cfg.seed = a.seed;
            cfg.orbit_reduce = a.orbit_reduce;
            cfg.check_intersection = a.intersection;
            cfg.claimed_complexity = family.claimed_complexity(&fp);
            let start = std::time::Instant::now();
            let report = scan(&module, &cfg)?;
            let text = match a.out.format.as_str() {
                "csv" => report.to_csv()?,
                _ => to_sorted_json(&report)?,
            };
            write_out(&text, &a.out.out)?;
            eprintln!(
                "scan {}: {} points, {} in variety, pass {} ({:.2}s)",
                report.module,
                report.summary.points,
                report.summary.in_variety,
                report.verdicts.pass,
                start.elapsed().as_secs_f64()
            );
            if !report.verdicts.pass {
                return Err(Failure::Verdict);
            }
        }
        Command::Generic(a) => {
            guard(allow, a.p, a.k, Some(a.e))?;
            let module = build_module(&reg, &a.module, a.p, a.k, a.r)?.lift(&GaloisField::new(a.p, a.e)?)?;
            let cert = generic_type(&module, a.trials, a.seed)?;
            print!("{}", to_sorted_json(&json!({"module": module.label(), "p": a.p, "k": a.k, "certificate": cert}))?);
            if !cert.unanimous {
                return Err(Failure::Verdict);
            }
        }
        Command::Verify(a) => {
            let params = SuiteParams {
                p: a.p,
                k: a.k,
                e: a.e,
                m: a.m,
                case: a.case,
                b_range: a.b_range,
                samples: a.samples,
                seed: a.seed,
                allow_large: allow,
            };
            let mut result = reg.run(&a.suite, &params)?;
            let format: ReportFormat = a.out.format.parse()?;
            if let Some(path) = &a.out.out {
                result.artifacts.push(path.display().to_string());
                emit_report(&result, format, path)?;
            } else {
                print!("{}", rankvar::registry::render_report(&result, format)?);
            }
            for c in &result.checks {
                eprintln!("{} {}: {}", if c.pass { "ok  " } else { "FAIL" }, c.label, c.detail);
            }
            eprintln!("suite {}: {} ({:.2}s)", result.suite, if result.pass { "pass" } else { "fail" }, result.elapsed.as_secs_f64());
            if !result.pass {
                return Err(Failure::Verdict);
            }
        }
        Command::Traceability => print!("{}", reg.traceability()),
        Command::List => {
            println!("module families:");
            for name in reg.families().names() {
                println!("  {name:<18} {}", reg.families().get(name)?.description());
            }
            println!("suites:");
            for s in reg.suites() {
                println!("  {:<22} {}", s.name(), s.statement());
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verdict) => ExitCode::from(1),
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
