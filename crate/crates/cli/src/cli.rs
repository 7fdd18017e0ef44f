//! Argument parsing and subcommand dispatch.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use vogan::audit::{audit_family, AuditOptions};
use vogan::{
    check_report, CheckOptions, ClosedOptions, DiscrepancyReport, Error, Family, Lambda, Method,
    MidSource, SMinusReading, VoganDiagram, DEFAULT_ORACLE_CAP,
};

use crate::bench::{run_bench, DEFAULT_SEED};
use crate::exit;
use crate::record::{Format, ScanRecord};
use crate::scan::{run_scan, ScanConfig, ScanError};
use crate::ORACLE_CAP_VAR;

#[derive(Debug, Parser)]
#[command(name = "voganscan", version, about = "Speciality checks, scans and audits for classical Vogan diagrams")]
pub struct Cli {
    /// Suppress progress output on standard error.
    #[arg(long, short, global = true)]
    pub quiet: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate one diagram.
    Check(CheckArgs),
    /// Evaluate every diagram in a range of ranks.
    Scan(ScanArgs),
    /// Compare the closed forms with the oracle over whole families.
    Audit(AuditArgs),
    /// Time the oracle against the published formulas.
    Bench(BenchArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Oracle,
    Mid,
    Published,
    All,
}

impl MethodArg {
    fn methods(self) -> Vec<Method> {
        match self {
            MethodArg::Oracle => vec![Method::Oracle],
            MethodArg::Mid => vec![Method::Mid],
            MethodArg::Published => vec![Method::Published],
            MethodArg::All => Method::ALL.to_vec(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SMinusArg {
    Alternating,
    SumDifference,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MidSourceArg {
    Oracle,
    Closed,
}

/// Evaluation switches shared by `check` and `scan`.
#[derive(Debug, Clone, Args)]
pub struct EvalArgs {
    /// Accept zeros next to a strict sign when assigning λ = ±1.
    #[arg(long)]
    pub weak: bool,
    /// Exit with status 2 on any internal inconsistency.
    #[arg(long)]
    pub strict: bool,
    /// Reading of S₋ inside the published formulas.
    #[arg(long, value_enum, default_value = "alternating")]
    pub s_minus: SMinusArg,
    /// Source of Γ and τ for the mid path.
    #[arg(long, value_enum, default_value = "oracle")]
    pub mid_source: MidSourceArg,
}

impl EvalArgs {
    fn options(&self, oracle_cap: usize) -> CheckOptions {
        CheckOptions {
            strict: !self.weak,
            oracle_cap,
            mid_source: match self.mid_source {
                MidSourceArg::Oracle => MidSource::Oracle,
                MidSourceArg::Closed => MidSource::Closed,
            },
            closed: ClosedOptions {
                s_minus: match self.s_minus {
                    SMinusArg::Alternating => SMinusReading::Alternating,
                    SMinusArg::SumDifference => SMinusReading::SumDifference,
                },
                ..ClosedOptions::default()
            },
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CheckFormat {
    Text,
    Json,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    #[arg(long)]
    pub family: Family,
    #[arg(long)]
    pub rank: usize,
    /// Painted nodes, comma separated.
    #[arg(long, value_delimiter = ',', required = true)]
    pub painted: Vec<usize>,
    #[arg(long, value_enum, default_value = "oracle")]
    pub method: MethodArg,
    #[arg(long, value_enum, default_value = "text")]
    pub format: CheckFormat,
    #[command(flatten)]
    pub eval: EvalArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ScanFormat {
    Jsonl,
    Csv,
}

/// A single family or all four.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Families(pub Vec<Family>);

fn parse_families(s: &str) -> Result<Families, String> {
    if s.eq_ignore_ascii_case("all") {
        return Ok(Families(Family::ALL.to_vec()));
    }
    s.parse::<Family>().map(|f| Families(vec![f])).map_err(|e| e.to_string())
}

fn parse_lambda(s: &str) -> Result<Lambda, String> {
    let v: i8 = s.parse().map_err(|_| format!("expected -1, 0 or 1, got {s:?}"))?;
    Lambda::try_from(v).map_err(|e| e.to_string())
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    /// A, B, C, D or all.
    #[arg(long, value_parser = parse_families)]
    pub family: Families,
    #[arg(long)]
    pub min_rank: usize,
    #[arg(long)]
    pub max_rank: usize,
    #[arg(long, value_enum, default_value = "oracle")]
    pub method: MethodArg,
    #[arg(long)]
    pub only_special: bool,
    #[arg(long, value_parser = parse_lambda, allow_hyphen_values = true)]
    pub lambda: Option<Lambda>,
    /// Keep one diagram per automorphism orbit.
    #[arg(long)]
    pub dedup: bool,
    #[arg(long, default_value_t = default_jobs())]
    pub jobs: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "jsonl")]
    pub format: ScanFormat,
    #[command(flatten)]
    pub eval: EvalArgs,
}

fn default_jobs() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

#[derive(Debug, Args)]
pub struct AuditArgs {
    /// A, B, C, D or all.
    #[arg(long, value_parser = parse_families)]
    pub family: Families,
    #[arg(long)]
    pub max_rank: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BenchFormat {
    Text,
    Json,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long)]
    pub family: Family,
    #[arg(long)]
    pub rank: usize,
    #[arg(long)]
    pub samples: usize,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    #[arg(long, value_enum, default_value = "text")]
    pub format: BenchFormat,
}

/// A failure carrying its exit status.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure { code: exit::USAGE, message: message.into() }
    }

    fn io(path: Option<&Path>, e: io::Error) -> Self {
        let target = path.map_or("standard output".to_string(), |p| p.display().to_string());
        Failure { code: exit::IO, message: format!("{target}: {e}") }
    }
}

fn oracle_cap() -> Result<usize, Failure> {
    match std::env::var(ORACLE_CAP_VAR) {
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_ORACLE_CAP),
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::usage(format!("{ORACLE_CAP_VAR} must be a non-negative integer, got {v:?}"))),
        Err(e) => Err(Failure::usage(format!("{ORACLE_CAP_VAR}: {e}"))),
    }
}

fn open_output(path: Option<&Path>) -> Result<Box<dyn Write>, Failure> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p).map_err(|e| Failure::io(Some(p), e))?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn is_inconsistency(e: &Error) -> bool {
    matches!(e, Error::OracleInconsistency { .. } | Error::HelperInconsistency { .. })
}

/// Parses `args` and runs the subcommand, returning the exit status.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { exit::USAGE } else { exit::OK };
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("voganscan: {}", f.message);
            f.code
        }
    }
}

fn dispatch(cli: Cli) -> Result<i32, Failure> {
    let cap = oracle_cap()?;
    let quiet = cli.quiet;
    match cli.command {
        Command::Check(args) => check(args, cap),
        Command::Scan(args) => scan(args, cap, quiet),
        Command::Audit(args) => audit(args, cap, quiet),
        Command::Bench(args) => bench(args, cap),
    }
}

fn text_line(record: &ScanRecord, dominance: Option<bool>) -> String {
    if let Some(e) = &record.error {
        return format!("{:<10} error: {e}", record.method.as_str());
    }
    let xi: Vec<String> = record.xi.iter().map(|(i, v)| format!("{i}:{v}")).collect();
    let verdict = match record.lambda {
        Some(l) => format!("special lambda={l}"),
        None => "not special".to_string(),
    };
    let mut line = format!("{:<10} xi {:<24} {verdict}", record.method.as_str(), xi.join(" "));
    if let Some(ok) = dominance {
        line.push_str(if ok { " dominant" } else { " not dominant" });
    }
    if !record.cases.is_empty() {
        let cases: Vec<&str> = record.cases.iter().map(|c| c.as_str()).collect();
        line.push_str(&format!(" cases {}", cases.join(",")));
    }
    line
}

fn check(args: CheckArgs, cap: usize) -> Result<i32, Failure> {
    let diagram = VoganDiagram::from_unsorted(args.family, args.rank, args.painted.clone())
        .map_err(|e| Failure::usage(e.to_string()))?;
    let options = args.eval.options(cap);
    let mut lines = Vec::new();
    let mut records = Vec::new();
    let mut usage_error = false;
    let mut inconsistent = false;
    for method in args.method.methods() {
        let (record, dominance) = match check_report(&diagram, method, &options) {
            Ok(c) => {
                let dominance = c.verdict.dominance_ok;
                (ScanRecord::from_check(&diagram, method, c), dominance)
            }
            Err(e) => {
                inconsistent |= is_inconsistency(&e);
                usage_error |= !is_inconsistency(&e);
                (ScanRecord::from_error(&diagram, method, &e), None)
            }
        };
        lines.push(text_line(&record, dominance));
        records.push(record);
    }
    let xi_of = |m| records.iter().find(|r| r.method == m && r.error.is_none()).map(|r| &r.xi);
    if let (Some(o), Some(m)) = (xi_of(Method::Oracle), xi_of(Method::Mid)) {
        inconsistent |= o != m;
    }

    let mut out = open_output(None)?;
    let written: io::Result<()> = (|| {
        match args.format {
            CheckFormat::Text => {
                writeln!(out, "{diagram}")?;
                for line in &lines {
                    writeln!(out, "{line}")?;
                }
            }
            CheckFormat::Json => {
                for r in &records {
                    serde_json::to_writer(&mut out, r)?;
                    writeln!(out)?;
                }
            }
        }
        out.flush()
    })();
    written.map_err(|e| Failure::io(None, e))?;

    if inconsistent {
        eprintln!("voganscan: internal inconsistency detected for {diagram}");
        if args.eval.strict {
            return Ok(exit::INCONSISTENT);
        }
    }
    Ok(if usage_error { exit::USAGE } else { exit::OK })
}

fn scan(args: ScanArgs, cap: usize, quiet: bool) -> Result<i32, Failure> {
    let config = ScanConfig {
        families: args.family.0.clone(),
        min_rank: args.min_rank,
        max_rank: args.max_rank,
        methods: args.method.methods(),
        only_special: args.only_special,
        lambda: args.lambda,
        dedup: args.dedup,
        jobs: args.jobs,
        format: match args.format {
            ScanFormat::Jsonl => Format::Jsonl,
            ScanFormat::Csv => Format::Csv,
        },
        check: args.eval.options(cap),
    };
    config.validate().map_err(Failure::usage)?;
    let out = open_output(args.out.as_deref())?;
    let progress = |msg: &str| {
        if !quiet {
            eprintln!("{msg}");
        }
    };
    let (summary, _) = run_scan(&config, out, progress).map_err(|e| match e {
        ScanError::Config(m) => Failure::usage(m),
        ScanError::Io(e) => Failure::io(args.out.as_deref(), e),
    })?;
    if !quiet {
        eprint!("{}", summary.render());
    }
    if summary.inconsistencies > 0 && args.eval.strict {
        return Ok(exit::INCONSISTENT);
    }
    Ok(exit::OK)
}

#[derive(Serialize)]
struct AuditLine<'a> {
    family: Family,
    complete: bool,
    error: Option<String>,
    report: &'a DiscrepancyReport,
}

fn audit_summary(report: &DiscrepancyReport) -> String {
    let mut s = format!("{} ranks {:?}: {} diagrams\n", report.family, report.ranks, report.diagrams);
    for (title, stats) in [("xi", &report.xi), ("xi s-minus=sum-difference", &report.xi_sum_difference), ("tau", &report.tau), ("gamma", &report.gamma)] {
        for b in stats.iter() {
            let fit = b.offset_fit.map_or(String::new(), |f| {
                format!(" fit c={} explains {}{}", f.c, f.explained, if f.exact { " (exact)" } else { "" })
            });
            s.push_str(&format!("  {title:<26} {:<26} {:>7} tested {:>7} mismatched{fit}\n", b.label, b.tested, b.mismatched));
        }
    }
    s.push_str(&format!("  mid mismatches: {}\n", report.mid.mismatched));
    s
}

fn audit(args: AuditArgs, cap: usize, quiet: bool) -> Result<i32, Failure> {
    let families: Vec<Family> = match &args.family.0[..] {
        [single] => vec![*single],
        all => all.iter().copied().filter(|f| f.min_rank() <= args.max_rank).collect(),
    };
    let options = AuditOptions { oracle_cap: cap, ..AuditOptions::default() };
    let mut out = open_output(args.out.as_deref())?;
    let mut code = exit::OK;
    for family in families {
        let (report, error) = match audit_family::<i64>(family, args.max_rank, &options) {
            Ok(r) => (r, None),
            Err(f) => (*f.partial, Some(f.error)),
        };
        if let Some(e) = &error {
            eprintln!("voganscan: audit {family}: {e}");
            code = if is_inconsistency(e) { exit::INCONSISTENT } else { exit::USAGE };
        }
        let line = AuditLine { family, complete: error.is_none(), error: error.map(|e| e.to_string()), report: &report };
        serde_json::to_writer(&mut out, &line)
            .map_err(io::Error::from)
            .and_then(|_| writeln!(out))
            .map_err(|e| Failure::io(args.out.as_deref(), e))?;
        if !quiet {
            eprint!("{}", audit_summary(&report));
        }
    }
    out.flush().map_err(|e| Failure::io(args.out.as_deref(), e))?;
    Ok(code)
}

fn bench(args: BenchArgs, cap: usize) -> Result<i32, Failure> {
    let report = run_bench(args.family, args.rank, args.samples, cap, args.seed)
        .map_err(|e| Failure::usage(e.to_string()))?;
    let mut out = open_output(None)?;
    let written = match args.format {
        BenchFormat::Text => write!(out, "{report}"),
        BenchFormat::Json => serde_json::to_writer(&mut out, &report).map_err(io::Error::from).and_then(|_| writeln!(out)),
    };
    written.and_then(|_| out.flush()).map_err(|e| Failure::io(None, e))?;
    Ok(exit::OK)
}
