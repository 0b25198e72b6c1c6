//! `fubini`: exact and modular Fubini-family numbers from the command line.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error, 3 domain
//! error, 4 periodicity bound violated (an internal bug).

mod record;
mod render;
mod verify;

use std::fmt::Write as _;
use std::io::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use fubini_core::number_theory::mul_mod;
use fubini_core::periodicity::{analyze, fubini_mod_sequence, fubini_r_mod_sequence};
use fubini_core::sequences::{
    factorials, fubini, fubini_r_sequence, horse_r, horse_r_sequence, BigSequence,
};
use fubini_core::{BigInt, Error as CoreError, SequenceId, StirlingKind};
use serde_json::Value;

use record::{num, OutputRecord};
use verify::Suite;

#[derive(Parser, Debug)]
#[command(
    name = "fubini",
    version,
    about = "Fubini, r-Fubini and r-horse numbers, exact and modulo K"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute one value, exactly or modulo K.
    Compute(ComputeArgs),
    /// Measure the eventual period of F(n) or F_r(n) modulo K.
    Period(PeriodArgs),
    /// Run a verification suite against the brute-force oracles.
    Verify(VerifyArgs),
    /// Render a Stirling triangle modulo m as ASCII or PBM.
    Render(RenderArgs),
    /// Emit a table of values.
    Table(TableArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SeqArg {
    Factorial,
    Fubini,
    #[value(name = "fubini_r", alias = "fubini-r")]
    FubiniR,
    #[value(alias = "horse_r", alias = "horse-r")]
    Horse,
}

#[derive(Args, Debug)]
struct ComputeArgs {
    #[arg(long, value_enum)]
    seq: SeqArg,
    #[arg(long)]
    n: usize,
    /// Number of marked elements; required for fubini_r and horse.
    #[arg(long)]
    r: Option<usize>,
    /// Reduce the result modulo this value.
    #[arg(long = "mod")]
    modulus: Option<u64>,
}

#[derive(Args, Debug)]
struct PeriodArgs {
    #[arg(long = "mod")]
    modulus: u64,
    /// Analyze F_r instead of F.
    #[arg(long, default_value_t = 0)]
    r: usize,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long, value_enum, default_value = "all")]
    suite: Suite,
    /// Override the suite's size limit.
    #[arg(long)]
    limit: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum MatrixArg {
    #[value(name = "first_signed", alias = "first-signed", alias = "first")]
    FirstSigned,
    Second,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum RenderFormat {
    Ascii,
    Pbm,
}

#[derive(Args, Debug)]
struct RenderArgs {
    #[arg(long, value_enum)]
    matrix: MatrixArg,
    #[arg(long = "mod")]
    modulus: u64,
    #[arg(long)]
    size: usize,
    #[arg(long, value_enum, default_value = "ascii")]
    format: RenderFormat,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Json,
    Csv,
}

#[derive(Args, Debug)]
struct TableArgs {
    #[arg(long, value_enum)]
    seq: SeqArg,
    #[arg(long = "n-max", alias = "n_max")]
    n_max: usize,
    #[arg(long)]
    r: Option<usize>,
    #[arg(long, value_enum, default_value = "json")]
    format: TableFormat,
}

enum Failure {
    Usage(String),
    Domain(String),
    Bound(String),
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Domain(_) => 3,
            Failure::Bound(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Domain(m) | Failure::Bound(m) => m,
        }
    }
}

impl From<CoreError> for Failure {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::BoundViolation { .. } | CoreError::ExactPeriodViolation { .. } => {
                Failure::Bound(format!(
                    "periodicity bound violated: {e}; this is a bug, please file an issue with the command line used"
                ))
            }
            other => Failure::Domain(other.to_string()),
        }
    }
}

/// What a command produced: text for standard output and whether every
/// check passed.
struct Output {
    text: String,
    ok: bool,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, ok: true }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match dispatch(cli.command) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(out.text.as_bytes()).is_err() {
                return ExitCode::from(1);
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(failure) => {
            eprintln!("fubini: {}", failure.message());
            ExitCode::from(failure.exit_code())
        }
    }
}

fn dispatch(command: Command) -> Result<Output, Failure> {
    match command {
        Command::Compute(args) => compute(args).map(|r| Output::ok(r.render())),
        Command::Period(args) => period(args).map(|r| Output::ok(r.render())),
        Command::Verify(args) => Ok(run_verify(args)),
        Command::Render(args) => render_matrix(args).map(Output::ok),
        Command::Table(args) => table(args).map(Output::ok),
    }
}

fn seq_name(seq: SeqArg) -> &'static str {
    match seq {
        SeqArg::Factorial => "factorial",
        SeqArg::Fubini => "fubini",
        SeqArg::FubiniR => "fubini_r",
        SeqArg::Horse => "horse",
    }
}

fn required_rank(seq: SeqArg, r: Option<usize>) -> Result<Option<usize>, Failure> {
    match (seq, r) {
        (SeqArg::FubiniR | SeqArg::Horse, None) => Err(Failure::Usage(format!(
            "--r is required for --seq {}",
            seq_name(seq)
        ))),
        (SeqArg::Factorial | SeqArg::Fubini, Some(_)) => Err(Failure::Usage(format!(
            "--r does not apply to --seq {}",
            seq_name(seq)
        ))),
        (_, r) => Ok(r),
    }
}

fn compute(args: ComputeArgs) -> Result<OutputRecord, Failure> {
    let r = required_rank(args.seq, args.r)?;
    let n = args.n;
    if let Some(r) = r {
        if n < r {
            return Err(CoreError::IndexBelowRank { n, r }.into());
        }
    }
    let mut record = OutputRecord::new("compute")
        .input("sequence", seq_name(args.seq))
        .input("n", num(n));
    if let Some(r) = r {
        record = record.input("r", num(r));
    }
    let value = match args.modulus {
        None => num(exact_value(args.seq, n, r)?),
        Some(0) => return Err(CoreError::ZeroModulus.into()),
        Some(modulus) => {
            record = record.input("modulus", num(modulus));
            num(residue_value(args.seq, n, r, modulus)?)
        }
    };
    Ok(record.result("value", value))
}

fn exact_value(seq: SeqArg, n: usize, r: Option<usize>) -> Result<BigInt, Failure> {
    let value = match seq {
        SeqArg::Factorial => factorials(n + 1).values()[n].clone(),
        SeqArg::Fubini => fubini(n + 1).values()[n].clone(),
        SeqArg::FubiniR => fubini_core::sequences::fubini_r(n, r.unwrap_or(0))?,
        SeqArg::Horse => horse_r(n, r.unwrap_or(0))?,
    };
    Ok(value)
}

fn residue_value(seq: SeqArg, n: usize, r: Option<usize>, modulus: u64) -> Result<u64, Failure> {
    let value = match seq {
        SeqArg::Factorial => {
            (1..=n as u64).fold(1 % modulus, |acc, k| mul_mod(acc, k % modulus, modulus))
        }
        SeqArg::Fubini => fubini_mod_sequence(modulus, n + 1)?[n],
        SeqArg::FubiniR => {
            let r = r.unwrap_or(0);
            fubini_r_mod_sequence(modulus, r, n + 1)?[n - r]
        }
        // r! has no inverse modulo a general K, so reduce the exact value
        SeqArg::Horse => {
            let exact = horse_r(n, r.unwrap_or(0))?;
            u64::try_from(exact % BigInt::from(modulus)).expect("residue fits in u64")
        }
    };
    Ok(value)
}

fn period(args: PeriodArgs) -> Result<OutputRecord, Failure> {
    let report = analyze(args.modulus, args.r)?;
    let sequence = match report.sequence {
        SequenceId::FubiniR(_) => "fubini_r",
        _ => "fubini",
    };
    Ok(OutputRecord::new("period")
        .input("modulus", num(args.modulus))
        .input("r", num(args.r))
        .result("modulus", num(report.modulus))
        .result("sequence", sequence)
        .result("r", num(args.r))
        .result("onset", num(report.onset))
        .result("period", num(report.period))
        .result("carmichael", num(report.carmichael))
        .result("max_exponent", num(report.max_exponent))
        .result("onset_bound", num(report.onset_bound))
        .result("window", num(report.window))
        .result(
            "period_divides_carmichael",
            report.period_divides_carmichael,
        )
        .result("onset_within_bound", report.onset_within_bound))
}

fn run_verify(args: VerifyArgs) -> Output {
    let results = verify::run(args.suite, args.limit);
    let passed = results.iter().filter(|c| c.passed).count();
    let failed = results.len() - passed;
    let checks: Vec<Value> = results
        .iter()
        .map(|c| {
            serde_json::json!({
                "name": c.name,
                "passed": c.passed,
                "cases": num(c.cases),
                "detail": c.detail,
            })
        })
        .collect();
    let mut record = OutputRecord::new("verify").input("suite", args.suite.name());
    if let Some(limit) = args.limit {
        record = record.input("limit", num(limit));
    }
    let record = record
        .result("checks", Value::Array(checks))
        .result("passed", num(passed))
        .result("failed", num(failed))
        .result("all_passed", failed == 0);
    Output {
        text: record.render(),
        ok: failed == 0,
    }
}

fn render_matrix(args: RenderArgs) -> Result<String, Failure> {
    if args.modulus < 2 {
        return Err(CoreError::ModulusTooSmall {
            modulus: args.modulus,
            min: 2,
        }
        .into());
    }
    if args.size == 0 || args.size > render::MAX_SIZE {
        return Err(Failure::Domain(format!(
            "size {} outside 1..={}",
            args.size,
            render::MAX_SIZE
        )));
    }
    let kind = match args.matrix {
        MatrixArg::FirstSigned => StirlingKind::FirstSigned,
        MatrixArg::Second => StirlingKind::Second,
    };
    Ok(match args.format {
        RenderFormat::Ascii => render::ascii(kind, args.modulus, args.size),
        RenderFormat::Pbm => render::pbm(kind, args.modulus, args.size),
    })
}

fn table(args: TableArgs) -> Result<String, Failure> {
    let r = required_rank(args.seq, args.r)?;
    if let Some(r) = r {
        if args.n_max < r {
            return Err(CoreError::IndexBelowRank { n: args.n_max, r }.into());
        }
    }
    let len = args.n_max + 1;
    let seq: BigSequence = match args.seq {
        SeqArg::Factorial => factorials(len),
        SeqArg::Fubini => fubini(len),
        SeqArg::FubiniR => fubini_r_sequence(r.unwrap_or(0), len),
        SeqArg::Horse => horse_r_sequence(r.unwrap_or(0), len),
    };
    Ok(match args.format {
        TableFormat::Csv => {
            let mut out = String::from("n,value\n");
            for (n, v) in seq.iter() {
                let _ = writeln!(out, "{n},{v}");
            }
            out
        }
        TableFormat::Json => {
            let rows: Vec<Value> = seq
                .iter()
                .map(|(n, v)| serde_json::json!({ "n": num(n), "value": num(v) }))
                .collect();
            let mut record = OutputRecord::new("table")
                .input("sequence", seq_name(args.seq))
                .input("n_max", num(args.n_max));
            if let Some(r) = r {
                record = record.input("r", num(r));
            }
            record.result("rows", Value::Array(rows)).render()
        }
    })
}
