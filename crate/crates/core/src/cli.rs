//! `frame-partition` command-line front end.
//!
//! Exit codes: 0 success/certified, 2 usage or format error, 3 IO error,
//! 4 norm violation, 5 uncertified block.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use crate::error::FrameError;
use crate::generators::{generate, GeneratorKind, GeneratorSpec};
use crate::io::{
    certify_report, read_vector_file, write_vector_file, AnalyzeReport, CertificateReport, FileFormat, FormatError,
    Timings, VectorData, REPORT_TOL,
};
use crate::linalg::UnitVectorSequence;
use crate::partition::{partition_sequence, PartitionMode, PartitionOptions};
use crate::scalar::Field;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_IO: i32 = 3;
pub const EXIT_NORM: i32 = 4;
pub const EXIT_UNCERTIFIED: i32 = 5;

/// Environment variable capping parallel certification threads.
pub const THREADS_ENV: &str = "FRAME_PARTITION_THREADS";

#[derive(Debug, Parser)]
#[command(
    name = "frame-partition",
    version,
    about = "Riesz certificates and partitions of unit-vector systems"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write a generated vector set.
    Generate(GenerateArgs),
    /// Print Bessel bounds and σ, η, γ for a whole vector set.
    Analyze(AnalyzeArgs),
    /// Partition into certified blocks and write a certificate report.
    Partition(PartitionArgs),
    /// Independently re-check a certificate report against its input.
    Certify(CertifyArgs),
}

#[derive(Debug, Args)]
struct GenerateArgs {
    #[arg(long)]
    kind: GeneratorKind,
    #[arg(long)]
    dim: usize,
    #[arg(long)]
    count: usize,
    /// Radians, for angle_pair and basis_union.
    #[arg(long, default_value_t = 0.0)]
    angle: f64,
    /// Copies of e₁ for `duplicates` (defaults to --count).
    #[arg(long)]
    multiplicity: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// real|complex (harmonic defaults to complex).
    #[arg(long)]
    field: Option<Field>,
    /// Output format; inferred from the extension when omitted.
    #[arg(long)]
    format: Option<String>,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct InputArgs {
    input: PathBuf,
    /// Rescale every vector to unit norm instead of rejecting non-unit input.
    #[arg(long)]
    renormalize: bool,
}

#[derive(Debug, Args)]
struct AnalyzeArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Args)]
struct PartitionArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, default_value = "feichtinger")]
    mode: PartitionMode,
    /// Use this Bessel constant instead of the computed one (must be ≥ it).
    #[arg(long)]
    bessel_override: Option<f64>,
    /// Thread cap; overrides FRAME_PARTITION_THREADS.
    #[arg(long)]
    threads: Option<usize>,
    #[arg(short, long)]
    output: Option<PathBuf>,
    /// Print the summary as JSON.
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Args)]
struct CertifyArgs {
    #[command(flatten)]
    input: InputArgs,
    report: PathBuf,
    #[arg(long, default_value_t = REPORT_TOL)]
    tol: f64,
    /// Check even when the report's digest does not match the input.
    #[arg(long)]
    force: bool,
    #[arg(long)]
    threads: Option<usize>,
}

#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    fn io(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_IO,
            message: message.into(),
        }
    }
}

impl From<FormatError> for Failure {
    fn from(e: FormatError) -> Self {
        match e {
            FormatError::Io(e) => Failure::io(e.to_string()),
            FormatError::Malformed(_) => Failure::usage(e.to_string()),
        }
    }
}

impl From<FrameError> for Failure {
    fn from(e: FrameError) -> Self {
        match e {
            FrameError::NormViolation(_) => Failure {
                code: EXIT_NORM,
                message: e.to_string(),
            },
            _ => Failure::usage(e.to_string()),
        }
    }
}

/// Parses `args` (including the program name) and runs the command,
/// writing to the given streams. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if e.use_stderr() {
                write!(err, "{e}")
            } else {
                write!(out, "{e}")
            };
            return code;
        }
    };
    let result = match cli.cmd {
        Command::Generate(a) => cmd_generate(a, out),
        Command::Analyze(a) => cmd_analyze(a, out),
        Command::Partition(a) => cmd_partition(a, out),
        Command::Certify(a) => cmd_certify(a, out),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn env_threads() -> Result<Option<usize>, Failure> {
    match std::env::var(THREADS_ENV) {
        Ok(v) if !v.trim().is_empty() => v
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|&t| t > 0)
            .map(Some)
            .ok_or_else(|| Failure::usage(format!("{THREADS_ENV} must be a positive integer, got `{v}`"))),
        _ => Ok(None),
    }
}

fn load(input: &InputArgs) -> Result<(UnitVectorSequence<f64>, String), Failure> {
    let data = read_vector_file(&input.input)?;
    let digest = data.digest();
    Ok((data.into_sequence(input.renormalize)?, digest))
}

fn write_or_print(path: Option<&Path>, text: &str, out: &mut dyn Write) -> Result<(), Failure> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| Failure::io(format!("{}: {e}", p.display()))),
        None => out.write_all(text.as_bytes()).map_err(|e| Failure::io(e.to_string())),
    }
}

fn cmd_generate(a: GenerateArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let mut spec = GeneratorSpec::new(a.kind, a.dim, a.count)
        .with_angle(a.angle)
        .with_seed(a.seed)
        .with_multiplicity(a.multiplicity.unwrap_or(a.count));
    if let Some(f) = a.field {
        spec = spec.with_field(f);
    }
    let seq = generate::<f64>(&spec)?;
    let data = VectorData::from_sequence(&seq);
    let format = match a.format.as_deref() {
        Some("json") => FileFormat::Json,
        Some("csv") => FileFormat::Csv,
        Some(other) => return Err(Failure::usage(format!("unknown format `{other}`"))),
        None => a.output.as_deref().map_or(FileFormat::Json, FileFormat::from_path),
    };
    match &a.output {
        Some(path) => write_vector_file(path, &data, format)?,
        None => {
            let text = match format {
                FileFormat::Json => crate::io::to_json(&data),
                FileFormat::Csv => crate::io::to_csv(&data),
            };
            write_or_print(None, &text, out)?;
        }
    }
    Ok(EXIT_OK)
}

fn cmd_analyze(a: AnalyzeArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let (seq, digest) = load(&a.input)?;
    let report = AnalyzeReport::compute(&seq, digest)?;
    let text = if a.json {
        serde_json::to_string_pretty(&report).expect("analyze report serializes") + "\n"
    } else {
        report.to_text()
    };
    write_or_print(None, &text, out)?;
    Ok(EXIT_OK)
}

fn cmd_partition(a: PartitionArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let started = Instant::now();
    let (seq, digest) = load(&a.input)?;
    let threads = match a.threads {
        Some(t) => Some(t),
        None => env_threads()?,
    };
    if let Some(b) = a.bessel_override {
        if !b.is_finite() {
            return Err(Failure::usage("--bessel-override must be finite"));
        }
    }
    let opts = PartitionOptions {
        bessel_override: a.bessel_override,
        threads,
    };
    let cert = partition_sequence(&seq, a.mode, &opts)?;
    let timings = Timings {
        total_ms: started.elapsed().as_secs_f64() * 1e3,
    };
    let report = CertificateReport::new(&seq, digest, &cert, a.bessel_override.is_some(), timings);
    let json = report.to_json();
    match &a.output {
        Some(path) => {
            write_or_print(Some(path), &json, out)?;
            let summary = if a.json {
                serde_json::json!({
                    "mode": report.mode,
                    "levels": report.levels,
                    "blocks": report.blocks.len(),
                    "all_certified": report.all_certified,
                })
                .to_string()
                    + "\n"
            } else {
                format!(
                    "mode = {}\nB = {:?}\nlevels = {}\ntarget = {:?}\nblocks = {}\nall_certified = {}\n",
                    report.mode.as_str(),
                    report.bounds.global_b,
                    report.levels,
                    report.target,
                    report.blocks.len(),
                    report.all_certified
                )
            };
            write_or_print(None, &summary, out)?;
        }
        None => write_or_print(None, &json, out)?,
    }
    Ok(if report.all_certified {
        EXIT_OK
    } else {
        EXIT_UNCERTIFIED
    })
}

fn cmd_certify(a: CertifyArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    if a.tol.is_nan() || a.tol < 0.0 {
        return Err(Failure::usage("--tol must be nonnegative"));
    }
    let (seq, digest) = load(&a.input)?;
    let text = std::fs::read_to_string(&a.report).map_err(|e| Failure::io(format!("{}: {e}", a.report.display())))?;
    let report = CertificateReport::from_json(&text).map_err(|e| Failure::usage(format!("malformed report: {e}")))?;
    if report.input_digest != digest && !a.force {
        return Err(Failure::usage(format!(
            "report digest {} does not match input digest {digest} (use --force to check anyway)",
            report.input_digest
        )));
    }
    let threads = match a.threads {
        Some(t) => Some(t),
        None => env_threads()?,
    };
    let outcome = crate::partition::with_threads(threads, || certify_report(&seq, &report, a.tol))?;
    let mut lines = String::new();
    for r in &outcome.global_reasons {
        lines += &format!("global: FAIL ({r})\n");
    }
    for v in &outcome.blocks {
        if v.pass {
            lines += &format!("block {}: PASS\n", v.block);
        } else {
            lines += &format!("block {}: FAIL ({})\n", v.block, v.reasons.join("; "));
        }
    }
    lines += if outcome.all_pass() {
        "verdict: PASS\n"
    } else {
        "verdict: FAIL\n"
    };
    write_or_print(None, &lines, out)?;
    Ok(if outcome.all_pass() { EXIT_OK } else { EXIT_UNCERTIFIED })
}
