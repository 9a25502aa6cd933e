//! Machine-readable reports: the certificate written by `partition` and
//! checked by `certify`, and the summary printed by `analyze`.
//!
//! The certificate layout is described by
//! `schema/certificate-report.schema.json`.

use serde::{Deserialize, Serialize};

use crate::analysis::{bessel_report, separation_report};
use crate::error::{FrameError, Result};
use crate::linalg::{gram, UnitVectorSequence};
use crate::partition::{certify_block, level_target, BlockCertificate, Partition, PartitionCertificate, PartitionMode};
use crate::scalar::Field;

pub const REPORT_SCHEMA: &str = "frame-partition/certificate-report";
pub const REPORT_SCHEMA_VERSION: u32 = 1;
/// Default tolerance when re-checking report values.
pub const REPORT_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GlobalBounds {
    pub spectral_b: f64,
    pub schur_b: f64,
    /// The constant used for the level count (computed or overridden).
    pub global_b: f64,
    pub bessel_override: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BlockReport {
    pub indices: Vec<usize>,
    pub sigma: f64,
    pub eta: f64,
    pub gamma: f64,
    pub lambda_min: f64,
    pub lambda_max: f64,
    /// Guaranteed Riesz bounds `1 ∓ σ`; meaningful only when `sigma < 1`.
    pub a_bound: f64,
    pub b_bound: f64,
    pub certified: bool,
    pub borderline: bool,
    pub label: String,
}

impl From<&BlockCertificate<f64>> for BlockReport {
    fn from(b: &BlockCertificate<f64>) -> Self {
        Self {
            indices: b.indices.clone(),
            sigma: b.sigma,
            eta: b.eta,
            gamma: b.gamma,
            lambda_min: b.riesz.lambda_min,
            lambda_max: b.riesz.lambda_max,
            a_bound: b.riesz.a_bound,
            b_bound: b.riesz.b_bound,
            certified: b.certified,
            borderline: b.borderline,
            label: b.riesz.label().to_owned(),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Timings {
    pub total_ms: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CertificateReport {
    pub schema: String,
    pub schema_version: u32,
    pub tool_version: String,
    pub input_digest: String,
    pub mode: PartitionMode,
    pub n: usize,
    pub dim: usize,
    pub field: Field,
    pub bounds: GlobalBounds,
    pub levels: usize,
    pub levels_borderline: bool,
    pub target: f64,
    pub blocks: Vec<BlockReport>,
    pub all_certified: bool,
    pub timings: Timings,
}

impl CertificateReport {
    pub fn new(
        seq: &UnitVectorSequence<f64>,
        input_digest: String,
        cert: &PartitionCertificate<f64>,
        bessel_override: bool,
        timings: Timings,
    ) -> Self {
        Self {
            schema: REPORT_SCHEMA.into(),
            schema_version: REPORT_SCHEMA_VERSION,
            tool_version: env!("CARGO_PKG_VERSION").into(),
            input_digest,
            mode: cert.mode,
            n: seq.len(),
            dim: seq.dim(),
            field: seq.field(),
            bounds: GlobalBounds {
                spectral_b: cert.spectral_b,
                schur_b: cert.schur_b,
                global_b: cert.global_b,
                bessel_override,
            },
            levels: cert.partition.levels,
            levels_borderline: cert.levels_borderline,
            target: cert.target,
            blocks: cert.per_block.iter().map(BlockReport::from).collect(),
            all_certified: cert.all_certified,
            timings,
        }
    }

    /// Copy with timings cleared, for run-to-run comparisons.
    pub fn without_timings(&self) -> Self {
        Self {
            timings: Timings::default(),
            ..self.clone()
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> std::result::Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    /// The partition recorded in the report, validated against `n`.
    pub fn partition(&self) -> Result<Partition> {
        Partition::new(
            self.n,
            self.blocks.iter().map(|b| b.indices.clone()).collect(),
            self.levels,
        )
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BlockVerdict {
    pub block: usize,
    pub pass: bool,
    pub reasons: Vec<String>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CertifyOutcome {
    /// Global bound mismatches, if any.
    pub global_reasons: Vec<String>,
    pub blocks: Vec<BlockVerdict>,
}

impl CertifyOutcome {
    pub fn all_pass(&self) -> bool {
        self.global_reasons.is_empty() && self.blocks.iter().all(|b| b.pass)
    }
}

/// Recomputes every reported quantity from `seq` and compares with
/// absolute tolerance `tol`. A block passes when its values match and it
/// is certified for the report's mode with its functional at most
/// `target + tol`.
///
/// Fails with an error (rather than a verdict) when the report's indices do
/// not form a partition of `seq`.
pub fn certify_report(seq: &UnitVectorSequence<f64>, report: &CertificateReport, tol: f64) -> Result<CertifyOutcome> {
    if report.n != seq.len() {
        return Err(FrameError::DimensionError {
            expected: seq.len(),
            found: report.n,
        });
    }
    let partition = report.partition()?;
    let g = gram(seq);
    let bessel = bessel_report(&g)?;

    let mut global_reasons = Vec::new();
    let compare = |reasons: &mut Vec<String>, name: &str, reported: f64, actual: f64| {
        let diff = (reported - actual).abs();
        if diff.is_nan() || diff > tol {
            reasons.push(format!("{name}: reported {reported:e}, recomputed {actual:e}"));
        }
    };
    compare(
        &mut global_reasons,
        "spectral_b",
        report.bounds.spectral_b,
        bessel.spectral_bound,
    );
    compare(
        &mut global_reasons,
        "schur_b",
        report.bounds.schur_b,
        bessel.schur_bound,
    );
    let computed_b = match report.mode {
        PartitionMode::Feichtinger => bessel.schur_bound,
        PartitionMode::Uniform => bessel.spectral_bound,
    };
    if report.bounds.global_b < computed_b - tol {
        global_reasons.push(format!(
            "global_b {} below computed bound {computed_b}",
            report.bounds.global_b
        ));
    }
    let target = level_target(report.bounds.global_b.max(1.0), report.levels);
    compare(&mut global_reasons, "target", report.target, target);

    let mut blocks = Vec::with_capacity(partition.blocks.len());
    for (k, (block, rep)) in partition.blocks.iter().zip(&report.blocks).enumerate() {
        let actual = certify_block(&g, block, report.mode)?;
        let mut reasons = Vec::new();
        compare(&mut reasons, "sigma", rep.sigma, actual.sigma);
        compare(&mut reasons, "eta", rep.eta, actual.eta);
        compare(&mut reasons, "gamma", rep.gamma, actual.gamma);
        compare(&mut reasons, "lambda_min", rep.lambda_min, actual.riesz.lambda_min);
        compare(&mut reasons, "lambda_max", rep.lambda_max, actual.riesz.lambda_max);
        if rep.certified != actual.certified {
            reasons.push(format!(
                "certified flag {} but recomputed {}",
                rep.certified, actual.certified
            ));
        }
        let value = match report.mode {
            PartitionMode::Feichtinger => actual.sigma,
            PartitionMode::Uniform => actual.eta,
        };
        if !actual.certified {
            reasons.push(format!("{} = {value} is not below 1", mode_functional(report.mode)));
        } else if value > target + tol {
            reasons.push(format!(
                "{} = {value} exceeds target {target}",
                mode_functional(report.mode)
            ));
        }
        blocks.push(BlockVerdict {
            block: k,
            pass: reasons.is_empty(),
            reasons,
        });
    }
    Ok(CertifyOutcome { global_reasons, blocks })
}

fn mode_functional(mode: PartitionMode) -> &'static str {
    match mode {
        PartitionMode::Feichtinger => "sigma",
        PartitionMode::Uniform => "eta",
    }
}

/// Whole-sequence summary printed by `analyze`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnalyzeReport {
    pub input_digest: String,
    pub n: usize,
    pub dim: usize,
    pub field: Field,
    pub spectral_b: f64,
    pub schur_b: f64,
    pub sigma: f64,
    pub eta: f64,
    pub gamma: f64,
    pub lambda_min: f64,
    pub riesz_certified: bool,
}

impl AnalyzeReport {
    pub fn compute(seq: &UnitVectorSequence<f64>, input_digest: String) -> Result<Self> {
        let g = gram(seq);
        let all: Vec<usize> = (0..seq.len()).collect();
        let bessel = bessel_report(&g)?;
        let sep = separation_report(&g, &all)?;
        let lambda_min = g.eigenvalues()?[0];
        Ok(Self {
            input_digest,
            n: seq.len(),
            dim: seq.dim(),
            field: seq.field(),
            spectral_b: bessel.spectral_bound,
            schur_b: bessel.schur_bound,
            sigma: sep.sigma,
            eta: sep.eta,
            gamma: sep.gamma,
            lambda_min,
            riesz_certified: sep.sigma < 1.0,
        })
    }

    pub fn to_text(&self) -> String {
        format!(
            "n = {}\ndim = {}\nfield = {}\nspectral_B = {:?}\nschur_B = {:?}\nsigma = {:?}\neta = {:?}\ngamma = {:?}\nlambda_min = {:?}\nriesz_certified = {}\n",
            self.n,
            self.dim,
            self.field,
            self.spectral_b,
            self.schur_b,
            self.sigma,
            self.eta,
            self.gamma,
            self.lambda_min,
            self.riesz_certified
        )
    }
}
