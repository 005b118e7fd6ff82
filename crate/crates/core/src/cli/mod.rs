//! Command line front end and trajectory file format.

mod format;
mod number;

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use thiserror::Error;

pub use format::{
    FormatError, MetricsRecord, PoseRecord, SampleRecord, TrajectoryFile, FILE_UNIT_TOLERANCE,
    FORMAT_VERSION,
};
pub use number::format_number;

use crate::algebra::{Quaternion, Vec3};
use crate::conversions::{pose_to_dq, Pose};
use crate::interpolation::{
    sample_trajectory, trajectory_metrics, InterpolationMethod, MethodKind, TrajectoryMetrics,
};

/// Pose arguments whose rotation norm is off by more than this are refused.
pub const POSE_ARG_TOLERANCE: f64 = 1e-3;

pub const DEFAULT_SAMPLES: usize = 101;
pub const DEFAULT_BETA: f64 = 0.5;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid pose `{arg}`: {reason}")]
    InvalidPose { arg: String, reason: String },

    #[error("pose rotation norm {norm} is not within {POSE_ARG_TOLERANCE} of 1")]
    PoseNotUnit { norm: f64 },

    #[error(transparent)]
    Core(#[from] crate::Error),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },

    #[error("writing output: {0}")]
    Output(#[from] io::Error),
}

/// Parses `"px py pz qw qx qy qz"`, renormalizing a nearly-unit rotation.
pub fn parse_pose(arg: &str) -> Result<Pose, CliError> {
    let invalid = |reason: String| CliError::InvalidPose {
        arg: arg.to_owned(),
        reason,
    };
    let values = arg
        .split_whitespace()
        .map(|tok| {
            tok.parse::<f64>()
                .ok()
                .filter(|v| v.is_finite())
                .ok_or_else(|| invalid(format!("`{tok}` is not a finite number")))
        })
        .collect::<Result<Vec<f64>, _>>()?;
    let [px, py, pz, qw, qx, qy, qz] = values[..] else {
        return Err(invalid(format!("expected 7 numbers, found {}", values.len())));
    };
    let q = Quaternion::new(qw, qx, qy, qz);
    let norm = q.norm();
    if (norm - 1.0).abs() > POSE_ARG_TOLERANCE {
        return Err(CliError::PoseNotUnit { norm });
    }
    Ok(Pose {
        rotation: q * (1.0 / norm),
        translation: Vec3::new(px, py, pz),
    })
}

/// Beta recorded in files: the bias for KenLERP, `0` for the other schemes.
fn recorded_beta(method: &InterpolationMethod) -> f64 {
    if method.kind == MethodKind::Kenlerp {
        method.beta
    } else {
        0.0
    }
}

/// A computed trajectory file plus whether the endpoints were a half turn
/// apart (direction picked by tie-break).
#[derive(Debug, Clone, PartialEq)]
pub struct InterpolateReport {
    pub file: TrajectoryFile,
    pub antipodal_ambiguity: bool,
}

/// Builds the trajectory file for one method.
pub fn interpolate_file(
    from: &Pose,
    to: &Pose,
    method: &InterpolationMethod,
    n: usize,
) -> Result<InterpolateReport, CliError> {
    let a = pose_to_dq(from)?;
    let b = pose_to_dq(to)?;
    let trajectory = sample_trajectory(method, &a, &b, n)?;
    let metrics = trajectory_metrics(&trajectory.samples)?;
    Ok(InterpolateReport {
        file: TrajectoryFile::new(method.kind, recorded_beta(method), from, to, &trajectory, &metrics),
        antipodal_ambiguity: trajectory.antipodal_ambiguity,
    })
}

/// Computes one trajectory and writes it to `out`.
pub fn run_interpolate(
    from: &Pose,
    to: &Pose,
    method: &InterpolationMethod,
    n: usize,
    out: &mut impl Write,
) -> Result<InterpolateReport, CliError> {
    let report = interpolate_file(from, to, method, n)?;
    out.write_all(report.file.to_text().as_bytes())?;
    Ok(report)
}

#[derive(Debug, Clone, PartialEq)]
pub struct CompareReport {
    /// One entry per method, in `sep, dlb, sclerp, kenlerp` order.
    pub runs: Vec<InterpolateReport>,
}

impl CompareReport {
    pub fn metrics(&self, kind: MethodKind) -> Option<&MetricsRecord> {
        self.runs
            .iter()
            .find(|r| r.file.method == kind.name())
            .map(|r| &r.file.metrics)
    }

    /// Tab-separated `method x metric` table.
    pub fn summary_table(&self) -> String {
        let mut out =
            String::from("method\tpath_length\ttotal_rotation\tmax_linear_step\tmax_angular_step\n");
        for r in &self.runs {
            let m = &r.file.metrics;
            out.push_str(&format!(
                "{}\t{}\t{}\t{}\t{}\n",
                r.file.method,
                format_number(m.path_length),
                format_number(m.total_rotation),
                format_number(m.max_linear_step),
                format_number(m.max_angular_step),
            ));
        }
        out
    }
}

/// Runs all four methods. Writes `<method>.toml` into `out_dir` when given,
/// and the summary table to `summary`.
pub fn run_compare(
    from: &Pose,
    to: &Pose,
    beta: f64,
    n: usize,
    out_dir: Option<&Path>,
    summary: &mut impl Write,
) -> Result<CompareReport, CliError> {
    let runs = MethodKind::ALL
        .into_iter()
        .map(|kind| interpolate_file(from, to, &InterpolationMethod::new(kind, beta)?, n))
        .collect::<Result<Vec<_>, _>>()?;
    let report = CompareReport { runs };
    if let Some(dir) = out_dir {
        fs::create_dir_all(dir).map_err(|source| CliError::Io {
            path: dir.to_owned(),
            source,
        })?;
        for r in &report.runs {
            let path = dir.join(format!("{}.toml", r.file.method));
            fs::write(&path, r.file.to_text()).map_err(|source| CliError::Io { path, source })?;
        }
    }
    summary.write_all(report.summary_table().as_bytes())?;
    Ok(report)
}

impl From<&MetricsRecord> for TrajectoryMetrics {
    fn from(m: &MetricsRecord) -> Self {
        Self {
            path_length: m.path_length,
            total_rotation: m.total_rotation,
            max_linear_step: m.max_linear_step,
            max_angular_step: m.max_angular_step,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "dqinterp", version, about = "Sample dual-quaternion interpolations between two poses")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Sample one interpolation method and write a trajectory file.
    Interp(InterpArgs),
    /// Run every method and print a metrics table.
    Compare(CompareArgs),
}

#[derive(Debug, Args)]
pub struct Endpoints {
    /// Start pose: "px py pz qw qx qy qz".
    #[arg(long, allow_hyphen_values = true)]
    pub from: String,
    /// End pose: "px py pz qw qx qy qz".
    #[arg(long, allow_hyphen_values = true)]
    pub to: String,
    /// Bias between decoupled (0) and screw (1) motion, used by kenlerp.
    #[arg(long, default_value_t = DEFAULT_BETA, allow_hyphen_values = true)]
    pub beta: f64,
    /// Number of samples, including both endpoints.
    #[arg(long, default_value_t = DEFAULT_SAMPLES)]
    pub samples: usize,
}

#[derive(Debug, Args)]
pub struct InterpArgs {
    #[command(flatten)]
    pub endpoints: Endpoints,
    /// sep, dlb, sclerp or kenlerp.
    #[arg(long)]
    pub method: MethodKind,
    /// Output file; standard output when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CompareArgs {
    #[command(flatten)]
    pub endpoints: Endpoints,
    /// Directory receiving one trajectory file per method.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Executes a parsed command line. Warnings go to `diag`.
pub fn run(cli: &Cli, stdout: &mut impl Write, diag: &mut impl Write) -> Result<(), CliError> {
    match &cli.command {
        Command::Interp(args) => {
            let e = &args.endpoints;
            let from = parse_pose(&e.from)?;
            let to = parse_pose(&e.to)?;
            let method = InterpolationMethod::new(args.method, e.beta)?;
            let report = match &args.out {
                Some(path) => {
                    let mut buf = Vec::new();
                    let report = run_interpolate(&from, &to, &method, e.samples, &mut buf)?;
                    fs::write(path, buf).map_err(|source| CliError::Io {
                        path: path.clone(),
                        source,
                    })?;
                    report
                }
                None => run_interpolate(&from, &to, &method, e.samples, stdout)?,
            };
            if report.antipodal_ambiguity {
                warn_antipodal(diag)?;
            }
        }
        Command::Compare(args) => {
            let e = &args.endpoints;
            let from = parse_pose(&e.from)?;
            let to = parse_pose(&e.to)?;
            let report = run_compare(&from, &to, e.beta, e.samples, args.out.as_deref(), stdout)?;
            if report.runs.iter().any(|r| r.antipodal_ambiguity) {
                warn_antipodal(diag)?;
            }
        }
    }
    Ok(())
}

fn warn_antipodal(diag: &mut impl Write) -> io::Result<()> {
    writeln!(
        diag,
        "warning: endpoint rotations are a half turn apart; direction of travel chosen by tie-break"
    )
}

#[cfg(test)]
mod tests;
