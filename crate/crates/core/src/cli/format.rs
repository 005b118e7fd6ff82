//! The trajectory file: a line-oriented TOML document.
//!
//! ```text
//! version = 1
//! method = "sclerp"
//! beta = 0.0
//!
//! [from]
//! pos = [0.0, 0.0, 0.0]
//! rot = [1.0, 0.0, 0.0, 0.0]
//!
//! [to]
//! ...
//!
//! [[samples]]
//! t = 0.0
//! pos = [x, y, z]
//! rot = [w, x, y, z]
//! ...
//!
//! [metrics]
//! path_length = ...
//! total_rotation = ...
//! max_linear_step = ...
//! max_angular_step = ...
//! ```
//!
//! Numbers use [`format_number`](super::number::format_number), so identical
//! trajectories always serialize to identical bytes.

use std::fmt::Write as _;

use serde::Deserialize;
use thiserror::Error;

use super::number::{format_list, format_number};
use crate::conversions::Pose;
use crate::interpolation::{MethodKind, Trajectory, TrajectoryMetrics};

pub const FORMAT_VERSION: u32 = 1;

/// Tolerance on `|rot| = 1` accepted when reading a file.
pub const FILE_UNIT_TOLERANCE: f64 = 1e-6;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("malformed trajectory file: {0}")]
    Syntax(#[from] toml::de::Error),
    #[error("invalid trajectory file: {0}")]
    Invalid(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PoseRecord {
    pub pos: [f64; 3],
    pub rot: [f64; 4],
}

impl From<&Pose> for PoseRecord {
    fn from(p: &Pose) -> Self {
        Self {
            pos: p.translation.to_array(),
            rot: p.rotation.to_array(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SampleRecord {
    pub t: f64,
    pub pos: [f64; 3],
    pub rot: [f64; 4],
}

#[derive(Debug, Clone, Copy, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MetricsRecord {
    pub path_length: f64,
    pub total_rotation: f64,
    pub max_linear_step: f64,
    pub max_angular_step: f64,
}

impl From<&TrajectoryMetrics> for MetricsRecord {
    fn from(m: &TrajectoryMetrics) -> Self {
        Self {
            path_length: m.path_length,
            total_rotation: m.total_rotation,
            max_linear_step: m.max_linear_step,
            max_angular_step: m.max_angular_step,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TrajectoryFile {
    pub version: u32,
    pub method: String,
    pub beta: f64,
    pub from: PoseRecord,
    pub to: PoseRecord,
    pub samples: Vec<SampleRecord>,
    pub metrics: MetricsRecord,
}

impl TrajectoryFile {
    pub fn new(
        method: MethodKind,
        beta: f64,
        from: &Pose,
        to: &Pose,
        trajectory: &Trajectory,
        metrics: &TrajectoryMetrics,
    ) -> Self {
        Self {
            version: FORMAT_VERSION,
            method: method.name().to_owned(),
            beta,
            from: from.into(),
            to: to.into(),
            samples: trajectory
                .samples
                .iter()
                .map(|s| SampleRecord {
                    t: s.t,
                    pos: s.pose.translation.to_array(),
                    rot: s.pose.rotation.to_array(),
                })
                .collect(),
            metrics: metrics.into(),
        }
    }

    /// Parses and validates a file.
    pub fn parse(text: &str) -> Result<Self, FormatError> {
        let file: Self = toml::from_str(text)?;
        file.validate()?;
        Ok(file)
    }

    /// Checks the invariants every emitted file satisfies.
    pub fn validate(&self) -> Result<(), FormatError> {
        let invalid = |msg: String| Err(FormatError::Invalid(msg));
        if self.version != FORMAT_VERSION {
            return invalid(format!("unsupported version {}", self.version));
        }
        if self.method.parse::<MethodKind>().is_err() {
            return invalid(format!("unknown method `{}`", self.method));
        }
        if !self.beta.is_finite() || self.beta < 0.0 {
            return invalid(format!("beta {} is not a finite nonnegative number", self.beta));
        }
        check_pose("from", &self.from.pos, &self.from.rot)?;
        check_pose("to", &self.to.pos, &self.to.rot)?;
        if self.samples.len() < 2 {
            return invalid(format!("{} samples, need at least 2", self.samples.len()));
        }
        let mut prev = f64::NEG_INFINITY;
        for (i, s) in self.samples.iter().enumerate() {
            if !(0.0..=1.0).contains(&s.t) {
                return invalid(format!("sample {i}: t = {} outside [0, 1]", s.t));
            }
            if s.t <= prev {
                return invalid(format!("sample {i}: t = {} not strictly ascending", s.t));
            }
            prev = s.t;
            check_pose(&format!("sample {i}"), &s.pos, &s.rot)?;
        }
        let m = &self.metrics;
        for (name, v) in [
            ("path_length", m.path_length),
            ("total_rotation", m.total_rotation),
            ("max_linear_step", m.max_linear_step),
            ("max_angular_step", m.max_angular_step),
        ] {
            if !v.is_finite() || v < 0.0 {
                return invalid(format!("metric {name} = {v} is not a finite nonnegative number"));
            }
        }
        Ok(())
    }

    /// Canonical text form.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        // Writing to a String cannot fail.
        let _ = self.write_text(&mut out);
        out
    }

    fn write_text(&self, out: &mut String) -> std::fmt::Result {
        writeln!(out, "version = {}", self.version)?;
        writeln!(out, "method = \"{}\"", self.method)?;
        writeln!(out, "beta = {}", format_number(self.beta))?;
        for (name, p) in [("from", &self.from), ("to", &self.to)] {
            writeln!(out)?;
            writeln!(out, "[{name}]")?;
            writeln!(out, "pos = {}", format_list(&p.pos))?;
            writeln!(out, "rot = {}", format_list(&p.rot))?;
        }
        for s in &self.samples {
            writeln!(out)?;
            writeln!(out, "[[samples]]")?;
            writeln!(out, "t = {}", format_number(s.t))?;
            writeln!(out, "pos = {}", format_list(&s.pos))?;
            writeln!(out, "rot = {}", format_list(&s.rot))?;
        }
        let m = &self.metrics;
        writeln!(out)?;
        writeln!(out, "[metrics]")?;
        writeln!(out, "path_length = {}", format_number(m.path_length))?;
        writeln!(out, "total_rotation = {}", format_number(m.total_rotation))?;
        writeln!(out, "max_linear_step = {}", format_number(m.max_linear_step))?;
        writeln!(out, "max_angular_step = {}", format_number(m.max_angular_step))
    }
}

fn check_pose(what: &str, pos: &[f64; 3], rot: &[f64; 4]) -> Result<(), FormatError> {
    if pos.iter().chain(rot).any(|v| !v.is_finite()) {
        return Err(FormatError::Invalid(format!("{what}: non-finite component")));
    }
    let norm = rot.iter().map(|v| v * v).sum::<f64>().sqrt();
    if (norm - 1.0).abs() > FILE_UNIT_TOLERANCE {
        return Err(FormatError::Invalid(format!(
            "{what}: rotation norm {norm} is not unit"
        )));
    }
    Ok(())
}
