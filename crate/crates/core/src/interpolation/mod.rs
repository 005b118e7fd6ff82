//! Interpolation between two rigid transforms.
//!
//! All pairwise schemes pick the sign of the second endpoint so that
//! interpolation follows the shorter rotation. Endpoints exactly a half turn
//! apart have two shortest paths; the direction is then chosen by
//! [`Quaternion::canonical_sign`](crate::algebra::Quaternion::canonical_sign)
//! applied to the relative rotation's vector part and reported through the
//! `antipodal` flag of the `*_flagged` variants.

mod methods;
mod power;
mod trajectory;

use std::fmt;
use std::str::FromStr;

pub use methods::{
    dlb, dlb_flagged, kenlerp, kenlerp_flagged, sclerp, sclerp_flagged, sep_lerp,
    sep_lerp_flagged, slerp, slerp_flagged, Interpolated, DEFAULT_BETA_MAX,
    DEGENERATE_BLEND_EPSILON,
};
pub use power::{dq_pow, lerp_vec, quat_pow, ANTIPODAL_EPSILON};
pub use trajectory::{
    sample_trajectory, trajectory_metrics, Trajectory, TrajectoryMetrics, TrajectorySample,
};

use crate::algebra::DualQuaternion;
use crate::error::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MethodKind {
    Sep,
    Dlb,
    Sclerp,
    Kenlerp,
}

impl MethodKind {
    pub const ALL: [MethodKind; 4] = [Self::Sep, Self::Dlb, Self::Sclerp, Self::Kenlerp];

    pub fn name(self) -> &'static str {
        match self {
            Self::Sep => "sep",
            Self::Dlb => "dlb",
            Self::Sclerp => "sclerp",
            Self::Kenlerp => "kenlerp",
        }
    }
}

impl fmt::Display for MethodKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownMethod(pub String);

impl fmt::Display for UnknownMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unknown method `{}` (expected sep, dlb, sclerp or kenlerp)", self.0)
    }
}

impl std::error::Error for UnknownMethod {}

impl FromStr for MethodKind {
    type Err = UnknownMethod;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| UnknownMethod(s.to_owned()))
    }
}

/// A scheme plus its bias. `beta` only affects [`MethodKind::Kenlerp`] but
/// is always range-checked against `beta_max`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InterpolationMethod {
    pub kind: MethodKind,
    pub beta: f64,
    pub beta_max: f64,
}

impl InterpolationMethod {
    pub fn new(kind: MethodKind, beta: f64) -> Result<Self> {
        Self::with_beta_max(kind, beta, DEFAULT_BETA_MAX)
    }

    pub fn with_beta_max(kind: MethodKind, beta: f64, beta_max: f64) -> Result<Self> {
        methods::check_beta(beta, beta_max)?;
        Ok(Self {
            kind,
            beta,
            beta_max,
        })
    }

    pub fn evaluate(&self, t: f64, from: &DualQuaternion, to: &DualQuaternion) -> Result<DualQuaternion> {
        Ok(self.evaluate_flagged(t, from, to)?.value)
    }

    pub fn evaluate_flagged(
        &self,
        t: f64,
        from: &DualQuaternion,
        to: &DualQuaternion,
    ) -> Result<Interpolated<DualQuaternion>> {
        match self.kind {
            MethodKind::Sep => sep_lerp_flagged(t, from, to),
            MethodKind::Dlb => dlb_flagged(t, from, to),
            MethodKind::Sclerp => sclerp_flagged(t, from, to),
            MethodKind::Kenlerp => kenlerp_flagged(t, self.beta, self.beta_max, from, to),
        }
    }
}
