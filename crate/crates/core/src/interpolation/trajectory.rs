use crate::algebra::DualQuaternion;
use crate::conversions::{dq_to_pose, Pose};
use crate::error::{Error, Result};

use super::InterpolationMethod;

/// One evaluated point of a trajectory. `dq` is sign-canonical and encodes
/// the same transform as `pose`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrajectorySample {
    pub t: f64,
    pub pose: Pose,
    pub dq: DualQuaternion,
}

/// Samples at `t_i = i / (n - 1)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    pub samples: Vec<TrajectorySample>,
    /// Set when the endpoint rotations were a half turn apart and the
    /// direction of travel came from the deterministic tie-break.
    pub antipodal_ambiguity: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct TrajectoryMetrics {
    /// Sum of distances between consecutive positions.
    pub path_length: f64,
    /// Sum of geodesic angles between consecutive rotations.
    pub total_rotation: f64,
    pub max_linear_step: f64,
    pub max_angular_step: f64,
}

/// Evaluates `method` at `n >= 2` evenly spaced parameters in `[0, 1]`.
pub fn sample_trajectory(
    method: &InterpolationMethod,
    from: &DualQuaternion,
    to: &DualQuaternion,
    n: usize,
) -> Result<Trajectory> {
    if n < 2 {
        return Err(Error::InvalidCount(n));
    }
    let last = (n - 1) as f64;
    let mut samples = Vec::with_capacity(n);
    let mut antipodal_ambiguity = false;
    for i in 0..n {
        let t = i as f64 / last;
        let out = method.evaluate_flagged(t, from, to)?;
        antipodal_ambiguity |= out.antipodal;
        let dq = out.value.canonicalize();
        samples.push(TrajectorySample {
            t,
            pose: dq_to_pose(&dq)?,
            dq,
        });
    }
    Ok(Trajectory {
        samples,
        antipodal_ambiguity,
    })
}

pub fn trajectory_metrics(samples: &[TrajectorySample]) -> Result<TrajectoryMetrics> {
    if samples.len() < 2 {
        return Err(Error::InvalidCount(samples.len()));
    }
    let mut m = TrajectoryMetrics::default();
    for pair in samples.windows(2) {
        let (p, q) = (&pair[0].pose, &pair[1].pose);
        let linear = p.translation.distance(q.translation);
        let angular = p.rotation.angle_to(q.rotation);
        m.path_length += linear;
        m.total_rotation += angular;
        m.max_linear_step = m.max_linear_step.max(linear);
        m.max_angular_step = m.max_angular_step.max(angular);
    }
    Ok(m)
}
