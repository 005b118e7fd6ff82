use crate::algebra::{ConjugateVariant, DualQuaternion, Quaternion, UNIT_TOLERANCE};
use crate::conversions::{dq_to_pose, pose_to_dq, Pose};
use crate::error::{Error, Result};

use super::power::{dq_pow, lerp_vec, quat_pow, short_path_sign};

/// Largest accepted KenLERP bias unless configured otherwise.
pub const DEFAULT_BETA_MAX: f64 = 4.0;

/// Blended real parts with norm below this are rejected by DLB.
pub const DEGENERATE_BLEND_EPSILON: f64 = 1e-9;

/// KenLERP skips the rotation SLERP when the branch rotations satisfy
/// `|dot| > 1 - NEAR_EQUAL_EPSILON`.
const NEAR_EQUAL_EPSILON: f64 = 1e-12;

/// An interpolated value plus whether the endpoints were a half turn apart,
/// in which case the rotation direction came from the deterministic tie-break.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interpolated<T> {
    pub value: T,
    pub antipodal: bool,
}

impl<T> Interpolated<T> {
    fn new(value: T, antipodal: bool) -> Self {
        Self { value, antipodal }
    }
}

fn ensure_unit_quat(q: Quaternion) -> Result<Quaternion> {
    let norm_error = (q.norm() - 1.0).abs();
    if norm_error > UNIT_TOLERANCE {
        return Err(Error::NotUnit { norm_error, dot: 0.0 });
    }
    Ok(q)
}

/// `q0 (q0* q1)^t` along the shorter arc.
pub fn slerp(t: f64, q0: Quaternion, q1: Quaternion) -> Result<Quaternion> {
    Ok(slerp_flagged(t, q0, q1)?.value)
}

pub fn slerp_flagged(t: f64, q0: Quaternion, q1: Quaternion) -> Result<Interpolated<Quaternion>> {
    let q0 = ensure_unit_quat(q0)?;
    let q1 = ensure_unit_quat(q1)?;
    let rel = q0.conjugate() * q1;
    let (sign, antipodal) = short_path_sign(rel);
    Ok(Interpolated::new(q0 * quat_pow(rel * sign, t), antipodal))
}

/// Decoupled interpolation: LERP the translations, SLERP the rotations.
pub fn sep_lerp(t: f64, a: &DualQuaternion, b: &DualQuaternion) -> Result<DualQuaternion> {
    Ok(sep_lerp_flagged(t, a, b)?.value)
}

pub fn sep_lerp_flagged(
    t: f64,
    a: &DualQuaternion,
    b: &DualQuaternion,
) -> Result<Interpolated<DualQuaternion>> {
    let pa = dq_to_pose(a)?;
    let pb = dq_to_pose(b)?;
    let rot = slerp_flagged(t, pa.rotation, pb.rotation)?;
    let pose = Pose {
        rotation: rot.value,
        translation: lerp_vec(t, pa.translation, pb.translation),
    };
    Ok(Interpolated::new(pose_to_dq(&pose)?, rot.antipodal))
}

/// Sign for `b` that puts it on the same side of the double cover as `a`.
fn align_sign(a: &DualQuaternion, b: &DualQuaternion) -> (f64, bool) {
    short_path_sign(a.real.conjugate() * b.real)
}

/// Dual-quaternion linear blending: normalized 8-component affine blend.
pub fn dlb(t: f64, a: &DualQuaternion, b: &DualQuaternion) -> Result<DualQuaternion> {
    Ok(dlb_flagged(t, a, b)?.value)
}

pub fn dlb_flagged(
    t: f64,
    a: &DualQuaternion,
    b: &DualQuaternion,
) -> Result<Interpolated<DualQuaternion>> {
    let a = a.ensure_unit(UNIT_TOLERANCE)?;
    let b = b.ensure_unit(UNIT_TOLERANCE)?;
    let (sign, antipodal) = align_sign(&a, &b);
    let blend = a.scale(1.0 - t) + b.scale(t * sign);
    let norm = blend.real.norm();
    if norm < DEGENERATE_BLEND_EPSILON {
        return Err(Error::DegenerateBlend { norm });
    }
    Ok(Interpolated::new(blend.normalize()?, antipodal))
}

/// Screw linear interpolation `a (a^-1 b)^t`, taking the short way round.
pub fn sclerp(t: f64, a: &DualQuaternion, b: &DualQuaternion) -> Result<DualQuaternion> {
    Ok(sclerp_flagged(t, a, b)?.value)
}

pub fn sclerp_flagged(
    t: f64,
    a: &DualQuaternion,
    b: &DualQuaternion,
) -> Result<Interpolated<DualQuaternion>> {
    let a = a.ensure_unit(UNIT_TOLERANCE)?;
    let b = b.ensure_unit(UNIT_TOLERANCE)?;
    let rel = a.conjugate(ConjugateVariant::QuatQuat) * b;
    let (sign, antipodal) = short_path_sign(rel.real);
    Ok(Interpolated::new(a * dq_pow(&rel.scale(sign), t)?, antipodal))
}

/// Blend of the decoupled (`beta = 0`) and screw (`beta = 1`) responses.
/// `beta > 1` extrapolates past the screw motion.
pub fn kenlerp(t: f64, beta: f64, a: &DualQuaternion, b: &DualQuaternion) -> Result<DualQuaternion> {
    Ok(kenlerp_flagged(t, beta, DEFAULT_BETA_MAX, a, b)?.value)
}

pub fn kenlerp_flagged(
    t: f64,
    beta: f64,
    beta_max: f64,
    a: &DualQuaternion,
    b: &DualQuaternion,
) -> Result<Interpolated<DualQuaternion>> {
    check_beta(beta, beta_max)?;
    let coupled = sclerp_flagged(t, a, b)?;
    let decoupled = sep_lerp_flagged(t, a, b)?;
    let sc = dq_to_pose(&coupled.value)?;
    let sep = dq_to_pose(&decoupled.value)?;

    let translation = lerp_vec(beta, sep.translation, sc.translation);
    let dot = sep.rotation.dot(sc.rotation);
    let (rotation, branch_antipodal) = if dot.abs() > 1.0 - NEAR_EQUAL_EPSILON {
        let aligned = sc.rotation * dot.signum();
        let mixed = sep.rotation * (1.0 - beta) + aligned * beta;
        (mixed * (1.0 / mixed.norm()), false)
    } else {
        let r = slerp_flagged(beta, sep.rotation, sc.rotation)?;
        (r.value, r.antipodal)
    };
    let value = pose_to_dq(&Pose {
        rotation,
        translation,
    })?;
    Ok(Interpolated::new(
        value,
        coupled.antipodal || decoupled.antipodal || branch_antipodal,
    ))
}

pub(crate) fn check_beta(beta: f64, beta_max: f64) -> Result<()> {
    if !(0.0..=beta_max).contains(&beta) {
        return Err(Error::BetaOutOfRange { beta, max: beta_max });
    }
    Ok(())
}
