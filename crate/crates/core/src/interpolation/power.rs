use crate::algebra::{dual_cos, dual_sin, DualNumber, DualQuaternion, DualVector, Quaternion, Vec3};
use crate::conversions::{screw_of_normalized, ANGLE_EPSILON};
use crate::error::Result;

/// `|dot|` below this between two rotations means they are a half turn
/// apart and the short geodesic is not unique.
pub const ANTIPODAL_EPSILON: f64 = 1e-9;

/// `(1 - t) v0 + t v1`; `t` outside `[0, 1]` extrapolates.
pub fn lerp_vec(t: f64, v0: Vec3, v1: Vec3) -> Vec3 {
    v0 * (1.0 - t) + v1 * t
}

/// Rotation by `t` times the angle of unit `q`, about the same axis.
///
/// Near the identity the axis is irrelevant and the limit `1 + t v` is used.
/// A quaternion within `ANGLE_EPSILON` of `-1` is a full turn with no axis;
/// it is taken about `+x`.
pub fn quat_pow(q: Quaternion, t: f64) -> Quaternion {
    let v = q.vector();
    let sin_h = v.norm();
    if sin_h < ANGLE_EPSILON {
        if q.w >= 0.0 {
            let limit = Quaternion::from_scalar_vector(1.0, v * t);
            return limit * (1.0 / limit.norm());
        }
        let (s, c) = (std::f64::consts::PI * t).sin_cos();
        return Quaternion::from_scalar_vector(c, Vec3::X * s);
    }
    let half = sin_h.atan2(q.w);
    let (s, c) = (t * half).sin_cos();
    Quaternion::from_scalar_vector(c, v * (s / sin_h))
}

/// Screw power of a unit dual quaternion: scale the dual angle
/// `theta + eps d` by `t` and rebuild `cos(t theta_hat / 2) + (l + eps m) sin(t theta_hat / 2)`.
///
/// Uses the given representative as-is; callers wanting the short path
/// pick the sign first.
pub fn dq_pow(zeta: &DualQuaternion, t: f64) -> Result<DualQuaternion> {
    let z = zeta
        .ensure_unit(crate::algebra::UNIT_TOLERANCE)?
        .normalize()?;
    let screw = screw_of_normalized(&z);
    let half_angle = DualNumber::new(0.5 * t * screw.theta, 0.5 * t * screw.d);
    let c = dual_cos(half_angle);
    let axis = DualVector::new(screw.axis_dir, screw.axis_moment) * dual_sin(half_angle);
    Ok(DualQuaternion::new(
        Quaternion::from_scalar_vector(c.real, axis.real),
        Quaternion::from_scalar_vector(c.dual, axis.dual),
    ))
}

/// Sign (+1 or -1) that puts `rel` on the short side of the double cover:
/// `w > 0`, or when `|w| < ANTIPODAL_EPSILON`, the first nonzero vector
/// component positive. The flag reports the latter, ambiguous case.
pub(crate) fn short_path_sign(rel: Quaternion) -> (f64, bool) {
    if rel.w.abs() < ANTIPODAL_EPSILON {
        let s = Quaternion::new(0.0, rel.x, rel.y, rel.z).canonical_sign();
        (s, true)
    } else if rel.w < 0.0 {
        (-1.0, false)
    } else {
        (1.0, false)
    }
}

#[cfg(test)]
mod tests {
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

    use super::*;
    use crate::conversions::{pose_to_dq, Pose};
    use crate::test_support::{random_unit_dq, random_unit_quat, random_vec, rng, rotation_matrix_oracle};
    use rand::Rng;

    #[test]
    fn lerp_vec_cases() {
        let a = Vec3::new(1.0, -2.0, 3.0);
        let b = Vec3::new(-4.0, 5.0, 0.5);
        assert_eq!(lerp_vec(0.0, a, b), a);
        assert_eq!(lerp_vec(1.0, a, b), b);
        assert_eq!(lerp_vec(0.5, Vec3::ZERO, Vec3::new(2.0, 4.0, 6.0)), Vec3::new(1.0, 2.0, 3.0));
        assert_eq!(lerp_vec(2.0, Vec3::ZERO, Vec3::X), Vec3::new(2.0, 0.0, 0.0));
    }

    #[test]
    fn quat_pow_cases() {
        let mut rng = rng(31);
        for _ in 0..100 {
            let q = random_unit_quat(&mut rng);
            assert_eq!(quat_pow(q, 0.0), Quaternion::IDENTITY);
            assert!(quat_pow(q, 1.0).max_abs_diff(q) < 1e-12);
            let t: f64 = rng.gen_range(-3.0..3.0);
            assert_eq!(quat_pow(Quaternion::IDENTITY, t), Quaternion::IDENTITY);
        }
        let z90 = Quaternion::from_axis_angle(Vec3::Z, FRAC_PI_2);
        let z45 = Quaternion::from_axis_angle(Vec3::Z, FRAC_PI_4);
        assert!(quat_pow(z90, 0.5).max_abs_diff(z45) < 1e-15);
        let tiny = Quaternion::from_axis_angle(Vec3::Y, 1e-12);
        assert!(quat_pow(tiny, 0.5).max_abs_diff(Quaternion::from_axis_angle(Vec3::Y, 5e-13)) < 1e-15);
        let full = Quaternion::new(-1.0, 0.0, 0.0, 0.0);
        assert_eq!(quat_pow(full, 1.0).w, -1.0);
        assert!(quat_pow(full, 0.5).max_abs_diff(Quaternion::new(0.0, 1.0, 0.0, 0.0)) < 1e-15);
    }

    /// Axis and angle recovered from the rotation matrix (matrix logarithm).
    fn matrix_axis_angle(q: Quaternion) -> (Vec3, f64) {
        let r = rotation_matrix_oracle(q);
        let tr = r[0][0] + r[1][1] + r[2][2];
        let angle = ((tr - 1.0) / 2.0).clamp(-1.0, 1.0).acos();
        let axis = Vec3::new(r[2][1] - r[1][2], r[0][2] - r[2][0], r[1][0] - r[0][1]) / (2.0 * angle.sin());
        (axis, angle)
    }

    #[test]
    fn quat_pow_matches_matrix_log_oracle() {
        let mut rng = rng(32);
        let mut n = 0;
        while n < 1000 {
            let q = random_unit_quat(&mut rng).canonicalize();
            let (axis, angle) = matrix_axis_angle(q);
            if !(0.05..PI - 0.05).contains(&angle) {
                continue;
            }
            n += 1;
            let t: f64 = rng.gen_range(0.0..1.0);
            let expect = rotation_matrix_oracle(Quaternion::from_axis_angle(axis, t * angle));
            let got = rotation_matrix_oracle(quat_pow(q, t));
            for i in 0..3 {
                for j in 0..3 {
                    assert!((got[i][j] - expect[i][j]).abs() < 1e-10);
                }
            }
        }
    }

    #[test]
    fn dq_pow_cases() {
        let mut rng = rng(33);
        for _ in 0..500 {
            let z = random_unit_dq(&mut rng).canonicalize();
            let p0 = dq_pow(&z, 0.0).unwrap();
            assert!(p0.max_abs_diff(DualQuaternion::IDENTITY) == 0.0);
            assert!(dq_pow(&z, 1.0).unwrap().max_abs_diff(z) < 1e-9);
            let half = dq_pow(&z, 0.5).unwrap();
            assert!((half * half).max_abs_diff(z) < 1e-9);
            let a: f64 = rng.gen_range(0.0..1.0);
            let b: f64 = rng.gen_range(0.0..1.0);
            let lhs = dq_pow(&z, a).unwrap() * dq_pow(&z, b).unwrap();
            assert!(lhs.max_abs_diff(dq_pow(&z, a + b).unwrap()) < 1e-9);
            assert!(dq_pow(&z, a).unwrap().is_unit(1e-12));
        }
    }

    #[test]
    fn dq_pow_pure_translation_is_linear() {
        let z = DualQuaternion::from_translation(Vec3::new(2.0, 0.0, 0.0));
        let half = dq_pow(&z, 0.5).unwrap();
        assert!(half.max_abs_diff(DualQuaternion::from_translation(Vec3::X)) < 1e-15);
        let mut rng = rng(34);
        for _ in 0..500 {
            let t = random_vec(&mut rng, 10.0);
            let s: f64 = rng.gen_range(-2.0..2.0);
            let got = dq_pow(&DualQuaternion::from_translation(t), s).unwrap();
            assert_eq!(got.real, Quaternion::IDENTITY);
            assert!(got.translation().max_abs_diff(t * s) < 1e-12);
        }
    }

    #[test]
    fn dq_pow_of_negated_identity_like_value() {
        // -(translation) has real part -1; its power runs a full turn
        let z = -pose_to_dq(&Pose::from_translation(Vec3::new(0.0, 0.0, 3.0))).unwrap();
        let one = dq_pow(&z, 1.0).unwrap();
        assert!(one.max_abs_diff(z) < 1e-12);
    }

    #[test]
    fn short_path_sign_tie_break() {
        assert_eq!(short_path_sign(Quaternion::new(0.5, 1.0, 0.0, 0.0)), (1.0, false));
        assert_eq!(short_path_sign(Quaternion::new(-0.5, 1.0, 0.0, 0.0)), (-1.0, false));
        assert_eq!(short_path_sign(Quaternion::new(1e-12, -1.0, 0.0, 0.0)), (-1.0, true));
        assert_eq!(short_path_sign(Quaternion::new(-1e-12, 0.0, 1.0, 0.0)), (1.0, true));
    }
}
