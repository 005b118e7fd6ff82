//! Generators and oracles for integration tests. The oracles work on plain
//! arrays and matrices and never call into the interpolation code.

#![allow(dead_code)]

use dqinterp::conversions::{pose_to_dq, Pose};
use dqinterp::{DualQuaternion, Quaternion, Vec3};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub type Mat3 = [[f64; 3]; 3];

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn random_unit_quat(rng: &mut impl Rng) -> Quaternion {
    let u1: f64 = rng.gen();
    let u2: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
    let u3: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
    let (a, b) = ((1.0 - u1).sqrt(), u1.sqrt());
    Quaternion::new(b * u3.cos(), a * u2.sin(), a * u2.cos(), b * u3.sin())
}

pub fn random_vec(rng: &mut impl Rng, scale: f64) -> Vec3 {
    Vec3::new(
        rng.gen_range(-scale..scale),
        rng.gen_range(-scale..scale),
        rng.gen_range(-scale..scale),
    )
}

pub fn random_unit_vec(rng: &mut impl Rng) -> Vec3 {
    loop {
        if let Some(v) = random_vec(rng, 1.0).try_normalize(0.1) {
            return v;
        }
    }
}

pub fn random_pose(rng: &mut impl Rng) -> Pose {
    Pose::new(random_unit_quat(rng), random_vec(rng, 5.0)).unwrap()
}

pub fn random_unit_dq(rng: &mut impl Rng) -> DualQuaternion {
    pose_to_dq(&random_pose(rng)).unwrap()
}

/// Closed-form rotation matrix of a unit quaternion.
pub fn rotation_matrix(q: Quaternion) -> Mat3 {
    let Quaternion { w, x, y, z } = q;
    [
        [1.0 - 2.0 * (y * y + z * z), 2.0 * (x * y - w * z), 2.0 * (x * z + w * y)],
        [2.0 * (x * y + w * z), 1.0 - 2.0 * (x * x + z * z), 2.0 * (y * z - w * x)],
        [2.0 * (x * z - w * y), 2.0 * (y * z + w * x), 1.0 - 2.0 * (x * x + y * y)],
    ]
}

pub fn mat_vec(m: &Mat3, p: Vec3) -> Vec3 {
    Vec3::new(
        m[0][0] * p.x + m[0][1] * p.y + m[0][2] * p.z,
        m[1][0] * p.x + m[1][1] * p.y + m[1][2] * p.z,
        m[2][0] * p.x + m[2][1] * p.y + m[2][2] * p.z,
    )
}

pub fn mat_max_diff(a: &Mat3, b: &Mat3) -> f64 {
    (0..9).map(|k| (a[k / 3][k % 3] - b[k / 3][k % 3]).abs()).fold(0.0, f64::max)
}

/// Largest componentwise difference after picking the same sign for both.
pub fn dq_gap(a: &DualQuaternion, b: &DualQuaternion) -> f64 {
    a.canonicalize().max_abs_diff(b.canonicalize())
}

/// Position distance plus rotation angle between two poses, computed from
/// their rotation matrices.
pub fn pose_distance(a: &Pose, b: &Pose) -> f64 {
    let ra = rotation_matrix(a.rotation);
    let rb = rotation_matrix(b.rotation);
    // trace(Ra^T Rb) = 1 + 2 cos(angle)
    let tr: f64 = (0..3).map(|i| (0..3).map(|k| ra[k][i] * rb[k][i]).sum::<f64>()).sum();
    let angle = ((tr - 1.0) / 2.0).clamp(-1.0, 1.0).acos();
    a.translation.distance(b.translation) + angle
}
