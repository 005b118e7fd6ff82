//! Random generators and independent oracles shared by unit tests.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::algebra::{DualQuaternion, Quaternion, Vec3};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// Uniformly distributed unit quaternion (Shoemake's subgroup algorithm).
pub fn random_unit_quat(rng: &mut impl Rng) -> Quaternion {
    let u1: f64 = rng.gen();
    let u2: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
    let u3: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
    let (a, b) = ((1.0 - u1).sqrt(), u1.sqrt());
    Quaternion::new(b * u3.cos(), a * u2.sin(), a * u2.cos(), b * u3.sin())
}

pub fn random_quat(rng: &mut impl Rng) -> Quaternion {
    Quaternion::new(
        rng.gen_range(-2.0..2.0),
        rng.gen_range(-2.0..2.0),
        rng.gen_range(-2.0..2.0),
        rng.gen_range(-2.0..2.0),
    )
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

/// Unit dual quaternion with translation components in `[-5, 5)`.
pub fn random_unit_dq(rng: &mut impl Rng) -> DualQuaternion {
    let q = random_unit_quat(rng);
    let t = random_vec(rng, 5.0);
    DualQuaternion::new(q, Quaternion::pure(t) * q * 0.5)
}

/// Arbitrary (generally non-unit) dual quaternion with a real part away from zero.
pub fn random_dq(rng: &mut impl Rng) -> DualQuaternion {
    loop {
        let z = DualQuaternion::new(random_quat(rng), random_quat(rng));
        if z.real.norm() > 0.1 {
            return z;
        }
    }
}

/// Rotation matrix from the closed-form quaternion expansion.
pub fn rotation_matrix_oracle(q: Quaternion) -> [[f64; 3]; 3] {
    let Quaternion { w, x, y, z } = q;
    [
        [
            1.0 - 2.0 * (y * y + z * z),
            2.0 * (x * y - w * z),
            2.0 * (x * z + w * y),
        ],
        [
            2.0 * (x * y + w * z),
            1.0 - 2.0 * (x * x + z * z),
            2.0 * (y * z - w * x),
        ],
        [
            2.0 * (x * z - w * y),
            2.0 * (y * z + w * x),
            1.0 - 2.0 * (x * x + y * y),
        ],
    ]
}
