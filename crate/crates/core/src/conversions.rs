//! Conversions between poses, dual quaternions, screw parameters and
//! homogeneous matrices.
//!
//! Translation enters the dual part on the left, `q_d = 1/2 (0, t) q_r`, so
//! that the point sandwich rotates first and translates second.

use crate::algebra::{DualQuaternion, Quaternion, Vec3, UNIT_TOLERANCE};
use crate::error::{Error, Result};

/// Below this real-part vector norm a dual quaternion is treated as a pure
/// translation when extracting screw parameters.
pub const ANGLE_EPSILON: f64 = 1e-9;

/// Rotation plus translation, kept separate.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Pose {
    pub rotation: Quaternion,
    pub translation: Vec3,
}

impl Pose {
    pub const IDENTITY: Self = Self {
        rotation: Quaternion::IDENTITY,
        translation: Vec3::ZERO,
    };

    /// Checks the rotation is unit within `1e-6` and renormalizes it.
    pub fn new(rotation: Quaternion, translation: Vec3) -> Result<Self> {
        Ok(Self {
            rotation: normalized_rotation(rotation)?,
            translation,
        })
    }

    pub fn from_translation(translation: Vec3) -> Self {
        Self {
            rotation: Quaternion::IDENTITY,
            translation,
        }
    }

    /// Applies rotation, then translation.
    pub fn transform_point(&self, p: Vec3) -> Vec3 {
        self.rotation.rotate(p) + self.translation
    }
}

fn normalized_rotation(q: Quaternion) -> Result<Quaternion> {
    let n = q.norm();
    if (n - 1.0).abs() > UNIT_TOLERANCE {
        return Err(Error::NotUnit {
            norm_error: (n - 1.0).abs(),
            dot: 0.0,
        });
    }
    Ok(q * (1.0 / n))
}

/// Screw displacement: rotate by `theta` about the line `(axis_dir,
/// axis_moment)` and translate by `d` along it.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct ScrewParameters {
    pub theta: f64,
    pub d: f64,
    pub axis_dir: Vec3,
    pub axis_moment: Vec3,
}

impl ScrewParameters {
    /// Pure rotation of `theta` about the line through `point` along `dir`.
    pub fn from_point_direction(theta: f64, d: f64, point: Vec3, dir: Vec3) -> Self {
        Self {
            theta,
            d,
            axis_dir: dir,
            axis_moment: plucker_moment(point, dir),
        }
    }

    /// The point of the axis closest to the origin, `l x m`.
    pub fn axis_point(&self) -> Vec3 {
        self.axis_dir.cross(self.axis_moment)
    }

    /// Set when extraction fell into the zero-angle branch, where the
    /// displacement is a translation of `d` along `axis_dir`.
    pub fn is_pure_translation(&self) -> bool {
        self.theta == 0.0 && self.axis_moment == Vec3::ZERO
    }
}

/// Moment `point x dir` of the line through `point` with unit direction `dir`.
pub fn plucker_moment(point: Vec3, dir: Vec3) -> Vec3 {
    point.cross(dir)
}

/// `q_r = q`, `q_d = 1/2 (0, t) q`.
pub fn pose_to_dq(pose: &Pose) -> Result<DualQuaternion> {
    let q = normalized_rotation(pose.rotation)?;
    Ok(DualQuaternion::new(
        q,
        Quaternion::pure(pose.translation) * q * 0.5,
    ))
}

/// Rotation (sign-canonical) and the vector part of `2 q_d q_r*`.
pub fn dq_to_pose(zeta: &DualQuaternion) -> Result<Pose> {
    let z = zeta.ensure_unit(UNIT_TOLERANCE)?.normalize()?.canonicalize();
    Ok(Pose {
        rotation: z.real,
        translation: z.translation(),
    })
}

pub fn screw_to_dq(s: &ScrewParameters) -> Result<DualQuaternion> {
    let l = s.axis_dir;
    let m = s.axis_moment;
    let norm_error = (l.norm() - 1.0).abs();
    let dot = l.dot(m).abs();
    if norm_error > UNIT_TOLERANCE || dot > UNIT_TOLERANCE {
        return Err(Error::InvalidAxis { norm_error, dot });
    }
    let (sin_h, cos_h) = (0.5 * s.theta).sin_cos();
    let half_d = 0.5 * s.d;
    Ok(DualQuaternion::new(
        Quaternion::from_scalar_vector(cos_h, l * sin_h),
        Quaternion::from_scalar_vector(-half_d * sin_h, m * sin_h + l * (half_d * cos_h)),
    ))
}

/// Screw parameters of a unit dual quaternion, with `theta` in `[0, pi]`.
///
/// When the rotation vanishes (`|v_r| < ANGLE_EPSILON`) the result is
/// `theta = 0`, `d = |t|`, `l = t / |t|` (or `+x` for no translation),
/// `m = 0`.
pub fn dq_to_screw(zeta: &DualQuaternion) -> Result<ScrewParameters> {
    let z = zeta.ensure_unit(UNIT_TOLERANCE)?.normalize()?.canonicalize();
    Ok(screw_of_normalized(&z))
}

/// Screw parameters of the given representative without sign
/// canonicalization, so `theta` lies in `[0, 2pi]`. A real part of `-1`
/// maps to `theta = 2pi` about the translation direction.
pub(crate) fn screw_of_normalized(z: &DualQuaternion) -> ScrewParameters {
    let w_r = z.real.w;
    let v_r = z.real.vector();
    let sin_h = v_r.norm();

    if sin_h < ANGLE_EPSILON {
        let t = z.translation();
        let d = t.norm();
        return ScrewParameters {
            theta: if w_r < 0.0 { std::f64::consts::TAU } else { 0.0 },
            d,
            axis_dir: if d > 0.0 { t / d } else { Vec3::X },
            axis_moment: Vec3::ZERO,
        };
    }

    // atan2 agrees with 2 acos(w_r) on unit input and stays accurate near 0.
    let theta = 2.0 * sin_h.atan2(w_r);
    let l = v_r / sin_h;
    let d = -2.0 * z.dual.w / sin_h;
    let m = (z.dual.vector() - l * (0.5 * d * w_r)) / sin_h;
    ScrewParameters {
        theta,
        d,
        axis_dir: l,
        axis_moment: m,
    }
}

/// Row-major 4x4 rigid transform acting on column vectors, `p' = M p`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HomogeneousMatrix(pub [[f64; 4]; 4]);

impl Default for HomogeneousMatrix {
    fn default() -> Self {
        Self::IDENTITY
    }
}

impl HomogeneousMatrix {
    pub const IDENTITY: Self = Self([
        [1.0, 0.0, 0.0, 0.0],
        [0.0, 1.0, 0.0, 0.0],
        [0.0, 0.0, 1.0, 0.0],
        [0.0, 0.0, 0.0, 1.0],
    ]);

    pub fn rows(&self) -> &[[f64; 4]; 4] {
        &self.0
    }

    pub fn translation(&self) -> Vec3 {
        Vec3::new(self.0[0][3], self.0[1][3], self.0[2][3])
    }

    pub fn transform_point(&self, p: Vec3) -> Vec3 {
        let m = &self.0;
        let row = |r: usize| m[r][0] * p.x + m[r][1] * p.y + m[r][2] * p.z + m[r][3];
        Vec3::new(row(0), row(1), row(2))
    }

    pub fn max_abs_diff(&self, rhs: &Self) -> f64 {
        self.0
            .iter()
            .flatten()
            .zip(rhs.0.iter().flatten())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    /// Checks bottom row, orthonormality and `det = +1` of the rotation block.
    pub fn validate(&self, tol: f64) -> Result<()> {
        let m = &self.0;
        let bottom = [0.0, 0.0, 0.0, 1.0];
        if m[3].iter().zip(bottom).any(|(a, b)| (a - b).abs() > tol) {
            return Err(Error::InvalidMatrix("bottom row is not (0, 0, 0, 1)"));
        }
        if m.iter().flatten().any(|v| !v.is_finite()) {
            return Err(Error::InvalidMatrix("non-finite entry"));
        }
        for i in 0..3 {
            for j in 0..3 {
                let dot: f64 = (0..3).map(|k| m[k][i] * m[k][j]).sum();
                let expect = if i == j { 1.0 } else { 0.0 };
                if (dot - expect).abs() > tol {
                    return Err(Error::InvalidMatrix("rotation block is not orthonormal"));
                }
            }
        }
        let det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
        if det < 0.0 {
            return Err(Error::InvalidMatrix("rotation block has determinant -1"));
        }
        Ok(())
    }
}

impl std::ops::Mul for HomogeneousMatrix {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let mut out = [[0.0; 4]; 4];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, v) in row.iter_mut().enumerate() {
                *v = (0..4).map(|k| self.0[i][k] * rhs.0[k][j]).sum();
            }
        }
        Self(out)
    }
}

pub fn dq_to_matrix(zeta: &DualQuaternion) -> Result<HomogeneousMatrix> {
    let pose = dq_to_pose(zeta)?;
    let Quaternion { w, x, y, z } = pose.rotation;
    let t = pose.translation;
    Ok(HomogeneousMatrix([
        [
            1.0 - 2.0 * (y * y + z * z),
            2.0 * (x * y - w * z),
            2.0 * (x * z + w * y),
            t.x,
        ],
        [
            2.0 * (x * y + w * z),
            1.0 - 2.0 * (x * x + z * z),
            2.0 * (y * z - w * x),
            t.y,
        ],
        [
            2.0 * (x * z - w * y),
            2.0 * (y * z + w * x),
            1.0 - 2.0 * (x * x + y * y),
            t.z,
        ],
        [0.0, 0.0, 0.0, 1.0],
    ]))
}

pub fn matrix_to_dq(m: &HomogeneousMatrix) -> Result<DualQuaternion> {
    m.validate(UNIT_TOLERANCE)?;
    let rotation = rotation_block_to_quat(&m.0);
    pose_to_dq(&Pose {
        rotation: rotation.canonicalize(),
        translation: m.translation(),
    })
}

/// Shepperd's method: pivot on the largest of trace and diagonal entries.
fn rotation_block_to_quat(m: &[[f64; 4]; 4]) -> Quaternion {
    let trace = m[0][0] + m[1][1] + m[2][2];
    let q = if trace > m[0][0].max(m[1][1]).max(m[2][2]) {
        let s = 2.0 * (1.0 + trace).sqrt();
        Quaternion::new(
            0.25 * s,
            (m[2][1] - m[1][2]) / s,
            (m[0][2] - m[2][0]) / s,
            (m[1][0] - m[0][1]) / s,
        )
    } else if m[0][0] >= m[1][1] && m[0][0] >= m[2][2] {
        let s = 2.0 * (1.0 + m[0][0] - m[1][1] - m[2][2]).sqrt();
        Quaternion::new(
            (m[2][1] - m[1][2]) / s,
            0.25 * s,
            (m[0][1] + m[1][0]) / s,
            (m[0][2] + m[2][0]) / s,
        )
    } else if m[1][1] >= m[2][2] {
        let s = 2.0 * (1.0 + m[1][1] - m[0][0] - m[2][2]).sqrt();
        Quaternion::new(
            (m[0][2] - m[2][0]) / s,
            (m[0][1] + m[1][0]) / s,
            0.25 * s,
            (m[1][2] + m[2][1]) / s,
        )
    } else {
        let s = 2.0 * (1.0 + m[2][2] - m[0][0] - m[1][1]).sqrt();
        Quaternion::new(
            (m[1][0] - m[0][1]) / s,
            (m[0][2] + m[2][0]) / s,
            (m[1][2] + m[2][1]) / s,
            0.25 * s,
        )
    };
    q * (1.0 / q.norm())
}
