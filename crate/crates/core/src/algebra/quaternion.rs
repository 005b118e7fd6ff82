use std::ops::{Add, Mul, Neg, Sub};

use super::Vec3;

/// Quaternion `w + xi + yj + zk` with Hamilton multiplication.
///
/// Rotations use unit quaternions acting as `v' = q v q*`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quaternion {
    pub w: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Default for Quaternion {
    fn default() -> Self {
        Self::IDENTITY
    }
}

impl Quaternion {
    pub const IDENTITY: Self = Self::new(1.0, 0.0, 0.0, 0.0);
    pub const ZERO: Self = Self::new(0.0, 0.0, 0.0, 0.0);

    #[inline]
    pub const fn new(w: f64, x: f64, y: f64, z: f64) -> Self {
        Self { w, x, y, z }
    }

    #[inline]
    pub fn from_scalar_vector(w: f64, v: Vec3) -> Self {
        Self::new(w, v.x, v.y, v.z)
    }

    /// Pure quaternion `(0, v)`.
    #[inline]
    pub fn pure(v: Vec3) -> Self {
        Self::from_scalar_vector(0.0, v)
    }

    /// Rotation of `angle` radians about `axis`. The axis is normalized here;
    /// a zero axis yields the identity.
    pub fn from_axis_angle(axis: Vec3, angle: f64) -> Self {
        match axis.try_normalize(0.0) {
            Some(a) => {
                let (s, c) = (0.5 * angle).sin_cos();
                Self::from_scalar_vector(c, a * s)
            }
            None => Self::IDENTITY,
        }
    }

    #[inline]
    pub fn vector(self) -> Vec3 {
        Vec3::new(self.x, self.y, self.z)
    }

    #[inline]
    pub fn dot(self, rhs: Self) -> f64 {
        self.w * rhs.w + self.x * rhs.x + self.y * rhs.y + self.z * rhs.z
    }

    #[inline]
    pub fn norm_squared(self) -> f64 {
        self.dot(self)
    }

    #[inline]
    pub fn norm(self) -> f64 {
        self.norm_squared().sqrt()
    }

    /// `(w, -x, -y, -z)`.
    #[inline]
    pub fn conjugate(self) -> Self {
        Self::new(self.w, -self.x, -self.y, -self.z)
    }

    /// Scales to unit length. Returns `None` when the norm is not above `min_norm`.
    pub fn try_normalize(self, min_norm: f64) -> Option<Self> {
        let n = self.norm();
        (n > min_norm).then(|| self * (1.0 / n))
    }

    /// True when `| |q| - 1 | <= tol`.
    pub fn is_unit(self, tol: f64) -> bool {
        (self.norm() - 1.0).abs() <= tol
    }

    /// Rotates `v` by this (unit) quaternion.
    pub fn rotate(self, v: Vec3) -> Vec3 {
        (self * Self::pure(v) * self.conjugate()).vector()
    }

    /// Rotation angle in `[0, 2pi]` encoded by a unit quaternion.
    pub fn angle(self) -> f64 {
        2.0 * self.vector().norm().atan2(self.w)
    }

    /// Geodesic rotation angle in `[0, pi]` between two unit quaternions,
    /// insensitive to the sign of either.
    pub fn angle_to(self, other: Self) -> f64 {
        let rel = self.conjugate() * other;
        2.0 * rel.vector().norm().atan2(rel.w.abs())
    }

    /// Picks the representative of `{q, -q}` with `w >= 0`; when `w == 0`
    /// the first nonzero of `x, y, z` is made nonnegative.
    pub fn canonical_sign(self) -> f64 {
        if self.w > 0.0 {
            return 1.0;
        }
        if self.w < 0.0 {
            return -1.0;
        }
        [self.x, self.y, self.z]
            .into_iter()
            .find(|c| *c != 0.0)
            .map_or(1.0, |c| if c < 0.0 { -1.0 } else { 1.0 })
    }

    pub fn canonicalize(self) -> Self {
        self * self.canonical_sign()
    }

    pub fn to_array(self) -> [f64; 4] {
        [self.w, self.x, self.y, self.z]
    }

    pub fn max_abs_diff(self, rhs: Self) -> f64 {
        let d = self - rhs;
        d.w.abs().max(d.x.abs()).max(d.y.abs()).max(d.z.abs())
    }
}

impl From<[f64; 4]> for Quaternion {
    fn from([w, x, y, z]: [f64; 4]) -> Self {
        Self::new(w, x, y, z)
    }
}

impl Mul for Quaternion {
    type Output = Self;

    /// Hamilton product.
    #[inline]
    fn mul(self, b: Self) -> Self {
        let a = self;
        Self::new(
            a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w,
        )
    }
}

impl Mul<f64> for Quaternion {
    type Output = Self;
    #[inline]
    fn mul(self, s: f64) -> Self {
        Self::new(self.w * s, self.x * s, self.y * s, self.z * s)
    }
}

impl Add for Quaternion {
    type Output = Self;
    #[inline]
    fn add(self, b: Self) -> Self {
        Self::new(self.w + b.w, self.x + b.x, self.y + b.y, self.z + b.z)
    }
}

impl Sub for Quaternion {
    type Output = Self;
    #[inline]
    fn sub(self, b: Self) -> Self {
        Self::new(self.w - b.w, self.x - b.x, self.y - b.y, self.z - b.z)
    }
}

impl Neg for Quaternion {
    type Output = Self;
    fn neg(self) -> Self {
        self * -1.0
    }
}
