use std::ops::{Add, Mul, Neg, Sub};

use super::{DualNumber, Quaternion, Vec3};
use crate::error::{Error, Result};

/// Tolerance for unit-ness preconditions on inputs.
pub const UNIT_TOLERANCE: f64 = 1e-6;

/// Real-part norms at or below this leave the dual norm undefined.
pub const MIN_REAL_NORM: f64 = 1e-12;

/// Which of the three dual-quaternion conjugates to apply.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ConjugateVariant {
    /// `q_r* + eps q_d*`: the one used for norms and inverses.
    #[default]
    QuatQuat,
    /// `q_r - eps q_d`.
    DualFlip,
    /// `q_r* - eps q_d*`: used when sandwiching a point.
    Combined,
}

/// Dual quaternion `real + eps * dual`.
///
/// Unit dual quaternions (`|real| = 1`, `real . dual = 0`) encode rigid
/// transforms. Non-unit and zero values are representable; operations that
/// need a unit input check it and report [`Error::NotUnit`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DualQuaternion {
    pub real: Quaternion,
    pub dual: Quaternion,
}

impl Default for DualQuaternion {
    fn default() -> Self {
        Self::IDENTITY
    }
}

impl DualQuaternion {
    pub const IDENTITY: Self = Self::new(Quaternion::IDENTITY, Quaternion::ZERO);
    pub const ZERO: Self = Self::new(Quaternion::ZERO, Quaternion::ZERO);

    #[inline]
    pub const fn new(real: Quaternion, dual: Quaternion) -> Self {
        Self { real, dual }
    }

    /// Components ordered `[rw, rx, ry, rz, dw, dx, dy, dz]`.
    pub fn from_array(a: [f64; 8]) -> Self {
        Self::new(
            Quaternion::new(a[0], a[1], a[2], a[3]),
            Quaternion::new(a[4], a[5], a[6], a[7]),
        )
    }

    pub fn to_array(self) -> [f64; 8] {
        let (r, d) = (self.real, self.dual);
        [r.w, r.x, r.y, r.z, d.w, d.x, d.y, d.z]
    }

    /// Pure translation by `t`.
    pub fn from_translation(t: Vec3) -> Self {
        Self::new(Quaternion::IDENTITY, Quaternion::pure(t * 0.5))
    }

    /// Scales all eight components.
    #[inline]
    pub fn scale(self, s: f64) -> Self {
        Self::new(self.real * s, self.dual * s)
    }

    pub fn conjugate(self, variant: ConjugateVariant) -> Self {
        match variant {
            ConjugateVariant::QuatQuat => Self::new(self.real.conjugate(), self.dual.conjugate()),
            ConjugateVariant::DualFlip => Self::new(self.real, -self.dual),
            ConjugateVariant::Combined => Self::new(self.real.conjugate(), -self.dual.conjugate()),
        }
    }

    /// Square of the norm, `zeta zeta* = |q_r|^2 + eps 2 (q_r . q_d)`.
    pub fn norm_squared(self) -> DualNumber {
        DualNumber::new(self.real.norm_squared(), 2.0 * self.real.dot(self.dual))
    }

    /// Dual norm `(|q_r|, (q_r . q_d) / |q_r|)`.
    pub fn norm(self) -> Result<DualNumber> {
        let n = self.real.norm();
        if n <= MIN_REAL_NORM {
            return Err(Error::ZeroRealPart { norm: n });
        }
        Ok(DualNumber::new(n, self.real.dot(self.dual) / n))
    }

    /// Divides by the dual norm, so the result has a unit real part and a
    /// dual part orthogonal to it.
    pub fn normalize(self) -> Result<Self> {
        let n = self.norm()?;
        Ok(self * n.recip())
    }

    /// Deviation from the two unit conditions: `(| |q_r| - 1 |, |q_r . q_d|)`.
    pub fn unit_error(self) -> (f64, f64) {
        ((self.real.norm() - 1.0).abs(), self.real.dot(self.dual).abs())
    }

    pub fn is_unit(self, tol: f64) -> bool {
        let (n, d) = self.unit_error();
        n <= tol && d <= tol
    }

    /// Errors with [`Error::NotUnit`] unless both unit conditions hold within `tol`.
    pub fn ensure_unit(self, tol: f64) -> Result<Self> {
        let (norm_error, dot) = self.unit_error();
        if norm_error <= tol && dot <= tol {
            Ok(self)
        } else {
            Err(Error::NotUnit { norm_error, dot })
        }
    }

    /// Inverse of a unit dual quaternion (its quaternion conjugate).
    pub fn inverse(self) -> Result<Self> {
        Ok(self.ensure_unit(UNIT_TOLERANCE)?.conjugate(ConjugateVariant::QuatQuat))
    }

    /// Applies the rigid transform to a point: `zeta (1 + eps p) conj(zeta)`
    /// with the combined conjugate.
    pub fn transform_point(self, p: Vec3) -> Result<Vec3> {
        self.ensure_unit(UNIT_TOLERANCE)?;
        let point = Self::new(Quaternion::IDENTITY, Quaternion::pure(p));
        Ok((self * point * self.conjugate(ConjugateVariant::Combined)).dual.vector())
    }

    /// Rotation part only; translation is ignored.
    pub fn transform_vector(self, v: Vec3) -> Vec3 {
        self.real.rotate(v)
    }

    /// Translation encoded by a unit dual quaternion: vector part of `2 q_d q_r*`.
    pub fn translation(self) -> Vec3 {
        (self.dual * self.real.conjugate()).vector() * 2.0
    }

    /// Sign of the representative chosen by [`Self::canonicalize`].
    pub fn canonical_sign(self) -> f64 {
        self.real.canonical_sign()
    }

    /// Representative of `{zeta, -zeta}` whose real part has `w >= 0`
    /// (ties broken on the first nonzero of `x, y, z`).
    pub fn canonicalize(self) -> Self {
        self.scale(self.canonical_sign())
    }

    /// Eight-component dot product.
    pub fn dot(self, rhs: Self) -> f64 {
        self.real.dot(rhs.real) + self.dual.dot(rhs.dual)
    }

    pub fn max_abs_diff(self, rhs: Self) -> f64 {
        self.real.max_abs_diff(rhs.real).max(self.dual.max_abs_diff(rhs.dual))
    }
}

impl Add for DualQuaternion {
    type Output = Self;
    #[inline]
    fn add(self, rhs: Self) -> Self {
        Self::new(self.real + rhs.real, self.dual + rhs.dual)
    }
}

impl Sub for DualQuaternion {
    type Output = Self;
    #[inline]
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.real - rhs.real, self.dual - rhs.dual)
    }
}

impl Neg for DualQuaternion {
    type Output = Self;
    fn neg(self) -> Self {
        self.scale(-1.0)
    }
}

impl Mul for DualQuaternion {
    type Output = Self;
    /// `r1 r2 + eps (r1 d2 + d1 r2)`.
    #[inline]
    fn mul(self, rhs: Self) -> Self {
        Self::new(
            self.real * rhs.real,
            self.real * rhs.dual + self.dual * rhs.real,
        )
    }
}

impl Mul<f64> for DualQuaternion {
    type Output = Self;
    fn mul(self, s: f64) -> Self {
        self.scale(s)
    }
}

impl Mul<DualNumber> for DualQuaternion {
    type Output = Self;
    fn mul(self, s: DualNumber) -> Self {
        Self::new(self.real * s.real, self.dual * s.real + self.real * s.dual)
    }
}

/// Dual vector `real + eps * dual`; a unit one with orthogonal parts is a
/// line in Plücker form (direction, moment).
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct DualVector {
    pub real: Vec3,
    pub dual: Vec3,
}

impl DualVector {
    pub const fn new(real: Vec3, dual: Vec3) -> Self {
        Self { real, dual }
    }

    /// `| |real| - 1 | <= tol` and `|real . dual| <= tol`.
    pub fn is_unit_line(self, tol: f64) -> bool {
        (self.real.norm() - 1.0).abs() <= tol && self.real.dot(self.dual).abs() <= tol
    }
}

impl Mul<DualNumber> for DualVector {
    type Output = Self;
    fn mul(self, s: DualNumber) -> Self {
        Self::new(self.real * s.real, self.dual * s.real + self.real * s.dual)
    }
}
