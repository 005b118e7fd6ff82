use std::ops::{Add, Div, Mul, Neg, Sub};

/// Dual number `real + eps * dual` with `eps^2 = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct DualNumber {
    pub real: f64,
    pub dual: f64,
}

impl DualNumber {
    pub const ZERO: Self = Self::new(0.0, 0.0);
    pub const ONE: Self = Self::new(1.0, 0.0);

    #[inline]
    pub const fn new(real: f64, dual: f64) -> Self {
        Self { real, dual }
    }

    /// `sqrt(a + eps b) = sqrt(a) + eps b / (2 sqrt(a))`; requires `a > 0`.
    pub fn sqrt(self) -> Self {
        let r = self.real.sqrt();
        Self::new(r, self.dual / (2.0 * r))
    }

    /// `1 / (a + eps b) = 1/a - eps b / a^2`; requires `a != 0`.
    pub fn recip(self) -> Self {
        let inv = 1.0 / self.real;
        Self::new(inv, -self.dual * inv * inv)
    }

    pub fn sin(self) -> Self {
        dual_sin(self)
    }

    pub fn cos(self) -> Self {
        dual_cos(self)
    }
}

/// `sin(a + eps b) = sin a + eps b cos a`.
pub fn dual_sin(x: DualNumber) -> DualNumber {
    let (s, c) = x.real.sin_cos();
    DualNumber::new(s, x.dual * c)
}

/// `cos(a + eps b) = cos a - eps b sin a`.
pub fn dual_cos(x: DualNumber) -> DualNumber {
    let (s, c) = x.real.sin_cos();
    DualNumber::new(c, -x.dual * s)
}

impl Add for DualNumber {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.real + rhs.real, self.dual + rhs.dual)
    }
}

impl Sub for DualNumber {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.real - rhs.real, self.dual - rhs.dual)
    }
}

impl Neg for DualNumber {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.real, -self.dual)
    }
}

impl Mul for DualNumber {
    type Output = Self;
    /// The `eps^2` term is dropped.
    fn mul(self, rhs: Self) -> Self {
        Self::new(
            self.real * rhs.real,
            self.real * rhs.dual + self.dual * rhs.real,
        )
    }
}

impl Mul<f64> for DualNumber {
    type Output = Self;
    fn mul(self, s: f64) -> Self {
        Self::new(self.real * s, self.dual * s)
    }
}

impl Div for DualNumber {
    type Output = Self;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Self) -> Self {
        self * rhs.recip()
    }
}
