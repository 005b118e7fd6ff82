//! Rigid-transform interpolation built on dual quaternions.
//!
//! * [`algebra`]: quaternions, dual numbers, dual quaternions.
//! * [`conversions`]: pose, screw, and matrix forms.
//! * [`interpolation`]: SEP, DLB, ScLERP and the β-biased KenLERP blend,
//!   plus trajectory sampling and metrics.
//! * [`cli`]: the `dqinterp` command line and the trajectory file format.

pub mod algebra;
pub mod cli;
pub mod conversions;
pub mod error;
pub mod interpolation;

#[cfg(test)]
pub(crate) mod test_support;

pub use algebra::{ConjugateVariant, DualNumber, DualQuaternion, DualVector, Quaternion, Vec3};
pub use conversions::{HomogeneousMatrix, Pose, ScrewParameters};
pub use error::{Error, Result};
