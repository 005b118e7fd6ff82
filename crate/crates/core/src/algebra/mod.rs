//! Value types: 3-vectors, quaternions, dual numbers and dual quaternions.

mod dual;
mod dual_quat;
mod quaternion;
mod vector;

pub use dual::{dual_cos, dual_sin, DualNumber};
pub use dual_quat::{ConjugateVariant, DualQuaternion, DualVector, MIN_REAL_NORM, UNIT_TOLERANCE};
pub use quaternion::Quaternion;
pub use vector::Vec3;
