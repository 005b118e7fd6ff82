use thiserror::Error;

/// Failures raised by the algebra, conversion and interpolation layers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("real part norm {norm:e} is too small for the dual norm to be defined")]
    ZeroRealPart { norm: f64 },

    #[error("value is not unit: real-norm deviation {norm_error:e}, real/dual dot {dot:e}")]
    NotUnit { norm_error: f64, dot: f64 },

    #[error("invalid screw axis: |l| - 1 = {norm_error:e}, l.m = {dot:e}")]
    InvalidAxis { norm_error: f64, dot: f64 },

    #[error("invalid rigid-transform matrix: {0}")]
    InvalidMatrix(&'static str),

    #[error("blended real part collapsed (norm {norm:e}); endpoints are antipodal")]
    DegenerateBlend { norm: f64 },

    #[error("beta {beta} outside [0, {max}]")]
    BetaOutOfRange { beta: f64, max: f64 },

    #[error("sample count {0} is below the minimum of 2")]
    InvalidCount(usize),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
