//! C ABI over `dqinterp`.
//!
//! Value types (`DqPose`, `DqDualQuat`, ...) are plain `repr(C)` structs
//! passed by pointer. Trajectories live behind the opaque `DqTrajectory`
//! handle, created by `dq_trajectory_new` or `dq_trajectory_parse` and
//! released with `dq_trajectory_free`. Every fallible call returns a
//! `DqStatus`; outputs are written only on `DQ_STATUS_OK`.
//!
//! The header `include/dqinterp.h` is regenerated by the build script.

use std::ffi::{c_char, CStr};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use dqinterp::cli::{interpolate_file, parse_pose, CliError, TrajectoryFile};
use dqinterp::conversions::{self, Pose, ScrewParameters};
use dqinterp::interpolation::{InterpolationMethod, MethodKind};
use dqinterp::{DualQuaternion, Error, Quaternion, Vec3};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DqStatus {
    Ok = 0,
    NullPointer = 1,
    NotUnit = 2,
    ZeroRealPart = 3,
    InvalidAxis = 4,
    InvalidMatrix = 5,
    DegenerateBlend = 6,
    BetaOutOfRange = 7,
    InvalidCount = 8,
    InvalidPose = 9,
    InvalidMethod = 10,
    InvalidFile = 11,
    InvalidUtf8 = 12,
    BufferTooSmall = 13,
    IndexOutOfRange = 14,
    Panic = 15,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DqMethod {
    Sep = 0,
    Dlb = 1,
    Sclerp = 2,
    Kenlerp = 3,
}

/// Translation `pos` and rotation `rot = [w, x, y, z]`.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct DqPose {
    pub pos: [f64; 3],
    pub rot: [f64; 4],
}

/// Real and dual parts, each `[w, x, y, z]`.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct DqDualQuat {
    pub real: [f64; 4],
    pub dual: [f64; 4],
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct DqScrew {
    pub theta: f64,
    pub d: f64,
    pub axis_dir: [f64; 3],
    pub axis_moment: [f64; 3],
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct DqMetrics {
    pub path_length: f64,
    pub total_rotation: f64,
    pub max_linear_step: f64,
    pub max_angular_step: f64,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct DqSample {
    pub t: f64,
    pub pose: DqPose,
}

/// Opaque trajectory handle.
pub struct DqTrajectory {
    file: TrajectoryFile,
    antipodal: bool,
}

impl From<&Error> for DqStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::ZeroRealPart { .. } => Self::ZeroRealPart,
            Error::NotUnit { .. } => Self::NotUnit,
            Error::InvalidAxis { .. } => Self::InvalidAxis,
            Error::InvalidMatrix(_) => Self::InvalidMatrix,
            Error::DegenerateBlend { .. } => Self::DegenerateBlend,
            Error::BetaOutOfRange { .. } => Self::BetaOutOfRange,
            Error::InvalidCount(_) => Self::InvalidCount,
        }
    }
}

impl From<Error> for DqStatus {
    fn from(e: Error) -> Self {
        (&e).into()
    }
}

impl From<CliError> for DqStatus {
    fn from(e: CliError) -> Self {
        match e {
            CliError::InvalidPose { .. } => Self::InvalidPose,
            CliError::PoseNotUnit { .. } => Self::NotUnit,
            CliError::Core(e) => e.into(),
            CliError::Io { .. } | CliError::Output(_) => Self::InvalidFile,
        }
    }
}

impl From<MethodKind> for DqMethod {
    fn from(k: MethodKind) -> Self {
        match k {
            MethodKind::Sep => Self::Sep,
            MethodKind::Dlb => Self::Dlb,
            MethodKind::Sclerp => Self::Sclerp,
            MethodKind::Kenlerp => Self::Kenlerp,
        }
    }
}

impl From<DqMethod> for MethodKind {
    fn from(m: DqMethod) -> Self {
        match m {
            DqMethod::Sep => Self::Sep,
            DqMethod::Dlb => Self::Dlb,
            DqMethod::Sclerp => Self::Sclerp,
            DqMethod::Kenlerp => Self::Kenlerp,
        }
    }
}

impl From<&DqDualQuat> for DualQuaternion {
    fn from(z: &DqDualQuat) -> Self {
        Self::new(Quaternion::from(z.real), Quaternion::from(z.dual))
    }
}

impl From<DualQuaternion> for DqDualQuat {
    fn from(z: DualQuaternion) -> Self {
        Self {
            real: z.real.to_array(),
            dual: z.dual.to_array(),
        }
    }
}

impl From<&Pose> for DqPose {
    fn from(p: &Pose) -> Self {
        Self {
            pos: p.translation.to_array(),
            rot: p.rotation.to_array(),
        }
    }
}

impl DqPose {
    fn to_pose(self) -> Result<Pose, DqStatus> {
        Ok(Pose::new(Quaternion::from(self.rot), Vec3::from(self.pos))?)
    }
}

impl From<&ScrewParameters> for DqScrew {
    fn from(s: &ScrewParameters) -> Self {
        Self {
            theta: s.theta,
            d: s.d,
            axis_dir: s.axis_dir.to_array(),
            axis_moment: s.axis_moment.to_array(),
        }
    }
}

impl From<&DqScrew> for ScrewParameters {
    fn from(s: &DqScrew) -> Self {
        Self {
            theta: s.theta,
            d: s.d,
            axis_dir: Vec3::from(s.axis_dir),
            axis_moment: Vec3::from(s.axis_moment),
        }
    }
}

/// Runs `body`, mapping errors and panics to a status code.
fn guard(body: impl FnOnce() -> Result<(), DqStatus>) -> DqStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => DqStatus::Ok,
        Ok(Err(status)) => status,
        Err(_) => DqStatus::Panic,
    }
}

unsafe fn read<'a, T>(p: *const T) -> Result<&'a T, DqStatus> {
    p.as_ref().ok_or(DqStatus::NullPointer)
}

unsafe fn write<T>(p: *mut T, value: T) -> Result<(), DqStatus> {
    if p.is_null() {
        return Err(DqStatus::NullPointer);
    }
    p.write(value);
    Ok(())
}

unsafe fn read_str<'a>(p: *const c_char) -> Result<&'a str, DqStatus> {
    if p.is_null() {
        return Err(DqStatus::NullPointer);
    }
    CStr::from_ptr(p).to_str().map_err(|_| DqStatus::InvalidUtf8)
}

/// Static, NUL-terminated description of a status code.
#[no_mangle]
pub extern "C" fn dq_status_message(status: DqStatus) -> *const c_char {
    let msg: &'static CStr = match status {
        DqStatus::Ok => c"ok",
        DqStatus::NullPointer => c"null pointer argument",
        DqStatus::NotUnit => c"value is not a unit (dual) quaternion",
        DqStatus::ZeroRealPart => c"real part is zero",
        DqStatus::InvalidAxis => c"screw axis is not a unit line",
        DqStatus::InvalidMatrix => c"matrix is not a rigid transform",
        DqStatus::DegenerateBlend => c"blended real part collapsed",
        DqStatus::BetaOutOfRange => c"beta outside [0, beta_max]",
        DqStatus::InvalidCount => c"sample count below 2",
        DqStatus::InvalidPose => c"pose text is not 7 numbers",
        DqStatus::InvalidMethod => c"unknown interpolation method",
        DqStatus::InvalidFile => c"invalid trajectory file",
        DqStatus::InvalidUtf8 => c"string is not UTF-8",
        DqStatus::BufferTooSmall => c"output buffer too small",
        DqStatus::IndexOutOfRange => c"index out of range",
        DqStatus::Panic => c"internal panic",
    };
    msg.as_ptr()
}

/// Parses `"px py pz qw qx qy qz"`.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dq_pose_parse(text: *const c_char, out: *mut DqPose) -> DqStatus {
    guard(|| {
        let pose = parse_pose(read_str(text)?)?;
        write(out, DqPose::from(&pose))
    })
}

/// # Safety
/// `pose` must be readable and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn dq_pose_to_dq(pose: *const DqPose, out: *mut DqDualQuat) -> DqStatus {
    guard(|| {
        let z = conversions::pose_to_dq(&read(pose)?.to_pose()?)?;
        write(out, z.into())
    })
}

/// # Safety
/// `dq` must be readable and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn dq_dq_to_pose(dq: *const DqDualQuat, out: *mut DqPose) -> DqStatus {
    guard(|| {
        let pose = conversions::dq_to_pose(&read(dq)?.into())?;
        write(out, DqPose::from(&pose))
    })
}

/// # Safety
/// `dq` must be readable and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn dq_dq_to_screw(dq: *const DqDualQuat, out: *mut DqScrew) -> DqStatus {
    guard(|| {
        let s = conversions::dq_to_screw(&read(dq)?.into())?;
        write(out, DqScrew::from(&s))
    })
}

/// # Safety
/// `screw` must be readable and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn dq_screw_to_dq(screw: *const DqScrew, out: *mut DqDualQuat) -> DqStatus {
    guard(|| {
        let z = conversions::screw_to_dq(&read(screw)?.into())?;
        write(out, z.into())
    })
}

/// `out = a * b`.
///
/// # Safety
/// `a`, `b` must be readable and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn dq_mul(a: *const DqDualQuat, b: *const DqDualQuat, out: *mut DqDualQuat) -> DqStatus {
    guard(|| {
        let z = DualQuaternion::from(read(a)?) * DualQuaternion::from(read(b)?);
        write(out, z.into())
    })
}

/// Applies a unit dual quaternion to the point `point[0..3]`.
///
/// # Safety
/// `dq` must be readable, `point` and `out` must each hold 3 doubles.
#[no_mangle]
pub unsafe extern "C" fn dq_transform_point(
    dq: *const DqDualQuat,
    point: *const [f64; 3],
    out: *mut [f64; 3],
) -> DqStatus {
    guard(|| {
        let z = DualQuaternion::from(read(dq)?);
        let p = z.transform_point(Vec3::from(*read(point)?))?;
        write(out, p.to_array())
    })
}

/// Evaluates one method at parameter `t`. `beta` is range-checked for every
/// method and used by KenLERP.
///
/// # Safety
/// `from`, `to` must be readable and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn dq_interpolate(
    method: DqMethod,
    beta: f64,
    t: f64,
    from: *const DqDualQuat,
    to: *const DqDualQuat,
    out: *mut DqDualQuat,
) -> DqStatus {
    guard(|| {
        let m = InterpolationMethod::new(method.into(), beta)?;
        let z = m.evaluate(t, &read(from)?.into(), &read(to)?.into())?;
        write(out, z.into())
    })
}

/// Samples `n` poses from `from` to `to`, exactly as `dqinterp interp` does.
///
/// # Safety
/// `from`, `to` must be readable; `out` must be writable. Free the handle
/// with `dq_trajectory_free`.
#[no_mangle]
pub unsafe extern "C" fn dq_trajectory_new(
    from: *const DqPose,
    to: *const DqPose,
    method: DqMethod,
    beta: f64,
    n: usize,
    out: *mut *mut DqTrajectory,
) -> DqStatus {
    guard(|| {
        if out.is_null() {
            return Err(DqStatus::NullPointer);
        }
        let from = read(from)?.to_pose()?;
        let to = read(to)?.to_pose()?;
        let m = InterpolationMethod::new(method.into(), beta)?;
        let report = interpolate_file(&from, &to, &m, n)?;
        let handle = Box::new(DqTrajectory {
            file: report.file,
            antipodal: report.antipodal_ambiguity,
        });
        write(out, Box::into_raw(handle))
    })
}

/// Parses and validates trajectory file text.
///
/// # Safety
/// `text` must be NUL-terminated; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dq_trajectory_parse(text: *const c_char, out: *mut *mut DqTrajectory) -> DqStatus {
    guard(|| {
        if out.is_null() {
            return Err(DqStatus::NullPointer);
        }
        let file = TrajectoryFile::parse(read_str(text)?).map_err(|_| DqStatus::InvalidFile)?;
        write(out, Box::into_raw(Box::new(DqTrajectory { file, antipodal: false })))
    })
}

/// # Safety
/// `handle` must come from this library and not be used afterwards. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn dq_trajectory_free(handle: *mut DqTrajectory) {
    if !handle.is_null() {
        drop(Box::from_raw(handle));
    }
}

/// Number of samples, or 0 for a null handle.
///
/// # Safety
/// `handle` must be null or valid.
#[no_mangle]
pub unsafe extern "C" fn dq_trajectory_len(handle: *const DqTrajectory) -> usize {
    handle.as_ref().map_or(0, |h| h.file.samples.len())
}

/// True when the endpoints were a half turn apart and the direction of
/// travel came from the tie-break. Always false for parsed files.
///
/// # Safety
/// `handle` must be null or valid.
#[no_mangle]
pub unsafe extern "C" fn dq_trajectory_antipodal(handle: *const DqTrajectory) -> bool {
    handle.as_ref().is_some_and(|h| h.antipodal)
}

/// # Safety
/// `handle` must be valid; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn dq_trajectory_method(handle: *const DqTrajectory, out: *mut DqMethod) -> DqStatus {
    guard(|| {
        let kind: MethodKind = read(handle)?
            .file
            .method
            .parse()
            .map_err(|_| DqStatus::InvalidMethod)?;
        write(out, kind.into())
    })
}

/// # Safety
/// `handle` must be valid; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn dq_trajectory_sample(
    handle: *const DqTrajectory,
    index: usize,
    out: *mut DqSample,
) -> DqStatus {
    guard(|| {
        let s = read(handle)?
            .file
            .samples
            .get(index)
            .ok_or(DqStatus::IndexOutOfRange)?;
        write(
            out,
            DqSample {
                t: s.t,
                pose: DqPose { pos: s.pos, rot: s.rot },
            },
        )
    })
}

/// # Safety
/// `handle` must be valid; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn dq_trajectory_metrics(handle: *const DqTrajectory, out: *mut DqMetrics) -> DqStatus {
    guard(|| {
        let m = &read(handle)?.file.metrics;
        write(
            out,
            DqMetrics {
                path_length: m.path_length,
                total_rotation: m.total_rotation,
                max_linear_step: m.max_linear_step,
                max_angular_step: m.max_angular_step,
            },
        )
    })
}

/// Writes the file text plus a terminating NUL into `buf`. `required`
/// (optional) receives the needed size including the NUL; when `cap` is too
/// small the call returns `DQ_STATUS_BUFFER_TOO_SMALL` and writes nothing
/// else. Pass `buf = NULL, cap = 0` to query the size.
///
/// # Safety
/// `handle` must be valid; `buf` must hold `cap` bytes; `required` null or writable.
#[no_mangle]
pub unsafe extern "C" fn dq_trajectory_to_text(
    handle: *const DqTrajectory,
    buf: *mut c_char,
    cap: usize,
    required: *mut usize,
) -> DqStatus {
    guard(|| {
        let text = read(handle)?.file.to_text();
        let needed = text.len() + 1;
        if !required.is_null() {
            required.write(needed);
        }
        if cap < needed {
            return Err(DqStatus::BufferTooSmall);
        }
        if buf.is_null() {
            return Err(DqStatus::NullPointer);
        }
        ptr::copy_nonoverlapping(text.as_ptr(), buf.cast::<u8>(), text.len());
        buf.add(text.len()).write(0);
        Ok(())
    })
}
