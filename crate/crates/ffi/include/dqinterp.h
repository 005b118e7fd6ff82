#ifndef DQINTERP_H
#define DQINTERP_H

/* Generated by cbindgen from crates/ffi; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum {
  DQ_METHOD_SEP = 0,
  DQ_METHOD_DLB = 1,
  DQ_METHOD_SCLERP = 2,
  DQ_METHOD_KENLERP = 3,
} DqMethod;

typedef enum {
  DQ_STATUS_OK = 0,
  DQ_STATUS_NULL_POINTER = 1,
  DQ_STATUS_NOT_UNIT = 2,
  DQ_STATUS_ZERO_REAL_PART = 3,
  DQ_STATUS_INVALID_AXIS = 4,
  DQ_STATUS_INVALID_MATRIX = 5,
  DQ_STATUS_DEGENERATE_BLEND = 6,
  DQ_STATUS_BETA_OUT_OF_RANGE = 7,
  DQ_STATUS_INVALID_COUNT = 8,
  DQ_STATUS_INVALID_POSE = 9,
  DQ_STATUS_INVALID_METHOD = 10,
  DQ_STATUS_INVALID_FILE = 11,
  DQ_STATUS_INVALID_UTF8 = 12,
  DQ_STATUS_BUFFER_TOO_SMALL = 13,
  DQ_STATUS_INDEX_OUT_OF_RANGE = 14,
  DQ_STATUS_PANIC = 15,
} DqStatus;

/**
 * Opaque trajectory handle.
 */
typedef struct DqTrajectory DqTrajectory;

/**
 * Translation `pos` and rotation `rot = [w, x, y, z]`.
 */
typedef struct {
  double pos[3];
  double rot[4];
} DqPose;

/**
 * Real and dual parts, each `[w, x, y, z]`.
 */
typedef struct {
  double real[4];
  double dual[4];
} DqDualQuat;

typedef struct {
  double theta;
  double d;
  double axis_dir[3];
  double axis_moment[3];
} DqScrew;

typedef struct {
  double t;
  DqPose pose;
} DqSample;

typedef struct {
  double path_length;
  double total_rotation;
  double max_linear_step;
  double max_angular_step;
} DqMetrics;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Static, NUL-terminated description of a status code.
 */
const char *dq_status_message(DqStatus status);

/**
 * Parses `"px py pz qw qx qy qz"`.
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
DqStatus dq_pose_parse(const char *text, DqPose *out);

/**
 * # Safety
 * `pose` must be readable and `out` writable.
 */
DqStatus dq_pose_to_dq(const DqPose *pose, DqDualQuat *out);

/**
 * # Safety
 * `dq` must be readable and `out` writable.
 */
DqStatus dq_dq_to_pose(const DqDualQuat *dq, DqPose *out);

/**
 * # Safety
 * `dq` must be readable and `out` writable.
 */
DqStatus dq_dq_to_screw(const DqDualQuat *dq, DqScrew *out);

/**
 * # Safety
 * `screw` must be readable and `out` writable.
 */
DqStatus dq_screw_to_dq(const DqScrew *screw, DqDualQuat *out);

/**
 * `out = a * b`.
 *
 * # Safety
 * `a`, `b` must be readable and `out` writable.
 */
DqStatus dq_mul(const DqDualQuat *a, const DqDualQuat *b, DqDualQuat *out);

/**
 * Applies a unit dual quaternion to the point `point[0..3]`.
 *
 * # Safety
 * `dq` must be readable, `point` and `out` must each hold 3 doubles.
 */
DqStatus dq_transform_point(const DqDualQuat *dq, const double (*point)[3], double (*out)[3]);

/**
 * Evaluates one method at parameter `t`. `beta` is range-checked for every
 * method and used by KenLERP.
 *
 * # Safety
 * `from`, `to` must be readable and `out` writable.
 */
DqStatus dq_interpolate(DqMethod method,
                        double beta,
                        double t,
                        const DqDualQuat *from,
                        const DqDualQuat *to,
                        DqDualQuat *out);

/**
 * Samples `n` poses from `from` to `to`, exactly as `dqinterp interp` does.
 *
 * # Safety
 * `from`, `to` must be readable; `out` must be writable. Free the handle
 * with `dq_trajectory_free`.
 */
DqStatus dq_trajectory_new(const DqPose *from,
                           const DqPose *to,
                           DqMethod method,
                           double beta,
                           size_t n,
                           DqTrajectory **out);

/**
 * Parses and validates trajectory file text.
 *
 * # Safety
 * `text` must be NUL-terminated; `out` must be writable.
 */
DqStatus dq_trajectory_parse(const char *text, DqTrajectory **out);

/**
 * # Safety
 * `handle` must come from this library and not be used afterwards. Null is ignored.
 */
void dq_trajectory_free(DqTrajectory *handle);

/**
 * Number of samples, or 0 for a null handle.
 *
 * # Safety
 * `handle` must be null or valid.
 */
size_t dq_trajectory_len(const DqTrajectory *handle);

/**
 * True when the endpoints were a half turn apart and the direction of
 * travel came from the tie-break. Always false for parsed files.
 *
 * # Safety
 * `handle` must be null or valid.
 */
bool dq_trajectory_antipodal(const DqTrajectory *handle);

/**
 * # Safety
 * `handle` must be valid; `out` writable.
 */
DqStatus dq_trajectory_method(const DqTrajectory *handle, DqMethod *out);

/**
 * # Safety
 * `handle` must be valid; `out` writable.
 */
DqStatus dq_trajectory_sample(const DqTrajectory *handle, size_t index, DqSample *out);

/**
 * # Safety
 * `handle` must be valid; `out` writable.
 */
DqStatus dq_trajectory_metrics(const DqTrajectory *handle, DqMetrics *out);

/**
 * Writes the file text plus a terminating NUL into `buf`. `required`
 * (optional) receives the needed size including the NUL; when `cap` is too
 * small the call returns `DQ_STATUS_BUFFER_TOO_SMALL` and writes nothing
 * else. Pass `buf = NULL, cap = 0` to query the size.
 *
 * # Safety
 * `handle` must be valid; `buf` must hold `cap` bytes; `required` null or writable.
 */
DqStatus dq_trajectory_to_text(const DqTrajectory *handle, char *buf, size_t cap, size_t *required);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* DQINTERP_H */
