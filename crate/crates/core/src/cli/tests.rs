use std::f64::consts::FRAC_1_SQRT_2;

use clap::Parser;

use super::*;
use crate::conversions::{dq_to_pose, dq_to_screw, pose_to_dq};
use crate::interpolation::{sclerp, sep_lerp};

fn pose(s: &str) -> Pose {
    parse_pose(s).unwrap()
}

fn method(kind: MethodKind, beta: f64) -> InterpolationMethod {
    InterpolationMethod::new(kind, beta).unwrap()
}

#[test]
fn parse_pose_cases() {
    assert_eq!(pose("0 0 0 1 0 0 0"), Pose::IDENTITY);
    let p = pose("1 2 3 0.70710678 0 0 0.70710678");
    assert_eq!(p.translation, Vec3::new(1.0, 2.0, 3.0));
    assert!(p.rotation.max_abs_diff(Quaternion::new(FRAC_1_SQRT_2, 0.0, 0.0, FRAC_1_SQRT_2)) < 1e-15);
    assert!((p.rotation.norm() - 1.0).abs() < 1e-15);
    assert!(matches!(parse_pose("1 2 3 2 0 0 0"), Err(CliError::PoseNotUnit { .. })));
    assert!(matches!(parse_pose("1 2 3 1 0 0"), Err(CliError::InvalidPose { .. })));
    assert!(matches!(parse_pose("1 2 3 1 0 0 0 0"), Err(CliError::InvalidPose { .. })));
    assert!(matches!(parse_pose("1 2 x 1 0 0 0"), Err(CliError::InvalidPose { .. })));
    assert!(matches!(parse_pose("1 2 nan 1 0 0 0"), Err(CliError::InvalidPose { .. })));
    assert!(matches!(parse_pose(""), Err(CliError::InvalidPose { .. })));
    assert!(parse_pose("\t-1  2 3\n1 0 0 0 ").is_ok());
}

#[test]
fn identity_to_identity_file() {
    for kind in MethodKind::ALL {
        let r = interpolate_file(&Pose::IDENTITY, &Pose::IDENTITY, &method(kind, 0.5), 3).unwrap();
        assert_eq!(r.file.samples.len(), 3);
        for s in &r.file.samples {
            assert_eq!(s.pos, [0.0; 3]);
            assert_eq!(s.rot, [1.0, 0.0, 0.0, 0.0]);
        }
        assert_eq!(r.file.metrics, MetricsRecord {
            path_length: 0.0,
            total_rotation: 0.0,
            max_linear_step: 0.0,
            max_angular_step: 0.0,
        });
    }
}

#[test]
fn two_sample_file_holds_endpoints() {
    let from = pose("1 -2 0.5 0.5 0.5 0.5 0.5");
    let to = pose("-3 4 1 0 0 0.6 0.8");
    let r = interpolate_file(&from, &to, &method(MethodKind::Sclerp, 0.0), 2).unwrap();
    let near = |a: &[f64], b: &[f64]| a.iter().zip(b).all(|(x, y)| (x - y).abs() < 1e-9);
    assert!(near(&r.file.samples[0].pos, &from.translation.to_array()));
    assert!(near(&r.file.samples[0].rot, &from.rotation.canonicalize().to_array()));
    assert!(near(&r.file.samples[1].pos, &to.translation.to_array()));
    assert!(near(&r.file.samples[1].rot, &to.rotation.canonicalize().to_array()));
}

#[test]
fn kenlerp_zero_matches_sep_file() {
    let from = pose("1 -2 0.5 0.5 0.5 0.5 0.5");
    let to = pose("-3 4 1 0 0 0.6 0.8");
    let k = interpolate_file(&from, &to, &method(MethodKind::Kenlerp, 0.0), 21).unwrap();
    let s = interpolate_file(&from, &to, &method(MethodKind::Sep, 0.0), 21).unwrap();
    for (a, b) in k.file.samples.iter().zip(&s.file.samples) {
        assert_eq!(a.t, b.t);
        for i in 0..3 {
            assert!((a.pos[i] - b.pos[i]).abs() < 1e-9);
        }
        for i in 0..4 {
            assert!((a.rot[i] - b.rot[i]).abs() < 1e-9);
        }
    }
}

#[test]
fn file_text_round_trips_and_validates() {
    let from = pose("1 -2 0.5 0.5 0.5 0.5 0.5");
    let to = pose("-3 4 1 0 0 0.6 0.8");
    let r = interpolate_file(&from, &to, &method(MethodKind::Kenlerp, 0.25), 17).unwrap();
    let text = r.file.to_text();
    let back = TrajectoryFile::parse(&text).unwrap();
    assert_eq!(back, r.file);
    assert_eq!(back.to_text(), text);
    assert!(text.ends_with('\n') && !text.contains('\r'));
}

#[test]
fn validator_rejects_corruption() {
    let r = interpolate_file(&Pose::IDENTITY, &pose("1 2 3 0 1 0 0"), &method(MethodKind::Dlb, 0.0), 5).unwrap();
    let text = r.file.to_text();
    let corrupt = |from: &str, to: &str| {
        assert!(text.contains(from), "{from}");
        text.replacen(from, to, 1)
    };
    let cases = [
        corrupt("version = 1", "version = 2"),
        corrupt("method = \"dlb\"", "method = \"lerp\""),
        corrupt("beta = 0.0", "beta = -1.0"),
        corrupt("t = 0.25", "t = 0.75"),
        corrupt("t = 1.0", "t = 1.5"),
        corrupt("rot = [1.0, 0.0, 0.0, 0.0]", "rot = [2.0, 0.0, 0.0, 0.0]"),
        corrupt("pos = [0.0, 0.0, 0.0]", "pos = [0.0, 0.0]"),
        corrupt("path_length = ", "path_length = -"),
        corrupt("version = 1", "version = 1\nextra = 3"),
        text.replace("[metrics]", "[metric]"),
        text[..text.len() / 2].to_owned(),
    ];
    for bad in &cases {
        assert!(TrajectoryFile::parse(bad).is_err(), "accepted:\n{bad}");
    }
    assert!(TrajectoryFile::parse(&text).is_ok());
}

#[test]
fn compare_pure_translation_lengths_agree() {
    let mut out = Vec::new();
    let r = run_compare(&Pose::IDENTITY, &pose("3 0 4 1 0 0 0"), 0.5, 11, None, &mut out).unwrap();
    assert_eq!(r.runs.len(), 4);
    for kind in MethodKind::ALL {
        assert!((r.metrics(kind).unwrap().path_length - 5.0).abs() < 1e-9);
    }
    let table = String::from_utf8(out).unwrap();
    assert_eq!(table.lines().count(), 5);
    assert!(table.starts_with("method\tpath_length"));
}

#[test]
fn compare_offset_axis_separates_sep_and_sclerp() {
    // Quarter turn about the z axis through (1, 0, 0): the screw traces an
    // arc of radius 1, the decoupled path a straight chord.
    let to = pose("1 -1 0 0.7071067811865476 0 0 0.7071067811865476");
    let s = dq_to_screw(&pose_to_dq(&to).unwrap()).unwrap();
    assert!(s.axis_point().max_abs_diff(Vec3::X) < 1e-12);
    let r = run_compare(&Pose::IDENTITY, &to, 1.0, 401, None, &mut io::sink()).unwrap();
    let sep = r.metrics(MethodKind::Sep).unwrap();
    let sc = r.metrics(MethodKind::Sclerp).unwrap();
    let ken = r.metrics(MethodKind::Kenlerp).unwrap();
    assert!((sep.path_length - 2.0_f64.sqrt()).abs() < 1e-9);
    assert!((sc.path_length - std::f64::consts::FRAC_PI_2).abs() < 1e-5);
    assert!((ken.path_length - sc.path_length).abs() < 1e-9);
    assert!((ken.total_rotation - sc.total_rotation).abs() < 1e-9);

    // through the origin all methods stay put
    let spin = pose("0 0 0 0.7071067811865476 0 0 0.7071067811865476");
    let r = run_compare(&Pose::IDENTITY, &spin, 0.5, 21, None, &mut io::sink()).unwrap();
    for kind in MethodKind::ALL {
        assert!(r.metrics(kind).unwrap().path_length < 1e-12);
    }
}

#[test]
fn compare_writes_files_into_directory() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("cmp");
    run_compare(&Pose::IDENTITY, &pose("1 0 0 1 0 0 0"), 0.5, 4, Some(&out), &mut io::sink()).unwrap();
    for kind in MethodKind::ALL {
        let text = fs::read_to_string(out.join(format!("{kind}.toml"))).unwrap();
        let file = TrajectoryFile::parse(&text).unwrap();
        assert_eq!(file.method, kind.name());
        assert_eq!(file.beta, if kind == MethodKind::Kenlerp { 0.5 } else { 0.0 });
    }
}

#[test]
fn run_reports_errors() {
    let cli = Cli::try_parse_from(["dqinterp", "interp", "--from", "0 0 0 1 0 0 0", "--to", "0 0 0 2 0 0 0", "--method", "sep"]).unwrap();
    let err = run(&cli, &mut io::sink(), &mut io::sink()).unwrap_err();
    assert!(matches!(err, CliError::PoseNotUnit { .. }));

    let cli = Cli::try_parse_from(["dqinterp", "interp", "--from", "0 0 0 1 0 0 0", "--to", "0 0 0 1 0 0 0", "--method", "kenlerp", "--beta", "9"]).unwrap();
    assert!(matches!(run(&cli, &mut io::sink(), &mut io::sink()), Err(CliError::Core(crate::Error::BetaOutOfRange { .. }))));

    let cli = Cli::try_parse_from(["dqinterp", "interp", "--from", "0 0 0 1 0 0 0", "--to", "0 0 0 1 0 0 0", "--method", "sep", "--samples", "1"]).unwrap();
    assert!(matches!(run(&cli, &mut io::sink(), &mut io::sink()), Err(CliError::Core(crate::Error::InvalidCount(1)))));

    assert!(Cli::try_parse_from(["dqinterp", "interp", "--from", "0 0 0 1 0 0 0", "--to", "0 0 0 1 0 0 0", "--method", "sep", "--bogus"]).is_err());
    assert!(Cli::try_parse_from(["dqinterp", "interp", "--from", "0 0 0 1 0 0 0", "--to", "0 0 0 1 0 0 0", "--method", "lerp"]).is_err());
}

#[test]
fn run_warns_on_antipodal_endpoints() {
    let cli = Cli::try_parse_from(["dqinterp", "interp", "--from", "0 0 0 1 0 0 0", "--to", "0 0 0 0 0 0 1", "--method", "sclerp", "--samples", "3"]).unwrap();
    let mut diag = Vec::new();
    run(&cli, &mut io::sink(), &mut diag).unwrap();
    assert!(String::from_utf8(diag).unwrap().starts_with("warning:"));
}

#[test]
fn negative_pose_values_parse_as_flag_values() {
    let cli = Cli::try_parse_from(["dqinterp", "interp", "--from", "-1 -2 -3 1 0 0 0", "--to", "0 0 0 1 0 0 0", "--method", "sep"]).unwrap();
    let mut out = Vec::new();
    run(&cli, &mut out, &mut io::sink()).unwrap();
    let file = TrajectoryFile::parse(std::str::from_utf8(&out).unwrap()).unwrap();
    assert_eq!(file.from.pos, [-1.0, -2.0, -3.0]);
    assert_eq!(file.samples.len(), DEFAULT_SAMPLES);
}

#[test]
fn kenlerp_one_matches_sclerp_and_zero_matches_sep_midpose() {
    let from = pose("1 -2 0.5 0.5 0.5 0.5 0.5");
    let to = pose("-3 4 1 0 0 0.6 0.8");
    let a = pose_to_dq(&from).unwrap();
    let b = pose_to_dq(&to).unwrap();
    let k1 = interpolate_file(&from, &to, &method(MethodKind::Kenlerp, 1.0), 3).unwrap();
    let mid = dq_to_pose(&sclerp(0.5, &a, &b).unwrap()).unwrap();
    assert!(Vec3::from(k1.file.samples[1].pos).max_abs_diff(mid.translation) < 1e-9);
    let k0 = interpolate_file(&from, &to, &method(MethodKind::Kenlerp, 0.0), 3).unwrap();
    let mid = dq_to_pose(&sep_lerp(0.5, &a, &b).unwrap()).unwrap();
    assert!(Vec3::from(k0.file.samples[1].pos).max_abs_diff(mid.translation) < 1e-9);
}
