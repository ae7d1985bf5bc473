//! End-to-end tests of the `oft` binary: file formats, exit codes, and
//! command semantics.

use std::path::Path;
use std::process::{Command, Output};

use oft_core::field::{Domain, OctField3, SamplingGrid};
use oft_core::octonion::Octonion;
use oft_core::of3b;
use oft_core::quad_complex::{qmul, QuadComplex};
use oft_core::transform::dsoft_fast;

fn oft_bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_oft"))
}

fn run_in(dir: &Path, args: &[&str]) -> Output {
    oft_bin()
        .current_dir(dir)
        .args(args)
        .output()
        .expect("failed to launch oft binary")
}

fn assert_code(output: &Output, expected: i32) {
    assert_eq!(
        output.status.code(),
        Some(expected),
        "stdout: {}\nstderr: {}",
        String::from_utf8_lossy(&output.stdout),
        String::from_utf8_lossy(&output.stderr)
    );
}

#[test]
fn gen_delta_transforms_to_all_ones() {
    let dir = tempfile::tempdir().unwrap();
    assert_code(&run_in(dir.path(), &["gen", "delta", "4", "4", "4", "--out", "d.of3b"]), 0);
    assert_code(&run_in(dir.path(), &["oft", "d.of3b", "spec.of3b"]), 0);
    let spectrum = of3b::read_file(&dir.path().join("spec.of3b")).unwrap();
    assert_eq!(spectrum.domain, Domain::Frequency);
    for idx in spectrum.grid.indices() {
        assert!((spectrum[idx] - Octonion::ONE).norm() < 1e-12);
    }
}

#[test]
fn gen_random_is_byte_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    assert_code(&run_in(dir.path(), &["gen", "random", "8", "8", "8", "--seed", "7", "--out", "a.of3b"]), 0);
    assert_code(&run_in(dir.path(), &["gen", "random", "8", "8", "8", "--seed", "7", "--out", "b.of3b"]), 0);
    let a = std::fs::read(dir.path().join("a.of3b")).unwrap();
    let b = std::fs::read(dir.path().join("b.of3b")).unwrap();
    assert_eq!(a, b);
    assert_eq!(a.len(), 4 + 4 + 1 + 24 + 24 + 24 + 64 * 512);
}

#[test]
fn gen_random_without_seed_is_a_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let out = run_in(dir.path(), &["gen", "random", "4", "4", "4", "--out", "r.of3b"]);
    assert_code(&out, 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("--seed"));
}

#[test]
fn gen_gaussian_has_unit_center() {
    let dir = tempfile::tempdir().unwrap();
    assert_code(
        &run_in(dir.path(), &["gen", "gaussian", "16", "16", "16", "--spacing", "0.5", "--out", "g.of3b"]),
        0,
    );
    let field = of3b::read_file(&dir.path().join("g.of3b")).unwrap();
    assert_eq!(field[[0, 0, 0]], Octonion::ONE);
    assert_eq!(field.grid.spacing, [0.5; 3]);
}

#[test]
fn forward_inverse_roundtrip_is_tight() {
    let dir = tempfile::tempdir().unwrap();
    assert_code(&run_in(dir.path(), &["gen", "random", "8", "8", "8", "--seed", "3", "--out", "u.of3b"]), 0);
    assert_code(&run_in(dir.path(), &["oft", "u.of3b", "U.of3b"]), 0);
    assert_code(&run_in(dir.path(), &["oft", "U.of3b", "u2.of3b", "--inverse"]), 0);
    let u = of3b::read_file(&dir.path().join("u.of3b")).unwrap();
    let u2 = of3b::read_file(&dir.path().join("u2.of3b")).unwrap();
    assert_eq!(u2.domain, Domain::Space);
    assert!(u.max_rel_diff(&u2) < 1e-10);
}

#[test]
fn naive_and_fast_transforms_agree() {
    let dir = tempfile::tempdir().unwrap();
    assert_code(&run_in(dir.path(), &["gen", "random", "4", "4", "4", "--seed", "5", "--out", "u.of3b"]), 0);
    assert_code(&run_in(dir.path(), &["oft", "u.of3b", "fast.of3b"]), 0);
    assert_code(&run_in(dir.path(), &["oft", "u.of3b", "slow.of3b", "--naive"]), 0);
    let fast = of3b::read_file(&dir.path().join("fast.of3b")).unwrap();
    let slow = of3b::read_file(&dir.path().join("slow.of3b")).unwrap();
    assert!(fast.max_rel_diff(&slow) < 1e-10);
}

#[test]
fn wrong_magic_exits_2_with_diagnostic() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("junk.of3b"), b"JUNKJUNKJUNKJUNK").unwrap();
    let out = run_in(dir.path(), &["oft", "junk.of3b", "x.of3b"]);
    assert_code(&out, 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("OF3B"));
    assert!(out.stdout.is_empty());
}

#[test]
fn domain_mismatch_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    assert_code(&run_in(dir.path(), &["gen", "random", "4", "4", "4", "--seed", "1", "--out", "u.of3b"]), 0);
    // forward output is frequency-domain; forwarding it again must refuse
    assert_code(&run_in(dir.path(), &["oft", "u.of3b", "U.of3b"]), 0);
    assert_code(&run_in(dir.path(), &["oft", "U.of3b", "x.of3b"]), 3);
    // inverse of a space-domain field must refuse as well
    assert_code(&run_in(dir.path(), &["oft", "u.of3b", "x.of3b", "--inverse"]), 3);
}

#[test]
fn verify_passes_and_filters() {
    let dir = tempfile::tempdir().unwrap();
    let out = run_in(dir.path(), &["verify", "--seed", "42", "--sizes", "4"]);
    assert_code(&out, 0);
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.lines().count() > 20);
    for line in text.lines() {
        assert!(line.ends_with("PASS"), "unexpected line: {line}");
        let fields: Vec<&str> = line.split_whitespace().collect();
        assert_eq!(fields.len(), 4, "line not machine-parseable: {line}");
        fields[1].parse::<f64>().unwrap();
        fields[2].parse::<f64>().unwrap();
    }

    let filtered = run_in(dir.path(), &["verify", "--seed", "42", "--sizes", "4", "--suite", "parseval"]);
    assert_code(&filtered, 0);
    let text = String::from_utf8_lossy(&filtered.stdout);
    assert_eq!(text.lines().count(), 1);
    assert!(text.starts_with("parseval_n4 "));
}

#[test]
fn verify_output_is_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["verify", "--seed", "9", "--sizes", "4", "--suite", "modulation"];
    let first = run_in(dir.path(), &args);
    let second = run_in(dir.path(), &args);
    assert_code(&first, 0);
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn pde_heat_zero_forcing_reports_one_singular_index() {
    let dir = tempfile::tempdir().unwrap();
    let grid = SamplingGrid::cubic(8);
    of3b::write_file(&dir.path().join("zero.of3b"), &OctField3::zeros(grid, Domain::Space)).unwrap();
    let out = run_in(dir.path(), &["pde", "heat", "zero.of3b", "u.of3b"]);
    assert_code(&out, 0);
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "singular 1 obstructed 0");
    let solution = of3b::read_file(&dir.path().join("u.of3b")).unwrap();
    assert!(solution.max_abs() < 1e-14);
}

#[test]
fn pde_heat_dc_forcing_exits_4() {
    let dir = tempfile::tempdir().unwrap();
    let grid = SamplingGrid::cubic(8);
    let ones = OctField3::from_fn(grid, Domain::Space, |_| Octonion::ONE);
    of3b::write_file(&dir.path().join("ones.of3b"), &ones).unwrap();
    let out = run_in(dir.path(), &["pde", "heat", "ones.of3b", "u.of3b"]);
    assert_code(&out, 4);
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "singular 1 obstructed 1");
}

#[test]
fn lti_delta_cascade_is_plain_filtering() {
    let dir = tempfile::tempdir().unwrap();
    let grid = SamplingGrid::cubic(8);
    let h = OctField3::random_real(grid, 21);
    let u = OctField3::random_real(grid, 22);
    of3b::write_file(&dir.path().join("h.of3b"), &h).unwrap();
    of3b::write_file(&dir.path().join("u.of3b"), &u).unwrap();
    of3b::write_file(&dir.path().join("delta.of3b"), &OctField3::delta(grid, [0, 0, 0])).unwrap();

    let out = run_in(
        dir.path(),
        &["lti", "cascade(imp(h.of3b), imp(delta.of3b))", "u.of3b", "v.of3b"],
    );
    assert_code(&out, 0);
    let filtered = of3b::read_file(&dir.path().join("v.of3b")).unwrap();
    let expected = oft_core::lti::LtiSystem::from_impulse(&h).apply(&u).unwrap();
    assert!(filtered.max_rel_diff(&expected) < 1e-12);
}

#[test]
fn lti_feedback_matches_fixed_point_iteration() {
    let dir = tempfile::tempdir().unwrap();
    let grid = SamplingGrid::cubic(8);
    // small-gain impulse responses keep the loop a contraction
    let h1 = OctField3::random_real(grid, 31).map(|o| o.scale(0.001));
    let h2 = OctField3::random_real(grid, 32).map(|o| o.scale(0.001));
    let u = OctField3::random_real(grid, 33);
    of3b::write_file(&dir.path().join("h1.of3b"), &h1).unwrap();
    of3b::write_file(&dir.path().join("h2.of3b"), &h2).unwrap();
    of3b::write_file(&dir.path().join("u.of3b"), &u).unwrap();

    let out = run_in(
        dir.path(),
        &["lti", "feedback(imp(h1.of3b), imp(h2.of3b))", "u.of3b", "v.of3b"],
    );
    assert_code(&out, 0);
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "singular 0");
    let filtered = of3b::read_file(&dir.path().join("v.of3b")).unwrap();

    // frequency-domain fixed point of V = H1 (U - H2 V)
    let big_u = dsoft_fast(&u);
    let big_h1 = dsoft_fast(&h1);
    let big_h2 = dsoft_fast(&h2);
    let mut v: Vec<QuadComplex> = vec![QuadComplex::ZERO; grid.len()];
    for _ in 0..60 {
        for (i, idx) in grid.indices().enumerate() {
            let u_hat = QuadComplex::from_octonion(&big_u[idx]);
            let h1_hat = QuadComplex::from_octonion(&big_h1[idx]);
            let h2_hat = QuadComplex::from_octonion(&big_h2[idx]);
            let w = u_hat - qmul(&h2_hat, &v[i]);
            v[i] = qmul(&h1_hat, &w);
        }
    }
    let mut v_field = OctField3::zeros(grid, Domain::Frequency);
    for (i, idx) in grid.indices().enumerate() {
        v_field[idx] = v[i].to_octonion();
    }
    let expected = oft_core::transform::idsoft(&v_field);
    let scale = expected.max_abs().max(1e-12);
    let mut worst = 0.0f64;
    for idx in grid.indices() {
        worst = worst.max((filtered[idx] - expected[idx]).max_abs());
    }
    assert!(worst / scale < 1e-8, "fixed-point mismatch {worst}");
}

#[test]
fn lti_parse_error_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let grid = SamplingGrid::cubic(4);
    of3b::write_file(&dir.path().join("u.of3b"), &OctField3::random_real(grid, 1)).unwrap();
    let out = run_in(dir.path(), &["lti", "cascade(imp(a.of3b)", "u.of3b", "v.of3b"]);
    assert_code(&out, 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("parse error"));
}

#[test]
fn lti_shape_mismatch_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    of3b::write_file(
        &dir.path().join("h.of3b"),
        &OctField3::random_real(SamplingGrid::cubic(4), 1),
    )
    .unwrap();
    of3b::write_file(
        &dir.path().join("u.of3b"),
        &OctField3::random_real(SamplingGrid::cubic(8), 2),
    )
    .unwrap();
    let out = run_in(dir.path(), &["lti", "imp(h.of3b)", "u.of3b", "v.of3b"]);
    assert_code(&out, 2);
}

#[test]
fn stdout_carries_reports_stderr_carries_diagnostics() {
    let dir = tempfile::tempdir().unwrap();
    let missing = run_in(dir.path(), &["oft", "missing.of3b", "x.of3b"]);
    assert_code(&missing, 2);
    assert!(missing.stdout.is_empty());
    assert!(!missing.stderr.is_empty());
}
