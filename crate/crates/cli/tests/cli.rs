//! End-to-end checks of the command surface: exit codes, formats, and the
//! documented examples.

use std::io::Write;
use std::process::{Command, Output};

use tempfile::NamedTempFile;

fn hsdim(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hsdim"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn write_temp(content: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().unwrap();
    f.write_all(content.as_bytes()).unwrap();
    f.flush().unwrap();
    f
}

#[test]
fn partition_prints_the_first_values() {
    let out = hsdim(&["partition", "-N", "6"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "1 1 2 3 5 7 11");
}

#[test]
fn hilbert_emits_series_file_format() {
    let monoid = write_temp("vars: x y\nx\nx*y\nx*y^2\nx*y^3\nx*y^4\n");
    let out = hsdim(&["hilbert", monoid.path().to_str().unwrap(), "-N", "5"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let body: Vec<&str> = text.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(body, vec!["1", "1", "2", "3", "4", "5"]);
}

#[test]
fn dim_reports_three_for_the_full_monoid() {
    let monoid = write_temp("vars: x y z\nx\ny\nz\n");
    let out = hsdim(&[
        "dim",
        monoid.path().to_str().unwrap(),
        "--growth",
        "120",
        "--format",
        "machine",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("krull_dim=3"), "{text}");
    assert!(text.contains("trdeg=3"), "{text}");
    assert!(text.contains("pole_order=3"), "{text}");
    assert!(text.contains("all_equal=true"), "{text}");
}

#[test]
fn fit_recovers_the_staircase_numerator() {
    let coeffs: Vec<String> = (0..=60u64)
        .map(|n| if n == 0 { 1 } else { n }.to_string())
        .collect();
    let series = write_temp(&(coeffs.join("\n") + "\n"));
    let out = hsdim(&[
        "fit",
        series.path().to_str().unwrap(),
        "--denom",
        "1,1",
        "--format",
        "machine",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("numerator=t^2 - t + 1"), "{text}");
    assert!(text.contains("pole_order=2"), "{text}");
}

#[test]
fn classify_reports_the_stable_keys() {
    let coeffs: Vec<String> = (0..=40u32).map(|n| (2u64.pow(n) + 1).to_string()).collect();
    let series = write_temp(&(coeffs.join("\n") + "\n"));
    let out = hsdim(&[
        "classify",
        series.path().to_str().unwrap(),
        "--format",
        "machine",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    for key in [
        "verdict=",
        "pole_order=",
        "numerator=",
        "denominator=",
        "radius_estimate=",
        "evidence=",
    ] {
        assert!(text.contains(key), "missing {key} in {text}");
    }
    assert!(text.contains("NotHilbertSerre(radius"), "{text}");
}

#[test]
fn sagbi_lists_generators_and_stabilization() {
    let sub = write_temp("vars: x y\norder: grlex\ngenerators:\nx + y\nx*y\nx*y^2\n");
    let out = hsdim(&[
        "sagbi",
        sub.path().to_str().unwrap(),
        "-D",
        "6",
        "--format",
        "machine",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("new_generators=x@1, x*y@2, x*y^2@3, x*y^3@4, x*y^4@5, x*y^5@6"), "{text}");
    assert!(text.contains("stabilized=not stabilized by degree 6"), "{text}");
}

#[test]
fn gallery_single_case_passes() {
    let out = hsdim(&["gallery", "ex-6.4-d"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("case ex-6.4-d: PASS"), "{text}");
}

#[test]
fn gallery_unknown_id_is_a_usage_error() {
    let out = hsdim(&["gallery", "ex-0.0"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr).into_owned();
    assert!(err.contains("valid ids"), "{err}");
}

#[test]
fn malformed_monoid_file_is_a_usage_error_with_position() {
    let monoid = write_temp("vars: x y\nx\nx*w\n");
    let out = hsdim(&["hilbert", monoid.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr).into_owned();
    assert!(err.contains("line 3"), "{err}");
    assert!(err.contains("column 3"), "{err}");
}

#[test]
fn machine_format_is_bit_stable() {
    let a = hsdim(&["gallery", "ex-6.4-d", "--format", "machine"]);
    let b = hsdim(&["gallery", "ex-6.4-d", "--format", "machine"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    assert!(text.contains("[ex-6.4-d]"), "{text}");
    assert!(text.contains("pass=true"), "{text}");
    assert!(text.contains("pole_orders=d=1:2 d=2:3 d=3:4 d=4:5 d=5:6"), "{text}");
}

#[test]
fn malformed_inline_arguments_are_usage_errors() {
    let series = write_temp("1\n1\n");
    let out = hsdim(&["fit", series.path().to_str().unwrap(), "--denom", "1,banana"]);
    assert_eq!(out.status.code(), Some(2));
    let out = hsdim(&["gallery", "ex-6.3", "--seq", "1,?"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn check_subcommand_is_deterministic_and_green() {
    let a = hsdim(&["check", "--seed", "11", "--cases", "5"]);
    assert!(a.status.success(), "{}", stdout(&a));
    let b = hsdim(&["check", "--seed", "11", "--cases", "5"]);
    assert_eq!(a.stdout, b.stdout);
}
