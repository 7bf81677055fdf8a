//! The `fracevo` binary: exit codes, outputs and determinism.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn fracevo(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fracevo")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn help_and_version_exit_zero() {
    assert_eq!(fracevo(&["--help"]).status.code(), Some(0));
    assert_eq!(fracevo(&["--version"]).status.code(), Some(0));
    assert_eq!(fracevo(&["resolvent", "--help"]).status.code(), Some(0));
}

#[test]
fn invalid_input_exits_one() {
    assert_eq!(fracevo(&[]).status.code(), Some(1));
    assert_eq!(fracevo(&["nosuch"]).status.code(), Some(1));
    assert_eq!(fracevo(&["ml", "--alpha", "abc", "--z", "1"]).status.code(), Some(1));
    assert_eq!(fracevo(&["ml", "--alpha", "-1", "--z", "1"]).status.code(), Some(1));
    assert_eq!(fracevo(&["resolvent", "--kernel", "power:0"]).status.code(), Some(1));
}

#[test]
fn numerical_failure_exits_two() {
    let o = fracevo(&["picard", "--norm-w0", "1e3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("diverged"));
}

#[test]
fn small_picard_run_converges() {
    let o = fracevo(&["picard", "--t-max", "0.1"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn ml_prints_the_exponential() {
    let o = fracevo(&["ml", "--alpha", "1", "--z", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("2.718281828459045"), "{text}");
}

#[test]
fn every_selftest_passes() {
    for name in ["ml", "mlbound", "fracderiv", "sonine", "resolvent", "catalog", "countfit", "decay", "bound", "region", "picard"] {
        let o = fracevo(&[name, "--selftest"]);
        let text = stdout(&o);
        assert_eq!(o.status.code(), Some(0), "{name}: {text}");
        assert!(text.lines().all(|l| l.starts_with("PASS ")), "{text}");
    }
}

fn run_to(dir: &Path, file: &str, extra: &[&str]) -> (String, serde_json::Value) {
    let out = dir.join(file);
    let mut args = vec!["resolvent", "--kernel", "power:0.5", "--t-max", "1", "--dt", "1e-2", "--out"];
    args.push(out.to_str().unwrap());
    args.extend_from_slice(extra);
    let o = fracevo(&args);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let csv = fs::read_to_string(&out).unwrap();
    let json = serde_json::from_str(&fs::read_to_string(out.with_extension("json")).unwrap()).unwrap();
    (csv, json)
}

#[test]
fn out_writes_csv_and_sidecar() {
    let dir = tempfile::tempdir().unwrap();
    let (csv, json) = run_to(dir.path(), "s.csv", &["--lambda", "2"]);
    let mut lines = csv.lines();
    assert!(lines.next().unwrap().contains(','));
    assert_eq!(lines.count(), 101);
    assert_eq!(json["command"], "resolvent");
    assert_eq!(json["config"]["lambda"], "2");
    assert_eq!(json["config"]["kernel"], "power:0.5");
    assert!(json["summary"].is_object());
}

#[test]
fn runs_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = run_to(dir.path(), "a.csv", &[]);
    let b = run_to(dir.path(), "b.csv", &[]);
    assert_eq!(a.0, b.0);
    assert_eq!(a.1["summary"], b.1["summary"]);

    let seeded = |file: &str| {
        let out = dir.path().join(file);
        let o = fracevo(&["decay", "--seed", "7", "--times", "8", "--out", out.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
        fs::read_to_string(out).unwrap()
    };
    assert_eq!(seeded("d1.csv"), seeded("d2.csv"));
}

#[test]
fn config_file_is_merged_under_flags() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.cfg");
    fs::write(&cfg, "# half-order resolvent\nkernel = power:0.5\nlambda = 3\nt_max = 1\ndt = 1e-2\n").unwrap();
    let out = dir.path().join("r.csv");
    let o = fracevo(&["resolvent", "--config", cfg.to_str().unwrap(), "--lambda", "4", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let json: serde_json::Value = serde_json::from_str(&fs::read_to_string(out.with_extension("json")).unwrap()).unwrap();
    assert_eq!(json["config"]["lambda"], "4");
    assert_eq!(json["config"]["t-max"], "1");

    fs::write(&cfg, "kernel = power:0.5\nbogus = 1\n").unwrap();
    let o = fracevo(&["resolvent", "--config", cfg.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
}
